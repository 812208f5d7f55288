#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <fstream>

#include "cxhyp/config.hpp"
#include "cxhyp/errors.hpp"
#include "cxhyp/report.hpp"
#include "cxhyp/rng.hpp"
#include "cxhyp/verify.hpp"
#include "cxhyp/words.hpp"

using namespace cxhyp;

TEST_SUITE_BEGIN("plumbing");

TEST_CASE("word reduction cancels inverse pairs") {
  const Letter a{1, 0, 1}, ai{1, 0, -1}, b{2, 1, 1};
  CHECK(reduce_word({a, ai}).empty());
  CHECK(reduce_word({a, b, ai}).size() == 3);
  CHECK(reduce_word({a, b, Letter{2, 1, -1}, ai}).empty());
  RngStream rng(77);
  for (int k = 0; k < 500; ++k) {
    Word w;
    const int len = int(rng.next_u64() % 14);
    for (int i = 0; i < len; ++i)
      w.push_back({std::uint8_t(1 + rng.next_u64() % 2), std::uint16_t(rng.next_u64() % 2),
                   std::int8_t(rng.next_double() < 0.5 ? 1 : -1)});
    const Word r = reduce_word(w);
    CHECK(r.size() <= w.size());
    CHECK(reduce_word(r) == r);
    for (std::size_t i = 0; i + 1 < r.size(); ++i) CHECK_FALSE(is_inverse_pair(r[i], r[i + 1]));
  }
}

TEST_CASE("reduced word counting") {
  CHECK(count_reduced_words(4, 1) == 4);
  CHECK(count_reduced_words(4, 2) == 4 + 4 * 3);
  CHECK(count_reduced_words(16, 4) == 16ull + 16 * 15 + 16 * 15 * 15 + 16ull * 15 * 15 * 15);
}

TEST_CASE("complex literals") {
  CHECK(parse_complex("1.5") == Complex{1.5, 0.0});
  CHECK(parse_complex("-2i") == Complex{0.0, -2.0});
  CHECK(parse_complex("0.25+0.5i") == Complex{0.25, 0.5});
  CHECK(parse_complex("1e-3-2e2i") == Complex{1e-3, -200.0});
  CHECK(parse_complex("i") == Complex{0.0, 1.0});
  CHECK_THROWS_AS(parse_complex("fish"), ConfigError);
}

TEST_CASE("config parsing") {
  const Config cfg = parse_config("# demo\n"
                                  "[group1]\n"
                                  "construction = \"regular_polygon\"\n"
                                  "genus = 2\n"
                                  "\n"
                                  "[placement]\n"
                                  "distance = 4.25 # spacing\n"
                                  "values = [1, 2, 3]\n");
  CHECK(cfg.at("group1").at("construction").as_string("construction") == "regular_polygon");
  CHECK(cfg.at("placement").at("distance").as_number("distance") == 4.25);
  CHECK(cfg.at("placement").at("values").as_array("values").size() == 3);

  CHECK_THROWS_WITH_AS(parse_config("[g]\nkey value\n"), doctest::Contains("expected key"),
                       ConfigError);
  CHECK_THROWS_AS(parse_config("[unterminated\n"), ConfigError);

  // missing keys are named in the error
  const Config partial = parse_config("[group1]\nconstruction = \"regular_polygon\"\n");
  CHECK_THROWS_WITH_AS(build_combine_setup(partial), doctest::Contains("genus"), ConfigError);
}

TEST_CASE("combine setup from config") {
  const Config cfg = parse_config("[group1]\n"
                                  "construction = \"regular_polygon\"\n"
                                  "genus = 2\n"
                                  "[group2]\n"
                                  "construction = \"schottky\"\n"
                                  "translation_length = 6.0\n"
                                  "[placement]\n"
                                  "distance = 5.0\n"
                                  "rotation = 0.3\n");
  const CombineSetup setup = build_combine_setup(cfg);
  CHECK(setup.group1.generators().size() == 4);
  CHECK(setup.group2.generators().size() == 1);
  const auto cls = classify_pair(setup.group1.line(), setup.group2.line());
  CHECK(cls.kind == LinePairClass::Kind::Ultraparallel);
  CHECK(cls.value == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("explicit matrix groups from config") {
  const Config cfg = parse_config(
      "[group1]\n"
      "construction = \"explicit_matrices\"\n"
      "line_polar = [\"1\", \"0\", \"0\"]\n"
      "generator_count = 1\n"
      "generator1_row1 = [\"1\", \"0\", \"0\"]\n"
      "generator1_row2 = [\"0\", \"1.25\", \"0.75\"]\n"
      "generator1_row3 = [\"0\", \"0.75\", \"1.25\"]\n"
      "[group2]\n"
      "construction = \"regular_polygon\"\n"
      "genus = 2\n"
      "[placement]\n"
      "distance = 4.2\n");
  const CombineSetup setup = build_combine_setup(cfg);
  CHECK(setup.group1.generators().size() == 1);
  // bad construction name is reported
  Config broken = cfg;
  broken["group1"].values["construction"] = ConfigValue{std::string("squares")};
  CHECK_THROWS_WITH_AS(build_combine_setup(broken), doctest::Contains("squares"), ConfigError);
}

TEST_CASE("report json round-trips numeric fields losslessly") {
  Report r("demo");
  const double values[] = {1.0 / 3.0, 2.813658227494590505535276710459343,
                           1.2345678901234567e-7, 4.0 * std::atan(1.0)};
  r.input("a", values[0]);
  r.output("b", values[1]);
  r.output("c", values[2]);
  r.output("d", values[3]);
  r.output("count", std::uint64_t(123456789));
  r.output("flag", true);
  r.provenance("b = 2 log coth(1/4)");
  r.seed(42);
  const std::string text = r.to_json();
  const nlohmann::json parsed = nlohmann::json::parse(text);
  CHECK(parsed["inputs"]["a"].get<double>() == values[0]);
  CHECK(parsed["outputs"]["b"].get<double>() == values[1]);
  CHECK(parsed["outputs"]["c"].get<double>() == values[2]);
  CHECK(parsed["outputs"]["d"].get<double>() == values[3]);
  CHECK(parsed["outputs"]["count"].get<std::uint64_t>() == 123456789);
  CHECK(parsed["seed"].get<std::uint64_t>() == 42);
  CHECK(parsed["schema_version"] == kReportSchemaVersion);
  // tolerances ride along with every report
  CHECK(parsed["tolerances"]["algebraic"].get<double>() == 1e-9);
}

TEST_CASE("report validates against the shipped schema") {
  Report r("demo");
  r.output("x", 1.5);
  r.seed(7);
  const nlohmann::json parsed = nlohmann::json::parse(r.to_json());
  std::ifstream schema_file(CXHYP_SOURCE_DIR "/schema/report.schema.json");
  REQUIRE(schema_file.good());
  const nlohmann::json schema = nlohmann::json::parse(schema_file);
  for (const auto& key : schema["required"]) {
    CAPTURE(key.get<std::string>());
    CHECK(parsed.contains(key.get<std::string>()));
  }
  const auto& props = schema["properties"];
  for (auto it = parsed.begin(); it != parsed.end(); ++it) {
    CAPTURE(it.key());
    CHECK(props.contains(it.key()));
    const std::string want = props[it.key()]["type"].get<std::string>();
    const auto& v = it.value();
    if (want == "string") CHECK(v.is_string());
    if (want == "object") CHECK(v.is_object());
    if (want == "array") CHECK(v.is_array());
    if (want == "number") CHECK(v.is_number());
    if (want == "integer") CHECK(v.is_number_integer());
  }
}

TEST_CASE("suite registry rejects unknown names") {
  CHECK(cxhyp::verify::suite_names().size() == 6);
  CHECK_THROWS_AS(cxhyp::verify::run_suite("bogus", 1), ConfigError);
}

TEST_CASE("report renders csv and text") {
  Report r("demo");
  r.input("chi", std::int64_t(-2));
  r.output("width", 0.25);
  CHECK(r.to_csv().find("output,width,0.25") != std::string::npos);
  CHECK(r.to_text().find("width = 0.25") != std::string::npos);
  CHECK_THROWS_AS(parse_report_format("yaml"), ConfigError);
}

TEST_SUITE_END();
