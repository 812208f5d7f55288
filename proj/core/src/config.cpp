#include "cxhyp/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cxhyp/errors.hpp"

namespace cxhyp {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

ConfigValue parse_scalar(const std::string& raw, int line_no) {
  const std::string t = trim(raw);
  if (t.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty value");
  if (t == "true") return {true};
  if (t == "false") return {false};
  if (t.front() == '"') {
    if (t.size() < 2 || t.back() != '"')
      throw ConfigError("config line " + std::to_string(line_no) + ": unterminated string");
    return {t.substr(1, t.size() - 2)};
  }
  try {
    std::size_t used = 0;
    const double d = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return {d};
  } catch (const std::exception&) {
    throw ConfigError("config line " + std::to_string(line_no) + ": cannot parse value '" + t +
                      "'");
  }
}

ConfigValue parse_value(const std::string& raw, int line_no) {
  const std::string t = trim(raw);
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']')
      throw ConfigError("config line " + std::to_string(line_no) + ": unterminated array");
    std::vector<ConfigValue> items;
    std::string body = t.substr(1, t.size() - 2);
    std::string cur;
    bool in_string = false;
    for (char c : body) {
      if (c == '"') in_string = !in_string;
      if (c == ',' && !in_string) {
        if (!trim(cur).empty()) items.push_back(parse_scalar(cur, line_no));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!trim(cur).empty()) items.push_back(parse_scalar(cur, line_no));
    return {items};
  }
  return parse_scalar(t, line_no);
}

} // namespace

double ConfigValue::as_number(const std::string& key) const {
  if (const double* d = std::get_if<double>(&v)) return *d;
  throw ConfigError("config key '" + key + "' must be a number");
}

const std::string& ConfigValue::as_string(const std::string& key) const {
  if (const std::string* s = std::get_if<std::string>(&v)) return *s;
  throw ConfigError("config key '" + key + "' must be a string");
}

const std::vector<ConfigValue>& ConfigValue::as_array(const std::string& key) const {
  if (const auto* a = std::get_if<std::vector<ConfigValue>>(&v)) return *a;
  throw ConfigError("config key '" + key + "' must be an array");
}

const ConfigValue& ConfigTable::at(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) throw ConfigError("missing config key '" + key + "'");
  return it->second;
}

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(line_no) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError("config line " + std::to_string(line_no) + ": empty section name");
      cfg[section]; // subsequent keys land here
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    cfg[section].values[key] = parse_value(line.substr(eq + 1), line_no);
  }
  return cfg;
}

Config parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

Complex parse_complex(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("empty complex literal");
  // Forms: "a", "bi", "a+bi", "a-bi" (decimal a, b; also "i" / "-i").
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') split = i;
  }
  const auto parse_real = [&](const std::string& s) -> double {
    try {
      std::size_t used = 0;
      const double d = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return d;
    } catch (const std::exception&) {
      throw ConfigError("cannot parse complex literal '" + text + "'");
    }
  };
  const auto parse_imag = [&](std::string s) -> double {
    if (s.empty() || s.back() != 'i')
      throw ConfigError("cannot parse complex literal '" + text + "'");
    s.pop_back();
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (t.back() == 'i') {
    if (split == std::string::npos) return {0.0, parse_imag(t)};
    return {parse_real(t.substr(0, split)), parse_imag(t.substr(split))};
  }
  if (split != std::string::npos && t.find('i') != std::string::npos)
    throw ConfigError("cannot parse complex literal '" + text + "'");
  return {parse_real(t), 0.0};
}

namespace {

CFuchsianGroup build_group(const ConfigTable& table, const std::string& name) {
  const std::string& kind = table.at("construction").as_string(name + ".construction");
  const ComplexLine l1 = ComplexLine::from_polar({{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
  if (kind == "regular_polygon") {
    const double genus = table.at("genus").as_number(name + ".genus");
    if (genus < 2.0 || genus != std::floor(genus))
      throw ConfigError(name + ".genus must be an integer >= 2");
    return regular_polygon_group(static_cast<int>(genus));
  }
  if (kind == "schottky") {
    const double len = table.at("translation_length").as_number(name + ".translation_length");
    if (!(len > 0.0)) throw ConfigError(name + ".translation_length must be positive");
    return CFuchsianGroup::create(
        l1, {embed_in_line(DiscIsometry::axis_translation(len))});
  }
  if (kind == "explicit_matrices") {
    const auto& rows_keys = table.at("line_polar").as_array(name + ".line_polar");
    if (rows_keys.size() != 3) throw ConfigError(name + ".line_polar needs 3 entries");
    HVector polar;
    Complex* slots[3] = {&polar.v1, &polar.v2, &polar.v3};
    for (int i = 0; i < 3; ++i)
      *slots[i] = parse_complex(rows_keys[i].as_string(name + ".line_polar"));
    const double count = table.at("generator_count").as_number(name + ".generator_count");
    if (count < 1.0 || count != std::floor(count))
      throw ConfigError(name + ".generator_count must be a positive integer");
    std::vector<Isometry> gens;
    for (int k = 1; k <= static_cast<int>(count); ++k) {
      Matrix3 m;
      for (int r = 0; r < 3; ++r) {
        const std::string key = "generator" + std::to_string(k) + "_row" + std::to_string(r + 1);
        const auto& row = table.at(key).as_array(name + "." + key);
        if (row.size() != 3) throw ConfigError(name + "." + key + " needs 3 entries");
        for (int c = 0; c < 3; ++c)
          m.m[r][c] = parse_complex(row[c].as_string(name + "." + key));
      }
      gens.push_back(Isometry::from_matrix(m));
    }
    return CFuchsianGroup::create(ComplexLine::from_polar(polar), std::move(gens));
  }
  throw ConfigError(name + ".construction '" + kind +
                    "' is not one of regular_polygon, schottky, explicit_matrices");
}

} // namespace

CombineSetup build_combine_setup(const Config& cfg) {
  const auto find = [&](const std::string& section) -> const ConfigTable& {
    const auto it = cfg.find(section);
    if (it == cfg.end()) throw ConfigError("missing config section [" + section + "]");
    return it->second;
  };
  const CFuchsianGroup g1 = build_group(find("group1"), "group1");
  const CFuchsianGroup g2_base = build_group(find("group2"), "group2");
  const ConfigTable& placement = find("placement");
  const double distance = placement.at("distance").as_number("placement.distance");
  if (!(distance > 0.0)) throw ConfigError("placement.distance must be positive");
  const double rotation =
      placement.has("rotation") ? placement.at("rotation").as_number("placement.rotation") : 0.0;

  const Isometry mover = axis_translation(std::tanh(0.5 * distance)) * rotation_in_line(rotation);
  std::vector<Isometry> gens;
  gens.reserve(g2_base.generators().size());
  for (const Isometry& g : g2_base.generators()) gens.push_back(mover * g * mover.inverse());
  CFuchsianGroup g2 = CFuchsianGroup::create(apply_line(mover, g2_base.line()), std::move(gens));
  return {g1, std::move(g2), distance, rotation};
}

} // namespace cxhyp
