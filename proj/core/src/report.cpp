#include "cxhyp/report.hpp"

#include <json.hpp>

#include <sstream>

#include "cxhyp/errors.hpp"
#include "cxhyp/tolerances.hpp"

namespace cxhyp {

namespace {

using nlohmann::json;

json value_to_json(const Report::Value& v) {
  return std::visit([](const auto& x) { return json(x); }, v);
}

std::string value_to_string(const Report::Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          std::ostringstream os;
          os.precision(17);
          os << x;
          return os.str();
        } else {
          return std::to_string(x);
        }
      },
      v);
}

json tolerances_json() {
  return json{{"algebraic", tol::alg},
              {"null_classification", tol::null},
              {"boundary_membership", tol::unit},
              {"pair_classification", tol::cls},
              {"geometric_incidence", tol::geo},
              {"certificate", tol::cert}};
}

} // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw ConfigError("unknown output format: " + name + " (expected json, csv, or text)");
}

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::input(const std::string& key, Value v) { inputs_[key] = std::move(v); }
void Report::output(const std::string& key, Value v) { outputs_[key] = std::move(v); }
void Report::provenance(const std::string& formula) { provenance_.push_back(formula); }
void Report::seed(std::uint64_t s) {
  seed_ = s;
  has_seed_ = true;
}
void Report::wall_clock_seconds(double s) { wall_clock_ = s; }

std::string Report::to_json() const {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = kToolName;
  j["tool_version"] = kToolVersion;
  j["command"] = command_;
  j["units"] = "hyperbolic length/area/4-volume (curvature -1 normalization)";
  json in = json::object();
  for (const auto& [k, v] : inputs_) in[k] = value_to_json(v);
  j["inputs"] = in;
  json outj = json::object();
  for (const auto& [k, v] : outputs_) outj[k] = value_to_json(v);
  j["outputs"] = outj;
  j["provenance"] = provenance_;
  if (has_seed_) j["seed"] = seed_;
  j["tolerances"] = tolerances_json();
  j["wall_clock_seconds"] = wall_clock_;
  return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "section,key,value\n";
  os << "meta,command," << command_ << "\n";
  os << "meta,tool," << kToolName << " " << kToolVersion << "\n";
  if (has_seed_) os << "meta,seed," << seed_ << "\n";
  for (const auto& [k, v] : inputs_) os << "input," << k << "," << value_to_string(v) << "\n";
  for (const auto& [k, v] : outputs_) os << "output," << k << "," << value_to_string(v) << "\n";
  for (const std::string& p : provenance_) os << "provenance,formula,\"" << p << "\"\n";
  return os.str();
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command_ << " (" << kToolName << " " << kToolVersion << ")\n";
  if (!inputs_.empty()) {
    os << "inputs:\n";
    for (const auto& [k, v] : inputs_) os << "  " << k << " = " << value_to_string(v) << "\n";
  }
  os << "outputs:\n";
  for (const auto& [k, v] : outputs_) os << "  " << k << " = " << value_to_string(v) << "\n";
  if (!provenance_.empty()) {
    os << "formulas:\n";
    for (const std::string& p : provenance_) os << "  " << p << "\n";
  }
  if (has_seed_) os << "seed: " << seed_ << "\n";
  os << "units: hyperbolic length/area/4-volume (curvature -1 normalization)\n";
  return os.str();
}

std::string Report::render(ReportFormat f) const {
  switch (f) {
    case ReportFormat::Json: return to_json();
    case ReportFormat::Csv: return to_csv();
    case ReportFormat::Text: return to_text();
  }
  return to_json();
}

} // namespace cxhyp
