#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace cxhyp {

inline constexpr const char* kToolName = "cxhyp";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchemaVersion = "1";

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_report_format(const std::string& name); // throws ConfigError

// Machine-readable run record. Numeric values serialize with enough digits to
// round-trip losslessly.
class Report {
 public:
  using Value = std::variant<double, std::int64_t, std::uint64_t, bool, std::string>;

  explicit Report(std::string command);

  void input(const std::string& key, Value v);
  void output(const std::string& key, Value v);
  void provenance(const std::string& formula);
  void seed(std::uint64_t s);
  void wall_clock_seconds(double s);

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
  std::string render(ReportFormat f) const;

  const std::map<std::string, Value>& outputs() const { return outputs_; }

 private:
  std::string command_;
  std::map<std::string, Value> inputs_;
  std::map<std::string, Value> outputs_;
  std::vector<std::string> provenance_;
  std::uint64_t seed_ = 0;
  bool has_seed_ = false;
  double wall_clock_ = 0.0;
};

} // namespace cxhyp
