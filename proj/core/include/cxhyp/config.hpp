#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cxhyp/groups.hpp"

namespace cxhyp {

// Minimal declarative config format: `[section]` / `[section.sub]` headers and
// `key = value` lines, where a value is a number, a "string", a boolean, or a
// flat [array]. Complex entries are written as "a+bi" strings.
struct ConfigValue {
  std::variant<double, std::string, bool, std::vector<ConfigValue>> v;

  double as_number(const std::string& key) const;
  const std::string& as_string(const std::string& key) const;
  const std::vector<ConfigValue>& as_array(const std::string& key) const;
};

struct ConfigTable {
  std::map<std::string, ConfigValue> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }
  const ConfigValue& at(const std::string& key) const; // throws ConfigError naming the key
};

using Config = std::map<std::string, ConfigTable>;

Config parse_config(const std::string& text);
Config parse_config_file(const std::string& path);

Complex parse_complex(const std::string& text); // "a+bi" / "a-bi" / "a" / "bi"

// A combination run: two groups and their relative placement.
struct CombineSetup {
  CFuchsianGroup group1;
  CFuchsianGroup group2;
  double distance;
  double rotation;
};

// Builds the configured groups: group1 on {(0,w)} centered at the origin,
// group2 carried to distance `placement.distance` along the common
// perpendicular after an in-line rotation by `placement.rotation`.
CombineSetup build_combine_setup(const Config& cfg);

} // namespace cxhyp
