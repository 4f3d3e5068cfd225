#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mollify/polynomial.hpp"

namespace mollify {

// Run configuration in a line-oriented key=value format:
//
//   # comment
//   mode = sweep
//   Q = 300
//   P1 = 0, 4.86, 0.29      (coefficients from x^0 upwards)
//
// Keys are case-sensitive. Unknown keys, duplicate keys and malformed lines
// are rejected with the source name and line number.
struct RunConfig {
  std::string mode;
  std::map<std::string, std::string> params;  // every mode key, resolved
  std::optional<std::string> output_path;
  std::uint64_t seed = 1;
  unsigned workers = 0;  // 0: available parallelism

  bool has(const std::string& key) const { return params.count(key) != 0; }
  const std::string& get(const std::string& key) const;
  double get_double(const std::string& key) const;
  long get_int(const std::string& key) const;
  Polynomial get_polynomial(const std::string& key) const;
};

const std::vector<std::string>& known_modes();
// Parameter keys accepted for a mode, excluding the shared keys mode,
// output, seed and workers.
std::vector<std::string> mode_keys(const std::string& mode);
std::map<std::string, std::string> mode_defaults(const std::string& mode);

// Raw key=value entries with the line each came from.
struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};
std::vector<ConfigEntry> parse_config_text(const std::string& text, const std::string& origin);
std::vector<ConfigEntry> load_config_file(const std::string& path);

// Defaults for the mode, then file entries, then overrides. Throws UsageError
// on unknown keys or values that do not parse as the key's type.
RunConfig resolve_config(const std::string& mode, const std::vector<ConfigEntry>& file_entries,
                         const std::map<std::string, std::string>& overrides,
                         const std::string& origin = "<config>");

// Fully resolved config in the same key=value format, loadable as-is.
std::string to_text(const RunConfig& cfg);

std::string format_double(double v, int digits = 17);
std::string format_polynomial(const Polynomial& p);

}  // namespace mollify
