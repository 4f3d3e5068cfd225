#include "mollify/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "mollify/errors.hpp"
#include "mollify/functionals.hpp"

namespace mollify {

namespace {

enum class KeyType { kString, kDouble, kInt, kPolynomial };

struct KeySpec {
  const char* name;
  KeyType type;
  const char* fallback;
};

const std::string kReferenceP1 = format_polynomial(MollifierSpec::reference().P1);
const std::string kReferenceP2 = format_polynomial(MollifierSpec::reference().P2);
const std::string kReferenceP3 = format_polynomial(MollifierSpec::reference().P3);

std::vector<KeySpec> specs_for(const std::string& mode) {
  using K = KeyType;
  if (mode == "reproduce") return {};
  if (mode == "optimize") {
    return {{"theta1", K::kDouble, "0.5"}, {"theta2", K::kDouble, "0.163"}, {"theta3", K::kDouble, "0.5"},
            {"d1", K::kInt, "5"},          {"d2", K::kInt, "5"},            {"d3", K::kInt, "2"},
            {"domain", K::kString, "second_moment"}};
  }
  if (mode == "scan") {
    return {{"theta2_lo", K::kDouble, "0.05"}, {"theta2_hi", K::kDouble, "0.25"},
            {"theta2_steps", K::kInt, "21"},   {"d1", K::kInt, "5"},
            {"d2", K::kInt, "5"},              {"d3", K::kInt, "2"}};
  }
  if (mode == "sweep") {
    return {{"Q", K::kDouble, "100"},       {"stride", K::kInt, "1"},
            {"theta1", K::kDouble, "0.5"},  {"theta2", K::kDouble, "0.163"},
            {"theta3", K::kDouble, "0.5"},  {"P1", K::kPolynomial, nullptr},
            {"P2", K::kPolynomial, nullptr}, {"P3", K::kPolynomial, nullptr},
            {"threshold", K::kDouble, "1e-08"}, {"pole_kill_count", K::kInt, "2"}};
  }
  if (mode == "kernels") {
    return {{"kernel", K::kString, "V"}, {"x", K::kDouble, "1"}, {"sigma", K::kString, "auto"},
            {"pole_kill_count", K::kInt, "2"}};
  }
  if (mode == "characters") return {{"q", K::kInt, "5"}};
  if (mode == "lfun") return {{"q", K::kInt, "5"}, {"index", K::kInt, "0"}, {"pole_kill_count", K::kInt, "2"}};
  if (mode == "kloosterman") return {{"scale", K::kInt, "2"}};
  throw UsageError("unknown mode '" + mode + "'");
}

const std::set<std::string> kShared = {"mode", "output", "seed", "workers"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

bool parse_long(const std::string& s, long& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtol(s.c_str(), &end, 10);
  return errno == 0 && end == s.c_str() + s.size();
}

bool parse_polynomial(const std::string& s, Polynomial& out) {
  std::vector<double> c;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    double v = 0.0;
    if (!parse_double(trim(item), v)) return false;
    c.push_back(v);
  }
  if (c.empty()) return false;
  if (static_cast<int>(c.size()) - 1 > Polynomial::kMaxDegree) return false;
  out = Polynomial(std::move(c));
  return true;
}

std::string canonical(const KeySpec& spec, const std::string& raw, const std::string& where) {
  const std::string v = trim(raw);
  auto bad = [&](const char* what) {
    return UsageError(where + ": key '" + spec.name + "' expects " + what + ", got '" + v + "'");
  };
  switch (spec.type) {
    case KeyType::kString:
      if (v.empty()) throw bad("a value");
      return v;
    case KeyType::kDouble: {
      double d = 0.0;
      if (!parse_double(v, d)) throw bad("a real number");
      return format_double(d);
    }
    case KeyType::kInt: {
      long n = 0;
      if (!parse_long(v, n)) throw bad("an integer");
      return std::to_string(n);
    }
    case KeyType::kPolynomial: {
      Polynomial p;
      if (!parse_polynomial(v, p)) throw bad("comma-separated coefficients");
      return format_polynomial(p);
    }
  }
  return v;
}

}  // namespace

std::string format_double(double v, int digits) {
  char buf[64];
  if (digits >= 17) {
    // shortest form that reads back to the same double
    for (int d = 15; d <= 17; ++d) {
      std::snprintf(buf, sizeof buf, "%.*g", d, v);
      if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (double c : p.coeffs()) {
    if (!out.empty()) out += ", ";
    out += format_double(c);
  }
  return out;
}

const std::vector<std::string>& known_modes() {
  static const std::vector<std::string> modes = {"reproduce", "optimize", "scan",  "sweep",
                                                 "kernels",   "characters", "lfun", "kloosterman"};
  return modes;
}

std::vector<std::string> mode_keys(const std::string& mode) {
  std::vector<std::string> keys;
  for (const auto& s : specs_for(mode)) keys.emplace_back(s.name);
  return keys;
}

std::map<std::string, std::string> mode_defaults(const std::string& mode) {
  std::map<std::string, std::string> out;
  for (const auto& s : specs_for(mode)) {
    if (s.fallback) {
      out[s.name] = s.fallback;
    } else if (std::string(s.name) == "P1") {
      out[s.name] = kReferenceP1;
    } else if (std::string(s.name) == "P2") {
      out[s.name] = kReferenceP2;
    } else {
      out[s.name] = kReferenceP3;
    }
  }
  return out;
}

std::vector<ConfigEntry> parse_config_text(const std::string& text, const std::string& origin) {
  std::vector<ConfigEntry> entries;
  std::set<std::string> seen;
  std::stringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string where = origin + ":" + std::to_string(line);
    if (eq == std::string::npos) throw UsageError(where + ": expected key = value");
    ConfigEntry e{trim(body.substr(0, eq)), trim(body.substr(eq + 1)), line};
    if (e.key.empty()) throw UsageError(where + ": missing key");
    if (!seen.insert(e.key).second) throw UsageError(where + ": duplicate key '" + e.key + "'");
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<ConfigEntry> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

RunConfig resolve_config(const std::string& mode, const std::vector<ConfigEntry>& file_entries,
                         const std::map<std::string, std::string>& overrides, const std::string& origin) {
  RunConfig cfg;
  cfg.mode = mode;
  const auto specs = specs_for(mode);
  cfg.params = mode_defaults(mode);

  auto apply = [&](const std::string& key, const std::string& value, const std::string& where) {
    if (key == "mode") {
      if (trim(value) != mode) {
        throw UsageError(where + ": config is for mode '" + trim(value) + "', running '" + mode + "'");
      }
      return;
    }
    if (key == "output") {
      cfg.output_path = trim(value);
      return;
    }
    if (key == "seed" || key == "workers") {
      long n = 0;
      if (!parse_long(trim(value), n) || n < 0) {
        throw UsageError(where + ": key '" + key + "' expects a nonnegative integer, got '" + trim(value) + "'");
      }
      if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(n);
      } else {
        cfg.workers = static_cast<unsigned>(n);
      }
      return;
    }
    const auto it = std::find_if(specs.begin(), specs.end(), [&](const KeySpec& s) { return key == s.name; });
    if (it == specs.end()) {
      throw UsageError(where + ": unknown key '" + key + "' for mode '" + mode + "'");
    }
    cfg.params[key] = canonical(*it, value, where);
  };

  for (const auto& e : file_entries) apply(e.key, e.value, origin + ":" + std::to_string(e.line));
  for (const auto& [k, v] : overrides) apply(k, v, "command line");
  for (const auto& s : specs) {
    cfg.params[s.name] = canonical(s, cfg.params[s.name], "default");
  }
  return cfg;
}

const std::string& RunConfig::get(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) throw UsageError("missing key '" + key + "'");
  return it->second;
}

double RunConfig::get_double(const std::string& key) const {
  double d = 0.0;
  if (!parse_double(get(key), d)) throw UsageError("key '" + key + "' is not a real number");
  return d;
}

long RunConfig::get_int(const std::string& key) const {
  long n = 0;
  if (!parse_long(get(key), n)) throw UsageError("key '" + key + "' is not an integer");
  return n;
}

Polynomial RunConfig::get_polynomial(const std::string& key) const {
  Polynomial p;
  if (!parse_polynomial(get(key), p)) throw UsageError("key '" + key + "' is not a coefficient list");
  return p;
}

std::string to_text(const RunConfig& cfg) {
  std::string out = "mode = " + cfg.mode + "\n";
  for (const auto& [k, v] : cfg.params) out += k + " = " + v + "\n";
  out += "seed = " + std::to_string(cfg.seed) + "\n";
  out += "workers = " + std::to_string(cfg.workers) + "\n";
  if (cfg.output_path) out += "output = " + *cfg.output_path + "\n";
  return out;
}

}  // namespace mollify
