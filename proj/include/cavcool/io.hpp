#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Flat key-value config files:
//   schema_version = 1
//   kappa_hz = 7.5e5        # comment
// '#' starts a comment, blank lines are skipped. Unknown keys and malformed
// values raise SchemaError naming the offending key. All frequencies in
// files are plain Hz (_hz suffix); the library converts to rad/s internally.

namespace cavcool {

struct SchemaError : std::runtime_error {
  std::string key;
  SchemaError(const std::string& k, const std::string& what)
      : std::runtime_error("config key '" + k + "': " + what), key(k) {}
};

class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_text(const std::string& text);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key) const;
  long long get_int(const std::string& key, long long fallback) const;
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  /// Rejects any key outside `allowed` (schema_version is always allowed).
  void restrict_keys(const std::set<std::string>& allowed) const;
  /// Requires schema_version = 1.
  void require_schema_version() const;

 private:
  std::map<std::string, std::string> values_;
};

/// Deterministic shortest-roundtrip-ish formatting used for all CSV/JSON
/// numeric output ("%.12g", locale-independent).
std::string format_double(double v);

/// "a:b:n" -> n values linearly spaced over [a, b]; n = 1 gives {a}.
std::vector<double> parse_linear_grid(const std::string& text);

/// One RFC-4180-style CSV line (LF ending appended by the caller's stream).
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace cavcool
