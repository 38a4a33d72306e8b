#include "cavcool/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cavcool {

namespace {
std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

Config Config::parse_text(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw SchemaError(line, "expected 'key = value' (line " + std::to_string(lineno) + ")");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw SchemaError(line, "empty key");
    if (cfg.values_.count(key)) throw SchemaError(key, "duplicate key");
    cfg.values_[key] = value;
  }
  return cfg;
}

double Config::get_double(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw SchemaError(key, "missing required key");
  char* end = nullptr;
  const double v = std::strtod(it->second.c_str(), &end);
  if (end == it->second.c_str() || *end != '\0')
    throw SchemaError(key, "not a number: '" + it->second + "'");
  return v;
}

double Config::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

long long Config::get_int(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw SchemaError(key, "missing required key");
  char* end = nullptr;
  const long long v = std::strtoll(it->second.c_str(), &end, 10);
  if (end == it->second.c_str() || *end != '\0')
    throw SchemaError(key, "not an integer: '" + it->second + "'");
  return v;
}

long long Config::get_int(const std::string& key, long long fallback) const {
  return has(key) ? get_int(key) : fallback;
}

std::string Config::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw SchemaError(key, "missing required key");
  return it->second;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get_string(key);
  if (v == "on" || v == "true" || v == "1") return true;
  if (v == "off" || v == "false" || v == "0") return false;
  throw SchemaError(key, "expected on/off, true/false or 0/1, got '" + v + "'");
}

void Config::restrict_keys(const std::set<std::string>& allowed) const {
  for (const auto& [key, value] : values_) {
    if (key == "schema_version") continue;
    if (!allowed.count(key)) throw SchemaError(key, "unknown key");
  }
}

void Config::require_schema_version() const {
  if (get_int("schema_version") != 1)
    throw SchemaError("schema_version", "unsupported version (expected 1)");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<double> parse_linear_grid(const std::string& text) {
  double a = 0.0, b = 0.0;
  long n = 0;
  char tail = 0;
  const int got = std::sscanf(text.c_str(), "%lf:%lf:%ld%c", &a, &b, &n, &tail);
  if (got != 3 || n < 1) throw std::runtime_error("grid spec must be 'a:b:n' with n >= 1: " + text);
  std::vector<double> out;
  out.reserve(n);
  for (long i = 0; i < n; ++i)
    out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1));
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") != std::string::npos) {
      out += '"';
      for (char c : f) {
        if (c == '"') out += '"';
        out += c;
      }
      out += '"';
    } else {
      out += f;
    }
  }
  return out;
}

}  // namespace cavcool
