#pragma once

#include "json.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kimura::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "kimura-report/1";

enum class Format { json, csv, pretty };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "pretty") return Format::pretty;
  throw std::invalid_argument("unknown output format '" + s + "' (expected json, csv or pretty)");
}

struct Check {
  std::string key;
  bool pass = false;
  std::string detail;
  std::string defect;  ///< defect matrix or residual, on failure
};

/// Result of one command. Checks are serialized sorted by key, so the order
/// in which they were recorded never changes the output.
class Report {
public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Json& config() { return config_; }
  Json& results() { return results_; }
  const Json& results() const { return results_; }

  void check(std::string key, bool pass, std::string detail = {}, std::string defect = {}) {
    checks_.push_back({std::move(key), pass, std::move(detail), std::move(defect)});
  }
  void add(const Check& c) { checks_.push_back(c); }
  void set_timing_ms(double ms) { timing_ms_ = ms; }

  std::vector<Check> checks() const {
    std::vector<Check> out = checks_;
    std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.key < b.key; });
    return out;
  }
  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; }));
  }
  bool all_pass() const { return passed() == checks_.size(); }

  std::string render(Format f) const {
    switch (f) {
      case Format::json: return to_json();
      case Format::csv: return to_csv();
      case Format::pretty: return to_pretty();
    }
    return {};
  }

  std::string to_json() const {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = command_;
    j["config"] = config_.is_null() ? Json::object() : config_;
    j["results"] = results_.is_null() ? Json::object() : results_;
    Json arr = Json::array();
    for (const auto& c : checks()) {
      Json e;
      e["key"] = c.key;
      e["pass"] = c.pass;
      if (!c.detail.empty()) e["detail"] = c.detail;
      if (!c.defect.empty()) e["defect"] = c.defect;
      arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["summary"] = {{"checks", checks_.size()}, {"passed", passed()}, {"all_pass", all_pass()}};
    if (timing_ms_) j["timing_ms"] = *timing_ms_;
    return j.dump(2) + "\n";
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "command,key,pass,detail,defect\n";
    for (const auto& c : checks())
      os << csv_field(command_) << ',' << csv_field(c.key) << ',' << (c.pass ? "true" : "false") << ','
         << csv_field(c.detail) << ',' << csv_field(c.defect) << '\n';
    return os.str();
  }

  std::string to_pretty() const {
    std::ostringstream os;
    os << "command: " << command_ << '\n';
    if (!config_.is_null() && !config_.empty()) {
      os << "config:\n";
      pretty_value(os, config_, 1);
    }
    if (!results_.is_null() && !results_.empty()) {
      os << "results:\n";
      pretty_value(os, results_, 1);
    }
    os << "checks:\n";
    for (const auto& c : checks()) {
      os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.key;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << '\n';
      if (!c.defect.empty()) os << "         defect: " << c.defect << '\n';
    }
    os << "summary: " << passed() << "/" << checks_.size() << " checks passed\n";
    if (timing_ms_) os << "timing: " << *timing_ms_ << " ms\n";
    return os.str();
  }

private:
  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + '"';
  }

  static std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  static bool is_flat_array(const Json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
  }

  static void pretty_value(std::ostringstream& os, const Json& v, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    if (v.is_object()) {
      for (const auto& [key, val] : v.items()) {
        if (val.is_primitive()) os << pad << key << ": " << scalar(val) << '\n';
        else if (is_flat_array(val)) os << pad << key << ": " << flat(val) << '\n';
        else {
          os << pad << key << ":\n";
          pretty_value(os, val, depth + 1);
        }
      }
    } else if (v.is_array()) {
      for (const auto& e : v) {
        if (e.is_primitive()) os << pad << scalar(e) << '\n';
        else if (is_flat_array(e)) os << pad << flat(e) << '\n';
        else {
          os << pad << "-\n";
          pretty_value(os, e, depth + 1);
        }
      }
    } else {
      os << pad << scalar(v) << '\n';
    }
  }

  static std::string flat(const Json& arr) {
    std::string s = "[";
    bool first = true;
    for (const auto& e : arr) {
      if (!first) s += ", ";
      s += scalar(e);
      first = false;
    }
    return s + "]";
  }

  std::string command_;
  Json config_ = Json::object();
  Json results_ = Json::object();
  std::vector<Check> checks_;
  std::optional<double> timing_ms_;
};

}  // namespace kimura::cli
