#pragma once

#include "kimura/errors.hpp"
#include "kimura/motives.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>

// Motive spec files: one `key = value` per line, `#` starts a comment.
//
//   kind = surface      # point | lefschetz | curve | surface | abelian
//   q = 0
//   b2 = 9
//   rho = 9
//   t = 0
//
// Keys: kind, r, g, q, pg, b2, rho, k, seed, t, finite.

namespace kimura::cli {

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class Int>
Int parse_integer(const std::string& v, const std::string& key, int line) {
  Int out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw parse_error("value of '" + key + "' is not an integer: '" + v + "'", line);
  return out;
}

inline bool parse_bool(const std::string& v, const std::string& key, int line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw parse_error("value of '" + key + "' is not a boolean: '" + v + "'", line);
}

inline motives::Kind parse_kind(const std::string& v, int line) {
  using motives::Kind;
  for (Kind k : {Kind::point, Kind::lefschetz, Kind::curve, Kind::surface, Kind::abelian})
    if (v == motives::to_string(k)) return k;
  throw parse_error("unknown kind '" + v + "' (expected point, lefschetz, curve, surface or abelian)", line);
}

}  // namespace detail

inline motives::MotiveSpec parse_spec(std::istream& in) {
  motives::MotiveSpec spec;
  std::set<std::string> seen;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = detail::trim(std::string_view(raw).substr(0, raw.find('#')));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw parse_error("expected 'key = value', got '" + text + "'", line);
    const std::string key = detail::trim(std::string_view(text).substr(0, eq));
    const std::string value = detail::trim(std::string_view(text).substr(eq + 1));
    if (key.empty()) throw parse_error("missing key before '='", line);
    if (value.empty()) throw parse_error("missing value for '" + key + "'", line);
    if (!seen.insert(key).second) throw parse_error("duplicate key '" + key + "'", line);
    if (key == "kind") spec.kind = detail::parse_kind(value, line);
    else if (key == "r") spec.r = detail::parse_integer<int>(value, key, line);
    else if (key == "g") spec.g = detail::parse_integer<int>(value, key, line);
    else if (key == "q") spec.q = detail::parse_integer<int>(value, key, line);
    else if (key == "pg") spec.pg = detail::parse_integer<int>(value, key, line);
    else if (key == "b2") spec.b2 = detail::parse_integer<int>(value, key, line);
    else if (key == "rho") spec.rho = detail::parse_integer<int>(value, key, line);
    else if (key == "k") spec.k = detail::parse_integer<int>(value, key, line);
    else if (key == "seed") spec.seed = detail::parse_integer<std::uint64_t>(value, key, line);
    else if (key == "t") spec.t = detail::parse_integer<int>(value, key, line);
    else if (key == "finite") spec.finite = detail::parse_bool(value, key, line);
    else throw parse_error("unknown key '" + key + "'", line);
  }
  if (!seen.contains("kind")) throw parse_error("missing required key 'kind'", 0);
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), 0);
  }
  return spec;
}

inline motives::MotiveSpec parse_spec(const std::string& text) {
  std::istringstream in(text);
  return parse_spec(in);
}

inline motives::MotiveSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open spec file '" + path + "'", 0);
  return parse_spec(in);
}

}  // namespace kimura::cli
