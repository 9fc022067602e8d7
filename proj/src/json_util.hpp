#pragma once

// Exact-number conversions between nlohmann::json and GMP values. Private to
// the library.

#include "coxcheck/exactmath.hpp"
#include "coxcheck/instance.hpp"

#include <json.hpp>

#include <regex>
#include <string>
#include <string_view>

namespace coxcheck::jsonio {

using json = nlohmann::ordered_json;

inline std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
inline std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

[[noreturn]] inline void fail(const std::string& pointer, const std::string& message) {
  throw InputError(pointer.empty() ? "/" : pointer, message);
}

inline Integer to_integer(const json& j, const std::string& ptr) {
  if (j.is_number_float()) fail(ptr, "floating-point literal is not allowed (write big integers as strings)");
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    static const std::regex pattern(R"(\s*[-+]?\d+\s*)");
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, pattern)) fail(ptr, "expected an integer, got \"" + s + "\"");
    std::string t;
    for (char ch : s)
      if (ch != ' ' && ch != '+' && ch != '\t') t += ch;
    return Integer(t);
  }
  fail(ptr, "expected an integer");
}

inline Rational to_rational_value(const json& j, const std::string& ptr) {
  if (j.is_string()) {
    static const std::regex pattern(R"(\s*([-+]?\d+)\s*(/\s*(\d+)\s*)?)");
    std::smatch match;
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, match, pattern)) fail(ptr, "expected an exact rational \"p/q\", got \"" + s + "\"");
    std::string num = match[1].str();
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    Integer den = match[3].matched ? Integer(match[3].str()) : Integer(1);
    if (den == 0) fail(ptr, "zero denominator");
    Rational q(Integer(num), den);
    q.canonicalize();
    return q;
  }
  return Rational(to_integer(j, ptr));
}

inline IntVector to_int_vector(const json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array of integers");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(to_integer(j[i], child(ptr, i)));
  return v;
}

inline RatVector to_rat_vector(const json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array of rationals");
  RatVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(to_rational_value(j[i], child(ptr, i)));
  return v;
}

inline std::vector<IntVector> to_int_vectors(const json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array of integer vectors");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(to_int_vector(j[i], child(ptr, i)));
  return out;
}

inline std::size_t to_count(const json& j, const std::string& ptr) {
  Integer z = to_integer(j, ptr);
  if (z < 0 || !z.fits_ulong_p()) fail(ptr, "expected a non-negative count");
  return z.get_ui();
}

inline json from_integer(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

inline json from_rational(const Rational& q) {
  if (q.get_den() == 1) return from_integer(q.get_num());
  return json(q.get_str());
}

inline json from_int_vector(std::span<const Integer> v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(from_integer(z));
  return a;
}

inline json from_rat_vector(std::span<const Rational> v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(from_rational(q));
  return a;
}

inline json from_index_set(const IndexSet& s) {
  json a = json::array();
  for (auto i : s) a.push_back(i + 1);
  return a;
}

inline IndexSet to_index_set(const json& j, const std::string& ptr, std::size_t limit) {
  if (!j.is_array()) fail(ptr, "expected an array of 1-based indices");
  IndexSet s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::size_t k = to_count(j[i], child(ptr, i));
    if (k == 0 || k > limit) fail(child(ptr, i), "index " + std::to_string(k) + " outside 1.." + std::to_string(limit));
    s.push_back(k - 1);
  }
  return s;
}

/// Parses text, turning syntax errors into "line L, column C" diagnostics.
inline json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    auto cut = what.find("parse error");
    what = cut == std::string::npos ? what : what.substr(cut);
    if (what.rfind("parse error at", 0) == 0 && what.find(": ") != std::string::npos)
      what = what.substr(what.find(": ") + 2);
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column),
                     "JSON syntax error: " + what);
  }
}

/// Top-level keys one per line, values compact.
inline std::string dump_lines(const json& object) {
  std::string out = "{\n";
  std::size_t k = 0;
  for (const auto& [key, value] : object.items()) {
    out += "  " + json(key).dump() + ": " + value.dump();
    out += ++k < object.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

}  // namespace coxcheck::jsonio
