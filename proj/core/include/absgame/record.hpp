#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absgame/rational.hpp"

namespace absgame {

/// One transcript line: a kind followed by ordered key=value fields.
struct Record {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;

  Record() = default;
  explicit Record(std::string k) : kind(std::move(k)) {}

  Record& add(std::string key, std::string value);
  Record& add(std::string key, const Rational& value) { return add(std::move(key), value.str()); }
  Record& add(std::string key, long value) { return add(std::move(key), std::to_string(value)); }
  Record& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }

  /// nullptr when absent.
  const std::string* find(std::string_view key) const;
  /// Throws ParseError naming the key when absent.
  const std::string& at(std::string_view key) const;

  std::string line() const;
  /// Strict: non-empty kind, keys unique, no spaces or '=' inside values.
  static Record parse(std::string_view line);

  friend bool operator==(const Record&, const Record&) = default;
};

}  // namespace absgame
