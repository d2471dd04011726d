#include "absgame/record.hpp"

namespace absgame {

namespace {

bool valid_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '=') return false;
  }
  return true;
}

}  // namespace

Record& Record::add(std::string key, std::string value) {
  if (!valid_token(key)) throw std::invalid_argument("record key '" + key + "' is not a token");
  if (value.empty()) value = "-";
  for (char& c : value) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '=') c = '_';
  }
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

const std::string* Record::find(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return &v;
  }
  return nullptr;
}

const std::string& Record::at(std::string_view key) const {
  if (const std::string* v = find(key)) return *v;
  throw ParseError(kind + " record lacks field '" + std::string(key) + "'");
}

std::string Record::line() const {
  std::string s = kind;
  for (const auto& [k, v] : fields) {
    s += ' ';
    s += k;
    s += '=';
    s += v;
  }
  return s;
}

Record Record::parse(std::string_view line) {
  Record r;
  std::size_t pos = line.find(' ');
  r.kind = std::string(line.substr(0, pos));
  if (!valid_token(r.kind)) throw ParseError("bad record kind");
  while (pos != std::string_view::npos) {
    const std::size_t start = pos + 1;
    pos = line.find(' ', start);
    const std::string_view tok = line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    const std::size_t eq = tok.find('=');
    if (eq == std::string_view::npos) throw ParseError("field '" + std::string(tok) + "' lacks '='");
    const std::string_view key = tok.substr(0, eq);
    const std::string_view value = tok.substr(eq + 1);
    if (!valid_token(key) || !valid_token(value)) throw ParseError("malformed field '" + std::string(tok) + "'");
    if (r.find(key)) throw ParseError("duplicate field '" + std::string(key) + "'");
    r.fields.emplace_back(std::string(key), std::string(value));
  }
  return r;
}

}  // namespace absgame
