#include "absgame/transcript.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace absgame {

namespace {

constexpr std::array<std::string_view, 11> kKinds = {"config", "constants", "move",  "level", "monitor", "sep",
                                                     "close",  "final",     "forfeit", "error", "default"};

bool known_kind(std::string_view k) {
  for (auto s : kKinds) {
    if (s == k) return true;
  }
  return false;
}

long parse_long(std::string_view s) {
  if (s.empty() || s.size() > 18) throw ParseError("bad integer '" + std::string(s) + "'");
  long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError("bad integer '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  if (s.size() > 1 && s.front() == '0') throw ParseError("bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = kDigits[value & 0xf];
    value >>= 4;
  }
  return s;
}

std::string end_line(const std::vector<std::string>& body) {
  std::string joined;
  for (const auto& l : body) {
    joined += l;
    joined += '\n';
  }
  return "end checksum=" + hex64(fnv1a64(joined)) + " lines=" + std::to_string(body.size());
}

std::string render_transcript(const std::vector<std::string>& body) {
  std::string out;
  for (const auto& l : body) {
    out += l;
    out += '\n';
  }
  out += end_line(body);
  out += '\n';
  return out;
}

Rational parse_pq(std::string_view text) {
  if (text.find('/') == std::string_view::npos) throw ParseError("rational '" + std::string(text) + "' is not p/q");
  return Rational::parse(text);
}

ParsedTranscript parse_transcript(std::string_view text) {
  ParsedTranscript t;
  if (text.empty()) throw TranscriptError(1, "empty transcript");
  if (text.back() != '\n') {
    long n = 1;
    for (char c : text) n += (c == '\n');
    throw TranscriptError(n, "truncated line (no trailing newline)");
  }
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.front() != kTranscriptHeader) throw TranscriptError(1, "bad header");
  t.body.emplace_back(lines.front());
  bool ended = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const long lineno = static_cast<long>(i + 1);
    if (ended) throw TranscriptError(lineno, "content after end record");
    Record r;
    try {
      for (unsigned char c : lines[i]) {
        if (c < 0x20 || c > 0x7e) throw ParseError("non-printable byte");
      }
      r = Record::parse(lines[i]);
    } catch (const ParseError& e) {
      throw TranscriptError(lineno, e.what());
    }
    if (r.kind == "end") {
      if (r.fields.size() != 2 || r.fields[0].first != "checksum" || r.fields[1].first != "lines") {
        throw TranscriptError(lineno, "malformed end record");
      }
      const std::string& cs = r.fields[0].second;
      if (cs.size() != 16 || cs.find_first_not_of("0123456789abcdef") != std::string::npos) {
        throw TranscriptError(lineno, "malformed checksum");
      }
      long declared = 0;
      try {
        declared = parse_long(r.fields[1].second);
      } catch (const ParseError& e) {
        throw TranscriptError(lineno, e.what());
      }
      if (declared != static_cast<long>(t.body.size())) {
        throw TranscriptError(lineno, "end record declares " + std::to_string(declared) + " lines, found " +
                                          std::to_string(t.body.size()));
      }
      t.end = r;
      ended = true;
      continue;
    }
    if (!known_kind(r.kind)) throw TranscriptError(lineno, "unknown record kind '" + r.kind + "'");
    if (i == 1 && r.kind != "config") throw TranscriptError(lineno, "expected config record");
    try {
      if (r.kind == "move") {
        parse_long(r.at("round"));
        const std::string& p = r.at("player");
        if (p != "bob" && p != "alice") throw ParseError("bad player '" + p + "'");
        Ball(parse_pq(r.at("center")), parse_pq(r.at("radius")));
      }
    } catch (const std::exception& e) {
      throw TranscriptError(lineno, e.what());
    }
    t.body.emplace_back(lines[i]);
    t.records.push_back(std::move(r));
  }
  if (!ended) throw TranscriptError(static_cast<long>(lines.size()), "missing end record (truncated transcript)");
  if (t.records.empty()) throw TranscriptError(2, "missing config record");
  return t;
}

std::vector<Ball> bob_balls(const ParsedTranscript& t) {
  std::vector<Ball> out;
  for (const Record& r : t.records) {
    if (r.kind == "move" && r.at("player") == "bob") out.emplace_back(parse_pq(r.at("center")), parse_pq(r.at("radius")));
  }
  return out;
}

std::vector<Ball> load_bob_balls(const std::filesystem::path& path) { return bob_balls(parse_transcript(read_file(path))); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace absgame
