#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "absgame/ball.hpp"
#include "absgame/record.hpp"

namespace absgame {

inline constexpr std::string_view kTranscriptHeader = "absgame-transcript v=1";

/// Parse failure that names the offending 1-based line.
class TranscriptError : public ParseError {
 public:
  TranscriptError(long line, const std::string& msg)
      : ParseError("line " + std::to_string(line) + ": " + msg), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t value);

/// The closing record for a body of lines (header included, end excluded).
std::string end_line(const std::vector<std::string>& body);
/// Body lines plus end line, newline terminated.
std::string render_transcript(const std::vector<std::string>& body);

struct ParsedTranscript {
  std::vector<std::string> body;  ///< raw lines before the end record, header included
  std::vector<Record> records;    ///< parsed body records, header excluded (records[i] is line i+2)
  Record end;
};

/// Strict structural parse; throws TranscriptError.
ParsedTranscript parse_transcript(std::string_view text);

/// Bob's balls in play order.
std::vector<Ball> bob_balls(const ParsedTranscript& t);
std::vector<Ball> load_bob_balls(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Rational field in strict "p/q" form.
Rational parse_pq(std::string_view text);

}  // namespace absgame
