#pragma once

// Line handling shared by the .tri and .nsc readers.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nsk/error.hpp"

namespace nsk::detail {

struct Line {
  std::string_view text;
  std::size_t number;
};

/// Yields data lines; `%` comments and blank lines are skipped.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::optional<Line> next() {
    while (pos_ < text_.size()) {
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view raw = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++number_;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      auto first = raw.find_first_not_of(" \t");
      if (first == std::string_view::npos || raw[first] == '%') continue;
      return Line{raw.substr(first), number_};
    }
    return std::nullopt;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

inline std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_size(std::string_view word, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw Error(ErrorKind::Overflow, "number '" + std::string(word) + "' out of range", line);
  if (ec != std::errc() || ptr != word.data() + word.size() || word.empty())
    throw Error(ErrorKind::Syntax, "expected a non-negative integer, got '" + std::string(word) + "'", line);
  return value;
}

inline std::int64_t parse_int64(std::string_view word, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw Error(ErrorKind::Overflow, "coordinate '" + std::string(word) + "' does not fit in 64 bits", line);
  if (ec != std::errc() || ptr != word.data() + word.size() || word.empty())
    throw Error(ErrorKind::Syntax, "expected an integer, got '" + std::string(word) + "'", line);
  return value;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "': file not found or unreadable");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace nsk::detail
