// Copyright 2026 The rdrtag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// UTF-8 helpers and the error types shared by every module.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rdr {

// Malformed input file. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that cannot be processed (misaligned corpora, bad k, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace utf8 {

inline bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

// Number of code points. Invalid sequences count one per lead byte.
inline std::size_t length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if (!is_continuation(c)) ++n;
  return n;
}

// The last n code points of s, or an empty view when s holds fewer than n.
inline std::string_view last_chars(std::string_view s, std::size_t n) {
  if (n == 0) return s.substr(s.size());
  std::size_t pos = s.size();
  std::size_t seen = 0;
  while (pos > 0) {
    --pos;
    if (!is_continuation(static_cast<unsigned char>(s[pos])) && ++seen == n)
      return s.substr(pos);
  }
  return {};
}

// Proper suffix of exactly n code points: present only when s is strictly longer.
inline std::string_view proper_suffix(std::string_view s, std::size_t n) {
  if (length(s) <= n) return {};
  return last_chars(s, n);
}

// Decodes the code point starting at s[i]; advances i. Malformed bytes
// decode as themselves.
inline char32_t decode(std::string_view s, std::size_t& i) {
  auto c = static_cast<unsigned char>(s[i++]);
  int extra = 0;
  char32_t cp = c;
  if (c >= 0xF0) { extra = 3; cp = c & 0x07; }
  else if (c >= 0xE0) { extra = 2; cp = c & 0x0F; }
  else if (c >= 0xC0) { extra = 1; cp = c & 0x1F; }
  for (; extra > 0 && i < s.size() && is_continuation(static_cast<unsigned char>(s[i])); --extra)
    cp = (cp << 6) | (static_cast<unsigned char>(s[i++]) & 0x3F);
  return cp;
}

// Unicode decimal digits (general category Nd). Every Nd block is a run of
// ten code points; the table lists the zero of each run we recognize.
inline bool is_decimal_digit(char32_t cp) {
  static constexpr char32_t kZeros[] = {
      0x0030, 0x0660, 0x06F0, 0x07C0, 0x0966, 0x09E6, 0x0A66, 0x0AE6, 0x0B66,
      0x0BE6, 0x0C66, 0x0CE6, 0x0D66, 0x0DE6, 0x0E50, 0x0ED0, 0x0F20, 0x1040,
      0x1090, 0x17E0, 0x1810, 0x1946, 0x19D0, 0x1A80, 0x1A90, 0x1B50, 0x1BB0,
      0x1C40, 0x1C50, 0xA620, 0xA8D0, 0xA900, 0xA9D0, 0xA9F0, 0xAA50, 0xABF0,
      0xFF10};
  for (char32_t z : kZeros)
    if (cp >= z && cp < z + 10) return true;
  return false;
}

// Uppercase letters in the Latin, Greek, Cyrillic and Armenian ranges.
inline bool is_uppercase(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return true;
  if (cp < 0xC0) return false;
  if (cp <= 0xDE) return cp != 0xD7;
  // Latin Extended-A / -B pairs alternate upper, lower.
  if (cp >= 0x0100 && cp <= 0x0137) return cp % 2 == 0;
  if (cp >= 0x0139 && cp <= 0x0148) return cp % 2 == 1;
  if (cp >= 0x014A && cp <= 0x0177) return cp % 2 == 0;
  if (cp == 0x0178 || cp == 0x0179 || cp == 0x017B || cp == 0x017D) return true;
  if (cp >= 0x0386 && cp <= 0x03AB) return cp != 0x0387 && cp != 0x038B && cp != 0x038D && cp != 0x03A2;
  if (cp >= 0x0400 && cp <= 0x042F) return true;
  if (cp >= 0x0460 && cp <= 0x04FF) return cp % 2 == 0 && !(cp >= 0x0482 && cp <= 0x0489);
  if (cp >= 0x0531 && cp <= 0x0556) return true;
  if (cp >= 0x1E00 && cp <= 0x1EFF) return cp % 2 == 0;
  return false;
}

inline bool contains_digit(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    if (is_decimal_digit(decode(s, i))) return true;
  }
  return false;
}

inline bool starts_uppercase(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  return is_uppercase(decode(s, i));
}

}  // namespace utf8

// Splits on runs of ASCII spaces; empty fields are dropped.
inline std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Iterates the LF-separated lines of text, stripping a trailing CR.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++line_no, line);
    start = end + 1;
  }
}

}  // namespace rdr
