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

// The lexicon behind the initial tagger: each word type with its most
// frequent tag, suffix n-grams (n = 2..5) with their most frequent tag, and
// default tags for numeric, capitalized and lowercase words.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rdr/corpus.hpp"
#include "rdr/text.hpp"

namespace rdr {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

template <typename V>
using StringMap = std::unordered_map<std::string, V, StringHash, std::equal_to<>>;

constexpr std::size_t kMinSuffix = 2;
constexpr std::size_t kMaxSuffix = 5;

// A suffix entry of order n is kept only when its winning tag count is
// strictly greater than this.
constexpr std::size_t suffix_min_count(std::size_t n) {
  switch (n) {
    case 5: return 1;
    case 4: return 2;
    case 3: return 3;
    default: return 4;
  }
}

struct Lexicon {
  StringMap<std::string> word_tags;
  // suffix_tags[n] for n in [2, 5]; slots 0 and 1 stay empty.
  std::array<StringMap<std::string>, kMaxSuffix + 1> suffix_tags;
  std::string default_numeric;
  std::string default_capitalized;
  std::string default_lowercase;

  bool operator==(const Lexicon&) const = default;

  const std::string* find_word(std::string_view w) const {
    auto it = word_tags.find(w);
    return it == word_tags.end() ? nullptr : &it->second;
  }

  const std::string* find_suffix(std::size_t n, std::string_view s) const {
    const auto& m = suffix_tags[n];
    auto it = m.find(s);
    return it == m.end() ? nullptr : &it->second;
  }
};

namespace detail {

// Tag frequencies in first-occurrence order; the winner is the highest
// count, earliest first occurrence on ties.
class TagTally {
 public:
  void add(std::string_view tag) {
    for (auto& [t, c] : counts_)
      if (t == tag) { ++c; return; }
    counts_.emplace_back(std::string(tag), 1);
  }

  const std::pair<std::string, std::size_t>& best() const {
    const auto* top = &counts_.front();
    for (const auto& e : counts_)
      if (e.second > top->second) top = &e;
    return *top;
  }

  bool empty() const { return counts_.empty(); }

 private:
  std::vector<std::pair<std::string, std::size_t>> counts_;
};

}  // namespace detail

enum class WordShape { kNumeric, kCapitalized, kLowercase };

// Checked in this order: any decimal digit, then uppercase first letter.
inline WordShape word_shape(std::string_view word) {
  if (utf8::contains_digit(word)) return WordShape::kNumeric;
  if (utf8::starts_uppercase(word)) return WordShape::kCapitalized;
  return WordShape::kLowercase;
}

inline Lexicon build_lexicon(const TaggedCorpus& corpus) {
  if (corpus.token_count() == 0) throw DataError("cannot build a lexicon from an empty corpus");

  StringMap<detail::TagTally> words;
  std::array<StringMap<detail::TagTally>, kMaxSuffix + 1> suffixes;
  std::array<detail::TagTally, 3> shapes;
  detail::TagTally all;

  for (const auto& sentence : corpus.sentences) {
    for (const auto& tok : sentence) {
      words[tok.word].add(tok.tag);
      all.add(tok.tag);
      shapes[static_cast<std::size_t>(word_shape(tok.word))].add(tok.tag);
      const std::size_t len = utf8::length(tok.word);
      for (std::size_t n = kMinSuffix; n <= kMaxSuffix && n < len; ++n)
        suffixes[n][std::string(utf8::last_chars(tok.word, n))].add(tok.tag);
    }
  }

  Lexicon lex;
  for (auto& [w, tally] : words) lex.word_tags.emplace(w, tally.best().first);
  for (std::size_t n = kMinSuffix; n <= kMaxSuffix; ++n) {
    for (auto& [s, tally] : suffixes[n]) {
      const auto& [tag, count] = tally.best();
      if (count > suffix_min_count(n)) lex.suffix_tags[n].emplace(s, tag);
    }
  }
  const std::string& fallback = all.best().first;
  auto pick = [&](WordShape shape) {
    const auto& tally = shapes[static_cast<std::size_t>(shape)];
    return tally.empty() ? fallback : tally.best().first;
  };
  lex.default_numeric = pick(WordShape::kNumeric);
  lex.default_capitalized = pick(WordShape::kCapitalized);
  lex.default_lowercase = pick(WordShape::kLowercase);
  return lex;
}

inline constexpr std::string_view kNumericKey = "%%NUM%%";
inline constexpr std::string_view kCapitalizedKey = "%%CAP%%";
inline constexpr std::string_view kLowercaseKey = "%%LOW%%";

inline std::string suffix_key_prefix(std::size_t n) { return "%%S" + std::to_string(n) + "%%"; }

// Defaults first, then suffixes by (n, suffix), then words; byte-wise order.
inline std::string serialize_lexicon(const Lexicon& lex) {
  std::string out;
  auto line = [&](std::string_view key, std::string_view tag) {
    out.append(key);
    out += '\t';
    out.append(tag);
    out += '\n';
  };
  auto sorted = [](const StringMap<std::string>& m) {
    std::vector<const std::pair<const std::string, std::string>*> v;
    v.reserve(m.size());
    for (const auto& e : m) v.push_back(&e);
    std::sort(v.begin(), v.end(), [](auto* a, auto* b) { return a->first < b->first; });
    return v;
  };

  line(kNumericKey, lex.default_numeric);
  line(kCapitalizedKey, lex.default_capitalized);
  line(kLowercaseKey, lex.default_lowercase);
  for (std::size_t n = kMinSuffix; n <= kMaxSuffix; ++n) {
    const std::string prefix = suffix_key_prefix(n);
    for (const auto* e : sorted(lex.suffix_tags[n])) line(prefix + e->first, e->second);
  }
  for (const auto* e : sorted(lex.word_tags)) line(e->first, e->second);
  return out;
}

inline Lexicon parse_lexicon(std::string_view text) {
  Lexicon lex;
  std::array<bool, 3> have_default{};
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (line.empty()) return;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size())
      throw ParseError(line_no, "expected 'key<TAB>tag'");
    std::string_view key = line.substr(0, tab);
    std::string_view tag = line.substr(tab + 1);
    if (tag.find_first_of(" \t") != std::string_view::npos) throw ParseError(line_no, "tag contains whitespace");

    auto set_default = [&](std::size_t slot, std::string& dst) {
      if (have_default[slot]) throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
      have_default[slot] = true;
      dst = std::string(tag);
    };
    if (key == kNumericKey) return set_default(0, lex.default_numeric);
    if (key == kCapitalizedKey) return set_default(1, lex.default_capitalized);
    if (key == kLowercaseKey) return set_default(2, lex.default_lowercase);

    for (std::size_t n = kMinSuffix; n <= kMaxSuffix; ++n) {
      const std::string prefix = suffix_key_prefix(n);
      if (key.starts_with(prefix)) {
        std::string_view suffix = key.substr(prefix.size());
        if (utf8::length(suffix) != n)
          throw ParseError(line_no, "suffix entry '" + std::string(key) + "' is not of length " + std::to_string(n));
        if (!lex.suffix_tags[n].emplace(suffix, tag).second)
          throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
        return;
      }
    }
    if (!lex.word_tags.emplace(key, tag).second)
      throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
  });
  if (!have_default[0] || !have_default[1] || !have_default[2])
    throw ParseError(0, "lexicon lacks one of the default tag entries");
  return lex;
}

}  // namespace rdr
