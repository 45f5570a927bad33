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

// Tagged and raw corpora in the one-sentence-per-line "word/TAG" format.

#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rdr/text.hpp"

namespace rdr {

struct Token {
  std::string word;
  std::string tag;

  bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

// Gold, initialized and predicted corpora all share this shape.
struct TaggedCorpus {
  std::vector<Sentence> sentences;

  bool operator==(const TaggedCorpus&) const = default;

  std::size_t token_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.size();
    return n;
  }
};

// Untagged text: sentences of words.
using RawSentence = std::vector<std::string>;
using RawCorpus = std::vector<RawSentence>;

constexpr char kDefaultSeparator = '/';

// Distinct tags in order of first occurrence.
inline std::vector<std::string> tagset(const TaggedCorpus& corpus) {
  std::vector<std::string> tags;
  std::unordered_set<std::string_view> seen;
  for (const auto& s : corpus.sentences)
    for (const auto& t : s)
      if (seen.insert(t.tag).second) tags.push_back(t.tag);
  return tags;
}

// Splits "word/TAG" at the rightmost separator, so "1/2/CD" is ("1/2", "CD").
inline Token split_token(std::string_view field, char separator, std::size_t line_no) {
  auto pos = field.rfind(separator);
  if (pos == std::string_view::npos)
    throw ParseError(line_no, "token '" + std::string(field) + "' lacks separator '" +
                                  std::string(1, separator) + "'");
  if (pos == 0) throw ParseError(line_no, "token '" + std::string(field) + "' has an empty word");
  if (pos + 1 == field.size())
    throw ParseError(line_no, "token '" + std::string(field) + "' has an empty tag");
  return Token{std::string(field.substr(0, pos)), std::string(field.substr(pos + 1))};
}

inline TaggedCorpus read_tagged_corpus(std::string_view text, char separator = kDefaultSeparator) {
  TaggedCorpus corpus;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto fields = split_spaces(line);
    if (fields.empty()) return;
    Sentence sentence;
    sentence.reserve(fields.size());
    for (auto f : fields) sentence.push_back(split_token(f, separator, line_no));
    corpus.sentences.push_back(std::move(sentence));
  });
  return corpus;
}

inline std::string write_tagged_corpus(const TaggedCorpus& corpus, char separator = kDefaultSeparator) {
  std::string out;
  for (const auto& s : corpus.sentences) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ' ';
      out += s[i].word;
      out += separator;
      out += s[i].tag;
    }
    out += '\n';
  }
  return out;
}

inline RawCorpus strip_tags(const TaggedCorpus& corpus) {
  RawCorpus raw;
  raw.reserve(corpus.sentences.size());
  for (const auto& s : corpus.sentences) {
    RawSentence words;
    words.reserve(s.size());
    for (const auto& t : s) words.push_back(t.word);
    raw.push_back(std::move(words));
  }
  return raw;
}

// Whitespace tokenization only; blank lines are skipped.
inline RawCorpus read_raw_corpus(std::string_view text) {
  RawCorpus raw;
  for_each_line(text, [&](std::size_t, std::string_view line) {
    auto fields = split_spaces(line);
    if (fields.empty()) return;
    raw.emplace_back(fields.begin(), fields.end());
  });
  return raw;
}

inline std::string write_raw_corpus(const RawCorpus& raw) {
  std::string out;
  for (const auto& s : raw) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ' ';
      out += s[i];
    }
    out += '\n';
  }
  return out;
}

struct Fold {
  TaggedCorpus train;
  TaggedCorpus test;
};

// Contiguous, sentence-aligned k-fold partition. The first (n mod k) parts
// get one extra sentence.
inline std::vector<Fold> split_folds(const TaggedCorpus& corpus, std::size_t k) {
  const std::size_t n = corpus.sentences.size();
  if (k < 2) throw DataError("fold count must be at least 2 (got " + std::to_string(k) + ")");
  if (k > n)
    throw DataError("fold count " + std::to_string(k) + " exceeds sentence count " + std::to_string(n));
  std::vector<std::size_t> bounds{0};
  for (std::size_t i = 0; i < k; ++i) bounds.push_back(bounds.back() + n / k + (i < n % k ? 1 : 0));

  std::vector<Fold> folds(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t s = 0; s < n; ++s) {
      auto& dst = (s >= bounds[i] && s < bounds[i + 1]) ? folds[i].test : folds[i].train;
      dst.sentences.push_back(corpus.sentences[s]);
    }
  }
  return folds;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw DataError("write failed for '" + path + "'");
}

}  // namespace rdr
