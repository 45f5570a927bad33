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

// The 13-field context case a rule tree is evaluated against: a 5-word
// window of words and current tags plus the 2/3/4-character suffixes of the
// middle word.

#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rdr/corpus.hpp"
#include "rdr/text.hpp"

namespace rdr {

enum class Field : std::uint8_t {
  kPrev2Word,
  kPrev2Tag,
  kPrev1Word,
  kPrev1Tag,
  kWord,
  kCurrentTag,
  kNext1Word,
  kNext1Tag,
  kNext2Word,
  kNext2Tag,
  kSuffix2,
  kSuffix3,
  kSuffix4,
};

constexpr std::size_t kFieldCount = 13;

inline constexpr std::array<std::string_view, kFieldCount> kFieldNames = {
    "prev2Word", "prev2Tag", "prev1Word", "prev1Tag", "word",    "currentTag", "next1Word",
    "next1Tag",  "next2Word", "next2Tag", "suffix2",  "suffix3", "suffix4"};

constexpr std::string_view field_name(Field f) { return kFieldNames[static_cast<std::size_t>(f)]; }

inline std::optional<Field> field_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFieldCount; ++i)
    if (kFieldNames[i] == name) return static_cast<Field>(i);
  return std::nullopt;
}

// Anything the tree can be evaluated against.
template <typename T>
concept Case = requires(const T& c, Field f) {
  { c.field(f) } -> std::convertible_to<std::optional<std::string_view>>;
};

// Owning case; null fields are absent context (sentence boundary or a word
// too short for the suffix).
struct TagObject {
  std::array<std::optional<std::string>, kFieldCount> values;

  std::optional<std::string_view> field(Field f) const {
    const auto& v = values[static_cast<std::size_t>(f)];
    if (!v) return std::nullopt;
    return std::string_view(*v);
  }

  void set(Field f, std::optional<std::string> v) { values[static_cast<std::size_t>(f)] = std::move(v); }

  bool operator==(const TagObject&) const = default;
};

// Non-owning case over one position of a tagged sentence.
class WindowCase {
 public:
  WindowCase(std::span<const std::string> words, std::span<const std::string> tags, std::size_t pos)
      : words_(words), tags_(tags), pos_(pos) {}

  std::optional<std::string_view> field(Field f) const {
    switch (f) {
      case Field::kPrev2Word: return word_at(-2);
      case Field::kPrev2Tag: return tag_at(-2);
      case Field::kPrev1Word: return word_at(-1);
      case Field::kPrev1Tag: return tag_at(-1);
      case Field::kWord: return word_at(0);
      case Field::kCurrentTag: return tag_at(0);
      case Field::kNext1Word: return word_at(1);
      case Field::kNext1Tag: return tag_at(1);
      case Field::kNext2Word: return word_at(2);
      case Field::kNext2Tag: return tag_at(2);
      case Field::kSuffix2: return suffix(2);
      case Field::kSuffix3: return suffix(3);
      case Field::kSuffix4: return suffix(4);
    }
    return std::nullopt;
  }

 private:
  bool in_range(std::ptrdiff_t off) const {
    auto i = static_cast<std::ptrdiff_t>(pos_) + off;
    return i >= 0 && i < static_cast<std::ptrdiff_t>(words_.size());
  }
  std::optional<std::string_view> word_at(std::ptrdiff_t off) const {
    if (!in_range(off)) return std::nullopt;
    return std::string_view(words_[pos_ + off]);
  }
  std::optional<std::string_view> tag_at(std::ptrdiff_t off) const {
    if (!in_range(off)) return std::nullopt;
    return std::string_view(tags_[pos_ + off]);
  }
  std::optional<std::string_view> suffix(std::size_t n) const {
    std::string_view w = words_[pos_];
    if (utf8::length(w) <= n) return std::nullopt;
    return utf8::last_chars(w, n);
  }

  std::span<const std::string> words_;
  std::span<const std::string> tags_;
  std::size_t pos_;
};

template <Case C>
TagObject materialize(const C& c) {
  TagObject obj;
  for (std::size_t i = 0; i < kFieldCount; ++i)
    if (auto v = c.field(static_cast<Field>(i))) obj.values[i] = std::string(*v);
  return obj;
}

// One object per token, sliding the window left to right over each sentence.
inline std::vector<TagObject> extract_objects(const TaggedCorpus& corpus) {
  std::vector<TagObject> out;
  out.reserve(corpus.token_count());
  std::vector<std::string> words, tags;
  for (const auto& s : corpus.sentences) {
    words.clear();
    tags.clear();
    for (const auto& t : s) {
      words.push_back(t.word);
      tags.push_back(t.tag);
    }
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(materialize(WindowCase(words, tags, i)));
  }
  return out;
}

}  // namespace rdr
