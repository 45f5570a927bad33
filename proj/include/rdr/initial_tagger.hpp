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

// Lexicon-driven initial tagger.
//
// Known words get their lexicon tag. Unknown words go through, in order:
// the regex rules (english-regex mode only), the numeric default, the 5-,
// 4-, 3- and 2-character suffix entries, and finally the capitalized or
// lowercase default. During learning, words seen once in the training
// data can be masked so that they take the unknown-word path.

#pragma once

#include <cstddef>
#include <regex>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rdr/corpus.hpp"
#include "rdr/lexicon.hpp"

namespace rdr {

enum class InitMode { kGeneric, kEnglishRegex };

struct RegexRule {
  std::string pattern;
  std::string tag;
};

struct InitialTaggerOptions {
  InitMode mode = InitMode::kGeneric;
  bool mask_hapax = false;
  // Consulted only in english-regex mode, top to bottom.
  std::vector<RegexRule> regex_rules;
};

using Vocabulary = std::unordered_set<std::string, StringHash, std::equal_to<>>;

// Built-in English unknown-word rules over Penn Treebank tags. The first
// line is the nominal-suffix rule published with the original tagger; the
// rest are our own additions. Override with a rule file.
inline std::vector<RegexRule> default_english_rules() {
  return {
      {R"((.*ness$)|(.*ment$)|(.*ship$)|(^[Ee]x-.*)|(^[Ss]elf-.*))", "NN"},
      {R"(^-?[0-9]+([.,:/-][0-9]+)*%?$)", "CD"},
      {R"(^[0-9]+-.*|.*-[0-9]+$)", "JJ"},
      {R"(^[A-Z][A-Za-z]*-[A-Za-z-]+$)", "NNP"},
      {R"(.*(able|ible|ous|ive|ful|less|ical)$)", "JJ"},
      {R"(.*(tion|sion|ity|ance|ence|ism|ist)$)", "NN"},
      {R"(.*(tions|sions|ities|ances|ences|isms|ists)$)", "NNS"},
      {R"(^[a-z].*ly$)", "RB"},
      {R"(^[a-z].*ing$)", "VBG"},
      {R"(^[a-z].*ed$)", "VBN"},
      {R"(^[A-Z].*s$)", "NNPS"},
      {R"(^[A-Z].*)", "NNP"},
      {R"(^[a-z].*s$)", "NNS"},
  };
}

// Parses "pattern<TAB>tag" lines; blank lines are skipped.
inline std::vector<RegexRule> parse_regex_rules(std::string_view text) {
  std::vector<RegexRule> rules;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (line.empty()) return;
    auto tab = line.rfind('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size())
      throw ParseError(line_no, "expected 'pattern<TAB>tag'");
    RegexRule r{std::string(line.substr(0, tab)), std::string(line.substr(tab + 1))};
    try {
      std::regex probe(r.pattern);
    } catch (const std::regex_error& e) {
      throw ParseError(line_no, "bad regex '" + r.pattern + "': " + e.what());
    }
    rules.push_back(std::move(r));
  });
  return rules;
}

class InitialTagger {
 public:
  // `hapax` lists words routed through the unknown path despite being in
  // the lexicon. `lex` must outlive the tagger.
  InitialTagger(const Lexicon& lex, InitialTaggerOptions opts, Vocabulary hapax = {})
      : lex_(&lex), mode_(opts.mode), masked_(std::move(hapax)) {
    if (mode_ != InitMode::kEnglishRegex) return;
    // Rules naming a tag the lexicon never produces are dropped so that
    // every output stays inside the training tagset.
    std::unordered_set<std::string_view> tags;
    for (const auto& [w, t] : lex.word_tags) tags.insert(t);
    for (const auto& r : opts.regex_rules)
      if (tags.contains(r.tag)) regexes_.emplace_back(std::regex(r.pattern, std::regex::optimize), r.tag);
  }

  const std::string& tag(std::string_view word) const {
    if (const std::string* t = lex_->find_word(word); t && !masked_.contains(word)) return *t;
    return tag_unknown(word);
  }

  const std::string& tag_unknown(std::string_view word) const {
    for (const auto& [re, tag] : regexes_)
      if (std::regex_search(word.begin(), word.end(), re)) return tag;
    if (utf8::contains_digit(word)) return lex_->default_numeric;
    const std::size_t len = utf8::length(word);
    for (std::size_t n = kMaxSuffix; n >= kMinSuffix; --n) {
      if (len <= n) continue;
      if (const std::string* t = lex_->find_suffix(n, utf8::last_chars(word, n))) return *t;
    }
    return utf8::starts_uppercase(word) ? lex_->default_capitalized : lex_->default_lowercase;
  }

  std::vector<std::string> tag_sentence(const RawSentence& words) const {
    std::vector<std::string> tags;
    tags.reserve(words.size());
    for (const auto& w : words) tags.push_back(tag(w));
    return tags;
  }

 private:
  const Lexicon* lex_;
  InitMode mode_;
  Vocabulary masked_;
  std::vector<std::pair<std::regex, std::string>> regexes_;
};

// Free-function form with an explicit known vocabulary.
inline std::string tag_word(const Lexicon& lex, std::string_view word, const Vocabulary& known_vocab,
                            const InitialTaggerOptions& opts) {
  InitialTagger tagger(lex, opts);
  if (known_vocab.contains(word))
    if (const std::string* t = lex.find_word(word)) return *t;
  return tagger.tag_unknown(word);
}

inline StringMap<std::size_t> count_words(const TaggedCorpus& corpus) {
  StringMap<std::size_t> counts;
  for (const auto& s : corpus.sentences)
    for (const auto& t : s) ++counts[t.word];
  return counts;
}

inline Vocabulary hapax_words(const StringMap<std::size_t>& counts) {
  Vocabulary v;
  for (const auto& [w, c] : counts)
    if (c == 1) v.insert(w);
  return v;
}

inline TaggedCorpus initialize_corpus(const Lexicon& lex, const RawCorpus& raw,
                                      const StringMap<std::size_t>& train_vocab_counts,
                                      const InitialTaggerOptions& opts) {
  InitialTagger tagger(lex, opts, opts.mask_hapax ? hapax_words(train_vocab_counts) : Vocabulary{});
  TaggedCorpus out;
  out.sentences.reserve(raw.size());
  for (const auto& words : raw) {
    if (words.empty()) continue;
    Sentence s;
    s.reserve(words.size());
    for (const auto& w : words) s.push_back(Token{w, tagger.tag(w)});
    out.sentences.push_back(std::move(s));
  }
  return out;
}

}  // namespace rdr
