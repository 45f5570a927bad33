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

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace rdr {
namespace {

// A lexicon in which every fallback stage answers with a different tag.
Lexicon staged_lexicon() {
  Lexicon lex;
  lex.word_tags["investors"] = "NNS";
  lex.word_tags["zorp"] = "WORD";
  lex.suffix_tags[5]["abcde"] = "S5";
  lex.suffix_tags[4]["bcde"] = "S4";
  lex.suffix_tags[3]["cde"] = "S3";
  lex.suffix_tags[3]["ing"] = "VBG";
  lex.suffix_tags[2]["de"] = "S2";
  lex.default_numeric = "NUM";
  lex.default_capitalized = "CAP";
  lex.default_lowercase = "LOW";
  return lex;
}

const Vocabulary kKnown = {"investors", "zorp"};

TEST(TagWord, KnownWord) {
  EXPECT_EQ(tag_word(staged_lexicon(), "investors", kKnown, {}), "NNS");
}

TEST(TagWord, EnglishRegexNominalSuffix) {
  Lexicon lex = staged_lexicon();
  lex.word_tags["dog"] = "NN";  // puts NN in the tagset
  InitialTaggerOptions opts{InitMode::kEnglishRegex, false, default_english_rules()};
  EXPECT_EQ(tag_word(lex, "brickness", kKnown, opts), "NN");
}

TEST(TagWord, SuffixOrderFiveToTwo) {
  // 5- and 4-grams of "zorping" miss; the 3-gram hits.
  EXPECT_EQ(tag_word(staged_lexicon(), "zorping", kKnown, {}), "VBG");
}

TEST(TagWord, FallbackOrderEachStage) {
  const Lexicon lex = staged_lexicon();
  EXPECT_EQ(tag_word(lex, "zorp", kKnown, {}), "WORD");
  EXPECT_EQ(tag_word(lex, "zorp", {}, {}), "LOW");  // not in known vocab
  EXPECT_EQ(tag_word(lex, "xabcde", kKnown, {}), "S5");
  EXPECT_EQ(tag_word(lex, "xbcde", kKnown, {}), "S4");
  EXPECT_EQ(tag_word(lex, "xcde", kKnown, {}), "S3");
  EXPECT_EQ(tag_word(lex, "xde", kKnown, {}), "S2");
  EXPECT_EQ(tag_word(lex, "de", kKnown, {}), "LOW");  // a word is not its own suffix
  EXPECT_EQ(tag_word(lex, "x9abcde", kKnown, {}), "NUM");  // digits beat suffixes
  EXPECT_EQ(tag_word(lex, "Qwerty", kKnown, {}), "CAP");
  EXPECT_EQ(tag_word(lex, "qwerty", kKnown, {}), "LOW");
}

TEST(TagWord, RegexBeforeNumericAndOnlyForUnknown) {
  Lexicon lex = staged_lexicon();
  lex.word_tags["a"] = "RX";
  InitialTaggerOptions opts{InitMode::kEnglishRegex, false, {{"^z", "RX"}}};
  EXPECT_EQ(tag_word(lex, "z9", kKnown, opts), "RX");
  EXPECT_EQ(tag_word(lex, "zorp", kKnown, opts), "WORD");
  // Generic mode ignores regex rules.
  EXPECT_EQ(tag_word(lex, "z9", kKnown, InitialTaggerOptions{InitMode::kGeneric, false, {{"^z", "RX"}}}), "NUM");
}

TEST(TagWord, RegexWithTagOutsideTagsetIsSkipped) {
  InitialTaggerOptions opts{InitMode::kEnglishRegex, false, {{".*", "NOPE"}}};
  EXPECT_EQ(tag_word(staged_lexicon(), "qwerty", kKnown, opts), "LOW");
}

TEST(ParseRegexRules, FileFormat) {
  auto rules = parse_regex_rules("(.*ness$)\tNN\n\n^[0-9]+$\tCD\n");
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_EQ(rules[1].pattern, "^[0-9]+$");
  EXPECT_EQ(rules[1].tag, "CD");
  EXPECT_THROW(parse_regex_rules("no tab\n"), ParseError);
  EXPECT_THROW(parse_regex_rules("([\tNN\n"), ParseError);
}

TEST(InitializeCorpus, NoHapaxMatchesLexicon) {
  auto gold = read_tagged_corpus("the/DT dog/NN runs/VBZ\nthe/DT dog/NN runs/VBZ\n");
  auto lex = build_lexicon(gold);
  auto init = initialize_corpus(lex, strip_tags(gold), count_words(gold), {InitMode::kGeneric, true, {}});
  EXPECT_EQ(init, gold);
}

TEST(InitializeCorpus, HapaxTakesUnknownPath) {
  // "cat" occurs once: its lexicon tag is VB, but masked it falls through to
  // the lowercase default (DT and NN tie at 2; DT came first).
  auto gold = read_tagged_corpus("the/DT dog/NN cat/VB\nthe/DT dog/NN ./.\n");
  auto lex = build_lexicon(gold);
  ASSERT_EQ(lex.word_tags.at("cat"), "VB");
  ASSERT_EQ(lex.default_lowercase, "DT");
  auto counts = count_words(gold);
  auto masked = initialize_corpus(lex, strip_tags(gold), counts, {InitMode::kGeneric, true, {}});
  auto unmasked = initialize_corpus(lex, strip_tags(gold), counts, {InitMode::kGeneric, false, {}});
  EXPECT_EQ(masked.sentences[0][2].tag, "DT");
  EXPECT_EQ(unmasked.sentences[0][2].tag, "VB");
  // The lexicon still lists the hapax word.
  EXPECT_TRUE(lex.word_tags.contains("cat"));
}

TEST(InitializeCorpus, EmptyInput) {
  auto lex = build_lexicon(read_tagged_corpus("x/T"));
  EXPECT_TRUE(initialize_corpus(lex, read_raw_corpus("\n\n"), {}, {}).sentences.empty());
}

TEST(InitialTagger, TotalAndInsideTagset) {
  auto gold = testing::toy_corpus();
  auto lex = build_lexicon(gold);
  auto tags = tagset(gold);
  std::mt19937_64 rng(5);
  const std::vector<std::string> pieces = {"a", "Z", "9", "ing", "tion", "é", "-", "ness", "ly", "ed"};
  for (InitMode mode : {InitMode::kGeneric, InitMode::kEnglishRegex}) {
    InitialTagger tagger(lex, {mode, false, default_english_rules()});
    for (int i = 0; i < 500; ++i) {
      std::string w;
      for (int k = 0; k < 1 + i % 4; ++k) w += testing::pick(rng, pieces);
      const std::string& t = tagger.tag(w);
      EXPECT_NE(std::find(tags.begin(), tags.end(), t), tags.end()) << w << " -> " << t;
    }
  }
}

TEST(InitializeCorpus, Deterministic) {
  auto gold = testing::toy_corpus();
  auto lex = build_lexicon(gold);
  InitialTaggerOptions opts{InitMode::kGeneric, true, {}};
  auto a = initialize_corpus(lex, strip_tags(gold), count_words(gold), opts);
  auto b = initialize_corpus(lex, strip_tags(gold), count_words(gold), opts);
  EXPECT_EQ(write_tagged_corpus(a), write_tagged_corpus(b));
}

}  // namespace
}  // namespace rdr
