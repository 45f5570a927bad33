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

#include <algorithm>
#include <random>

#include "test_support.hpp"

namespace rdr {
namespace {

TEST(ReadTaggedCorpus, ExampleSentence) {
  auto c = read_tagged_corpus(testing::kExampleSentence);
  ASSERT_EQ(c.sentences.size(), 1u);
  ASSERT_EQ(c.sentences[0].size(), 5u);
  EXPECT_EQ(c.sentences[0][2], (Token{"anticipate", "VB"}));
  EXPECT_EQ(tagset(c), (std::vector<std::string>{"IN", "NNS", "VB", "DT", "NN"}));
}

TEST(ReadTaggedCorpus, SplitsAtRightmostSeparator) {
  auto c = read_tagged_corpus("1/2/CD");
  EXPECT_EQ(c.sentences.at(0).at(0), (Token{"1/2", "CD"}));
}

TEST(ReadTaggedCorpus, TwoLinesAndTagset) {
  auto c = read_tagged_corpus("The/DT dog/NN ./.\nThe/DT dog/NN ./.\n");
  EXPECT_EQ(c.sentences.size(), 2u);
  EXPECT_EQ(tagset(c), (std::vector<std::string>{"DT", "NN", "."}));
}

TEST(ReadTaggedCorpus, SkipsEmptyLinesAndCollapsesSpaces) {
  auto c = read_tagged_corpus("\n  a/DT   b/NN  \n\n\nc/VB\n");
  ASSERT_EQ(c.sentences.size(), 2u);
  EXPECT_EQ(c.sentences[0].size(), 2u);
  EXPECT_EQ(write_tagged_corpus(c), "a/DT b/NN\nc/VB\n");
}

TEST(ReadTaggedCorpus, MissingSeparatorNamesLine) {
  try {
    read_tagged_corpus("a/DT\nb/NN c\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ReadTaggedCorpus, EmptyWordOrTagRejected) {
  EXPECT_THROW(read_tagged_corpus("/DT"), ParseError);
  EXPECT_THROW(read_tagged_corpus("a/"), ParseError);
}

TEST(ReadTaggedCorpus, CustomSeparator) {
  auto c = read_tagged_corpus("a_b_DT", '_');
  EXPECT_EQ(c.sentences[0][0], (Token{"a_b", "DT"}));
  EXPECT_EQ(write_tagged_corpus(c, '_'), "a_b_DT\n");
}

TEST(WriteTaggedCorpus, SingleToken) {
  TaggedCorpus c{{{Token{"a", "DT"}}}};
  EXPECT_EQ(write_tagged_corpus(c), "a/DT\n");
}

TEST(WriteTaggedCorpus, ExampleLineRoundTrips) {
  EXPECT_EQ(write_tagged_corpus(read_tagged_corpus(testing::kExampleSentence)),
            std::string(testing::kExampleSentence) + "\n");
}

TEST(WriteTaggedCorpus, RandomRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto c = testing::random_corpus(rng, 1 + i % 9);
    EXPECT_EQ(read_tagged_corpus(write_tagged_corpus(c)), c);
  }
}

TEST(RightmostSplit, WordKeepsAllButLastSeparator) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + i % 5;
    std::string tok;
    for (std::size_t k = 0; k < n; ++k) tok += "x/";
    tok += "T";
    Token t = read_tagged_corpus(tok).sentences[0][0];
    EXPECT_EQ(static_cast<std::size_t>(std::count(t.word.begin(), t.word.end(), '/')), n - 1);
    EXPECT_EQ(t.tag.find('/'), std::string::npos);
  }
}

TEST(StripTags, Basic) {
  TaggedCorpus c{{{Token{"a", "DT"}, Token{"dog", "NN"}}}};
  EXPECT_EQ(write_raw_corpus(strip_tags(c)), "a dog\n");
}

TEST(StripTags, ExampleSentence) {
  auto raw = strip_tags(read_tagged_corpus(testing::kExampleSentence));
  EXPECT_EQ(write_raw_corpus(raw), "as investors anticipate a recovery\n");
}

TEST(StripTags, PreservesLayoutThroughRawText) {
  std::mt19937_64 rng(3);
  auto c = testing::random_corpus(rng, 30);
  auto raw = read_raw_corpus(write_raw_corpus(strip_tags(c)));
  ASSERT_EQ(raw.size(), c.sentences.size());
  for (std::size_t s = 0; s < raw.size(); ++s) EXPECT_EQ(raw[s].size(), c.sentences[s].size());
}

// Independent partition: sizes by ceiling for the first n mod k parts.
std::vector<std::size_t> expected_fold_sizes(std::size_t n, std::size_t k) {
  std::vector<std::size_t> sizes;
  std::size_t remaining = n;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t parts_left = k - i;
    std::size_t sz = (remaining + parts_left - 1) / parts_left;
    sizes.push_back(sz);
    remaining -= sz;
  }
  return sizes;
}

TaggedCorpus numbered_corpus(std::size_t n) {
  TaggedCorpus c;
  for (std::size_t i = 0; i < n; ++i) c.sentences.push_back({Token{"w" + std::to_string(i), "T"}});
  return c;
}

TEST(SplitFolds, TenSentencesTenFolds) {
  auto folds = split_folds(numbered_corpus(10), 10);
  ASSERT_EQ(folds.size(), 10u);
  for (const auto& f : folds) {
    EXPECT_EQ(f.test.sentences.size(), 1u);
    EXPECT_EQ(f.train.sentences.size(), 9u);
  }
}

TEST(SplitFolds, TwentyThreeSentencesTenFolds) {
  auto folds = split_folds(numbered_corpus(23), 10);
  std::vector<std::size_t> sizes;
  for (const auto& f : folds) sizes.push_back(f.test.sentences.size());
  EXPECT_EQ(sizes, expected_fold_sizes(23, 10));
  EXPECT_EQ(sizes, (std::vector<std::size_t>{3, 3, 3, 2, 2, 2, 2, 2, 2, 2}));
}

TEST(SplitFolds, RejectsDegenerateK) {
  EXPECT_THROW(split_folds(numbered_corpus(5), 1), DataError);
  EXPECT_THROW(split_folds(numbered_corpus(5), 6), DataError);
}

TEST(SplitFolds, PartitionInvariants) {
  for (std::size_t n = 2; n < 40; n += 3) {
    auto c = numbered_corpus(n);
    for (std::size_t k = 2; k <= n; k += 2) {
      auto folds = split_folds(c, k);
      TaggedCorpus concat;
      for (std::size_t i = 0; i < k; ++i) {
        const auto& f = folds[i];
        for (const auto& s : f.test.sentences) concat.sentences.push_back(s);
        EXPECT_EQ(f.test.sentences.size() + f.train.sentences.size(), n);
        // Train is everything else in original order.
        TaggedCorpus rest;
        for (std::size_t j = 0; j < k; ++j)
          if (j != i)
            for (const auto& s : folds[j].test.sentences) rest.sentences.push_back(s);
        EXPECT_EQ(f.train, rest);
      }
      EXPECT_EQ(concat, c);
      auto sizes = expected_fold_sizes(n, k);
      for (std::size_t i = 0; i < k; ++i) EXPECT_EQ(folds[i].test.sentences.size(), sizes[i]);
    }
  }
}

TEST(Utf8, SuffixesCountCodePoints) {
  EXPECT_EQ(utf8::length("café"), 4u);
  EXPECT_EQ(utf8::last_chars("café", 2), "fé");
  EXPECT_EQ(utf8::proper_suffix("fé", 2), "");
  EXPECT_TRUE(utf8::contains_digit("x٣"));  // Arabic-Indic three
  EXPECT_FALSE(utf8::contains_digit("abc"));
  EXPECT_TRUE(utf8::starts_uppercase("Émile"));
  EXPECT_TRUE(utf8::starts_uppercase("Жук"));
  EXPECT_FALSE(utf8::starts_uppercase("émile"));
}

}  // namespace
}  // namespace rdr
