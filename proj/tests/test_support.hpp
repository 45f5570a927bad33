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

// Fixtures, random generators and reference oracles shared by the suites.
// Nothing here calls into the code paths the oracles are used to check.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rdr/rdr.hpp"

namespace rdr::testing {

inline std::string data_path(const std::string& name) { return std::string(RDR_DATA_DIR) + "/" + name; }

inline TaggedCorpus toy_corpus() { return read_tagged_corpus(read_file(data_path("toy_corpus.txt"))); }

// The example tree: nodes listed in preorder, labelled with their numbers
// in the original drawing. Rules (0), (1), (4) and (7) and the shape are as
// published; the other conditions are placeholders that the worked example
// does not satisfy.
inline constexpr const char* kExampleTree =
    "if True then tag = \"\"\n"
    "\tif currentTag == \"VB\" then tag = \"VB\"\n"
    "\t\tif prev1Tag == \"NNS\" then tag = \"VBP\"\n"
    "\t\t\tif word == \"set\" then tag = \"VBN\"\n"
    "\t\t\t\tif prev2Tag == \"MD\" then tag = \"VB\"\n"
    "\t\t\t\tif next1Word == \"into\" then tag = \"VBD\"\n"
    "\t\t\tif next1Tag == \"VBN\" then tag = \"VBD\"\n"
    "\t\t\tif word == \"anticipate\" and next2Word == \"profits\" then tag = \"VB\"\n"
    "\t\tif prev1Tag == \"PRP\" and next1Tag == \"DT\" then tag = \"VBP\"\n"
    "\tif currentTag == \"NN\" then tag = \"NN\"\n"
    "\t\tif prev1Tag == \"TO\" and next1Tag == \"DT\" then tag = \"VB\"\n"
    "\t\tif word == \"increase\" then tag = \"VB\"\n"
    "\t\t\tif prev1Word == \"the\" then tag = \"NN\"\n"
    "\tif currentTag == \"JJ\" then tag = \"JJ\"\n"
    "\t\tif suffix3 == \"ing\" then tag = \"VBG\"\n"
    "\t\t\tif prev1Tag == \"DT\" then tag = \"JJ\"\n";

// Drawing label of each node id produced by parse_tree (preorder).
inline constexpr std::array<int, 16> kExampleLabels = {0, 1, 4, 5, 6, 7, 8, 9, 10, 2, 11, 12, 13, 3, 14, 15};

inline NodeId example_node(int label) {
  for (std::size_t i = 0; i < kExampleLabels.size(); ++i)
    if (kExampleLabels[i] == label) return static_cast<NodeId>(i);
  return kNoNode;
}

inline constexpr const char* kExampleSentence = "as/IN investors/NNS anticipate/VB a/DT recovery/NN";

// Object for "anticipate" in the example sentence, built by hand.
inline TagObject example_object() {
  TagObject o;
  const char* vals[] = {"as", "IN", "investors", "NNS", "anticipate", "VB", "a", "DT", "recovery", "NN", "te", "ate", "pate"};
  for (std::size_t i = 0; i < kFieldCount; ++i) o.values[i] = vals[i];
  return o;
}

// Reference interpreter: at each fired node, scan its list of exception
// rules in order and descend into the first that fires.
struct ReferenceResult {
  std::vector<NodeId> path;
  NodeId last_fired = kRootNode;
  std::string conclusion;
};

inline bool reference_matches(const RdrNode& n, const TagObject& o) {
  for (const auto& t : n.rule.condition.tests()) {
    const auto& v = o.values[static_cast<std::size_t>(t.field)];
    if (!v.has_value() || v.value() != t.value) return false;
  }
  return true;
}

inline ReferenceResult reference_evaluate(const RdrTree& tree, const TagObject& o) {
  ReferenceResult r;
  std::vector<NodeId> stack{kRootNode};
  r.path.push_back(kRootNode);
  while (!stack.empty()) {
    NodeId fired = stack.back();
    stack.pop_back();
    r.last_fired = fired;
    std::vector<NodeId> exceptions;
    for (NodeId c = tree.node(fired).except_child; c != kNoNode; c = tree.node(c).ifnot_child) exceptions.push_back(c);
    for (NodeId c : exceptions) {
      r.path.push_back(c);
      if (reference_matches(tree.node(c), o)) {
        stack.push_back(c);
        break;
      }
    }
  }
  r.conclusion = tree.node(r.last_fired).rule.conclusion;
  return r;
}

// Small alphabets so random conditions fire often enough to be interesting.
inline const std::vector<std::string> kWords = {"a", "the", "run", "runs", "dog", "fast"};
inline const std::vector<std::string> kTags = {"DT", "NN", "VB", "JJ", "NNS"};

inline std::string pick(std::mt19937_64& rng, const std::vector<std::string>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

inline bool is_tag_field(Field f) {
  switch (f) {
    case Field::kPrev2Tag:
    case Field::kPrev1Tag:
    case Field::kCurrentTag:
    case Field::kNext1Tag:
    case Field::kNext2Tag: return true;
    default: return false;
  }
}

inline std::string random_value(std::mt19937_64& rng, Field f) {
  if (is_tag_field(f)) return pick(rng, kTags);
  if (f == Field::kSuffix2) return pick(rng, {"un", "og", "st"});
  if (f == Field::kSuffix3) return pick(rng, {"run", "dog", "ast"});
  if (f == Field::kSuffix4) return pick(rng, {"runs", "fast"});
  return pick(rng, kWords);
}

inline TagObject random_object(std::mt19937_64& rng) {
  TagObject o;
  std::bernoulli_distribution null_field(0.15);
  for (std::size_t i = 0; i < kFieldCount; ++i)
    if (!null_field(rng)) o.values[i] = random_value(rng, static_cast<Field>(i));
  return o;
}

inline Rule random_rule(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> arity(1, 3);
  std::uniform_int_distribution<std::size_t> field(0, kFieldCount - 1);
  std::vector<FieldTest> tests;
  std::vector<bool> used(kFieldCount, false);
  for (int k = arity(rng); k > 0; --k) {
    std::size_t f = field(rng);
    if (used[f]) continue;
    used[f] = true;
    tests.push_back(FieldTest{static_cast<Field>(f), random_value(rng, static_cast<Field>(f))});
  }
  return Rule{Condition(std::move(tests)), pick(rng, kTags)};
}

// Grows a tree by repeated insert_exception under random existing nodes.
inline RdrTree random_tree(std::mt19937_64& rng, std::size_t nodes) {
  RdrTree t;
  for (std::size_t i = 0; i < nodes; ++i) {
    auto parent = static_cast<NodeId>(std::uniform_int_distribution<std::size_t>(0, t.size() - 1)(rng));
    t.insert_exception(parent, random_rule(rng));
  }
  return t;
}

inline Lexicon random_lexicon(std::mt19937_64& rng) {
  Lexicon lex;
  const std::vector<std::string> alphabet = {"a", "b", "é", "z", "%", "\\", "\"", "ß"};
  auto word = [&](std::size_t len) {
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w += pick(rng, alphabet);
    return w;
  };
  std::uniform_int_distribution<std::size_t> count(0, 12), len(1, 8);
  for (std::size_t i = count(rng); i > 0; --i) lex.word_tags[word(len(rng))] = pick(rng, kTags);
  for (std::size_t n = kMinSuffix; n <= kMaxSuffix; ++n)
    for (std::size_t i = count(rng); i > 0; --i) lex.suffix_tags[n][word(n)] = pick(rng, kTags);
  lex.default_numeric = pick(rng, kTags);
  lex.default_capitalized = pick(rng, kTags);
  lex.default_lowercase = pick(rng, kTags);
  return lex;
}

inline TaggedCorpus random_corpus(std::mt19937_64& rng, std::size_t sentences) {
  const std::vector<std::string> words = {"a", "1/2", "é", "Dog", "runs", "x/y/z", "9"};
  TaggedCorpus c;
  std::uniform_int_distribution<std::size_t> len(1, 8);
  for (std::size_t s = 0; s < sentences; ++s) {
    Sentence sent;
    for (std::size_t i = len(rng); i > 0; --i) sent.push_back(Token{pick(rng, words), pick(rng, kTags)});
    c.sentences.push_back(std::move(sent));
  }
  return c;
}

}  // namespace rdr::testing
