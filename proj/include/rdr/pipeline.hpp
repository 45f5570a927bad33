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

// Gold corpus in, model out.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rdr/corpus.hpp"
#include "rdr/initial_tagger.hpp"
#include "rdr/learner.hpp"
#include "rdr/lexicon.hpp"
#include "rdr/tagger.hpp"

namespace rdr {

struct TrainOptions {
  LearnerOptions learner;
  InitMode mode = InitMode::kGeneric;
  // Used in english-regex mode; empty means the built-in list.
  std::vector<RegexRule> regex_rules;
};

struct TrainedModel {
  Model model;
  LearnResult learned;
};

inline InitialTaggerOptions init_options(const TrainOptions& opts, bool mask_hapax) {
  InitialTaggerOptions init;
  init.mode = opts.mode;
  init.mask_hapax = mask_hapax;
  if (opts.mode == InitMode::kEnglishRegex)
    init.regex_rules = opts.regex_rules.empty() ? default_english_rules() : opts.regex_rules;
  return init;
}

// Builds the lexicon from `gold` and learns the tree. The initialized corpus
// is produced by the lexicon tagger with hapax masking, unless an external
// one is given.
inline TrainedModel train_model(const TaggedCorpus& gold, const TrainOptions& opts,
                                const std::optional<TaggedCorpus>& external_init = std::nullopt) {
  TrainedModel out;
  out.model.lexicon = build_lexicon(gold);
  out.model.init = init_options(opts, /*mask_hapax=*/false);
  TaggedCorpus initialized =
      external_init ? *external_init
                    : initialize_corpus(out.model.lexicon, strip_tags(gold), count_words(gold), init_options(opts, true));
  out.learned = learn(initialized, gold, opts.learner);
  out.model.tree = out.learned.tree;
  return out;
}

}  // namespace rdr
