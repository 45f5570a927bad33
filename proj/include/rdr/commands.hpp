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

// File-level entry points behind the rdrtag subcommands.

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "rdr/audit.hpp"
#include "rdr/corpus.hpp"
#include "rdr/evaluation.hpp"
#include "rdr/pipeline.hpp"
#include "rdr/tagger.hpp"

namespace rdr {

struct TrainConfig {
  std::string corpus;
  std::string model_dir;
  TrainOptions options;
  char separator = kDefaultSeparator;
  // Externally initialized corpus (same words as `corpus`).
  std::optional<std::string> init_from;
  // english-regex mode only; unset means the built-in rules.
  std::optional<std::string> regex_file;
};

// Writes model.rdr, model.lex and audit.jsonl (plus model.regex in
// english-regex mode) into the model directory.
inline TrainedModel cmd_train(const TrainConfig& cfg) {
  const TaggedCorpus gold = read_tagged_corpus(read_file(cfg.corpus), cfg.separator);
  if (gold.token_count() == 0) throw DataError("training corpus '" + cfg.corpus + "' is empty");
  TrainOptions opts = cfg.options;
  if (cfg.regex_file) opts.regex_rules = parse_regex_rules(read_file(*cfg.regex_file));
  std::optional<TaggedCorpus> init;
  if (cfg.init_from) init = read_tagged_corpus(read_file(*cfg.init_from), cfg.separator);

  TrainedModel trained = train_model(gold, opts, init);
  if (!trained.learned.ledger_consistent) throw std::logic_error("learner ledger diverged from tree evaluation");
  const std::filesystem::path dir(cfg.model_dir);
  save_model(dir, trained.model);
  write_file((dir / kAuditFile).string(), audit_jsonl(trained.learned, opts.learner));
  return trained;
}

struct TagConfig {
  std::string model_dir;
  std::string input;
  std::string output;
  char separator = kDefaultSeparator;
  // Tagged file whose tags replace the lexicon tagger's initial tags.
  std::optional<std::string> init_from;
  unsigned threads = 1;
};

inline TaggedCorpus cmd_tag(const TagConfig& cfg) {
  const Model model = load_model(cfg.model_dir);
  Tagger tagger(model);
  TaggedCorpus out;
  if (cfg.init_from) {
    TaggedCorpus init = read_tagged_corpus(read_file(*cfg.init_from), cfg.separator);
    const RawCorpus raw = read_raw_corpus(read_file(cfg.input));
    if (strip_tags(init) != raw) throw DataError("--init-from words do not match the input text");
    out = tagger.correct_corpus(init, cfg.threads);
  } else {
    out = tagger.tag_corpus(read_raw_corpus(read_file(cfg.input)), cfg.threads);
  }
  write_file(cfg.output, write_tagged_corpus(out, cfg.separator));
  return out;
}

struct EvalConfig {
  std::string gold;
  std::string pred;
  std::string train_corpus;
  char separator = kDefaultSeparator;
};

inline nlohmann::ordered_json cmd_eval(const EvalConfig& cfg) {
  const TaggedCorpus gold = read_tagged_corpus(read_file(cfg.gold), cfg.separator);
  const TaggedCorpus pred = read_tagged_corpus(read_file(cfg.pred), cfg.separator);
  if (pred.token_count() == 0) throw DataError("prediction file '" + cfg.pred + "' is empty");
  const TaggedCorpus train = read_tagged_corpus(read_file(cfg.train_corpus), cfg.separator);
  return metrics_json(score(pred, gold, vocabulary(train)));
}

struct XvalConfig {
  std::string corpus;
  std::size_t folds = 10;
  std::string report;
  char separator = kDefaultSeparator;
  CrossValidationConfig cv;
};

inline CrossValidationReport cmd_xval(const XvalConfig& cfg) {
  const TaggedCorpus corpus = read_tagged_corpus(read_file(cfg.corpus), cfg.separator);
  CrossValidationReport rep = cross_validate(corpus, cfg.folds, cfg.cv);
  write_file(cfg.report, report_json(rep, cfg.cv.speed_repeats).dump(2) + "\n");
  return rep;
}

}  // namespace rdr
