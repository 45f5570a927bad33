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

// Accuracy on known / unknown / all tokens, contiguous k-fold
// cross-validation, accuracy per exception level, and tagging speed.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "rdr/corpus.hpp"
#include "rdr/pipeline.hpp"
#include "rdr/tagger.hpp"

namespace rdr {

struct Metrics {
  std::size_t known_tokens = 0;
  std::size_t unknown_tokens = 0;
  std::size_t known_correct = 0;
  std::size_t unknown_correct = 0;
  double train_time_sec = 0.0;
  double tagging_tokens_per_sec = 0.0;

  std::size_t tokens() const { return known_tokens + unknown_tokens; }
  std::size_t correct() const { return known_correct + unknown_correct; }

  // Undefined (nullopt) for an empty class.
  std::optional<double> known_acc() const { return ratio(known_correct, known_tokens); }
  std::optional<double> unknown_acc() const { return ratio(unknown_correct, unknown_tokens); }
  std::optional<double> all_acc() const { return ratio(correct(), tokens()); }
  double oov_rate() const { return tokens() ? double(unknown_tokens) / double(tokens()) : 0.0; }

 private:
  static std::optional<double> ratio(std::size_t num, std::size_t den) {
    if (den == 0) return std::nullopt;
    return double(num) / double(den);
  }
};

inline Vocabulary vocabulary(const TaggedCorpus& corpus) {
  Vocabulary v;
  for (const auto& s : corpus.sentences)
    for (const auto& t : s) v.insert(t.word);
  return v;
}

// A token is known when its word occurs in the training corpus.
inline Metrics score(const TaggedCorpus& pred, const TaggedCorpus& gold, const Vocabulary& train_vocab) {
  auto where = [](std::size_t s, std::size_t i) {
    return "sentence " + std::to_string(s + 1) + ", token " + std::to_string(i + 1);
  };
  Metrics m;
  const std::size_t n = std::max(pred.sentences.size(), gold.sentences.size());
  for (std::size_t s = 0; s < n; ++s) {
    if (s >= pred.sentences.size() || s >= gold.sentences.size())
      throw DataError("misaligned at " + where(s, 0) + ": sentence counts differ (" +
                      std::to_string(pred.sentences.size()) + " vs " + std::to_string(gold.sentences.size()) + ")");
    const auto& p = pred.sentences[s];
    const auto& g = gold.sentences[s];
    for (std::size_t i = 0; i < std::max(p.size(), g.size()); ++i) {
      if (i >= p.size() || i >= g.size()) throw DataError("misaligned at " + where(s, i) + ": sentence lengths differ");
      if (p[i].word != g[i].word)
        throw DataError("misaligned at " + where(s, i) + ": '" + p[i].word + "' vs '" + g[i].word + "'");
      const bool ok = p[i].tag == g[i].tag;
      if (train_vocab.contains(g[i].word)) {
        ++m.known_tokens;
        m.known_correct += ok;
      } else {
        ++m.unknown_tokens;
        m.unknown_correct += ok;
      }
    }
  }
  return m;
}

// Mean over runs; tokens/sec averaged over `repeats` taggings of `raw`.
inline double measure_tagging_speed(const Tagger& tagger, const RawCorpus& raw, std::size_t repeats = 10) {
  std::size_t tokens = 0;
  for (const auto& s : raw) tokens += s.size();
  if (tokens == 0 || repeats == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    TaggedCorpus out = tagger.tag_corpus(raw);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.sentences.size() != raw.size()) throw DataError("tagger dropped sentences");
    sum += double(tokens) / std::max(secs, 1e-9);
  }
  return sum / double(repeats);
}

struct LevelRow {
  int level = 0;
  // Rules at levels 1..level.
  std::size_t rule_count = 0;
  Metrics metrics;
};

// Scores the model truncated at every level from 1 to its depth.
inline std::vector<LevelRow> level_curve(const Model& model, const TaggedCorpus& gold_test,
                                         const Vocabulary& train_vocab) {
  std::vector<LevelRow> rows;
  const RawCorpus raw = strip_tags(gold_test);
  const auto census = model.tree.level_census();
  std::size_t rules = 0;
  for (int d = 1; d <= model.tree.depth(); ++d) {
    rules += census[static_cast<std::size_t>(d)];
    Model cut{model.lexicon, model.tree.truncate(d), model.init};
    Tagger tagger(cut);
    rows.push_back(LevelRow{d, rules, score(tagger.tag_corpus(raw), gold_test, train_vocab)});
  }
  return rows;
}

struct CrossValidationConfig {
  TrainOptions train;
  std::size_t speed_repeats = 10;
  // Folds run concurrently when > 1; timings are then less meaningful.
  unsigned fold_threads = 1;
};

struct FoldReport {
  Metrics metrics;
  // The lexicon initial tagger alone, on the same test part.
  Metrics initial;
  std::size_t rules = 0;
  int depth = 0;
  std::vector<LevelRow> level_curve;
};

struct MeanMetrics {
  std::optional<double> known_acc;
  std::optional<double> unknown_acc;
  std::optional<double> all_acc;
  double oov_rate = 0.0;
  double train_time_sec = 0.0;
  double tagging_tokens_per_sec = 0.0;
};

struct MeanLevelRow {
  int level = 0;
  double rule_count = 0.0;
  double all_acc = 0.0;
};

struct CrossValidationReport {
  std::vector<FoldReport> folds;
  MeanMetrics mean;
  MeanMetrics initial_mean;
  std::vector<MeanLevelRow> level_curve;
};

// Unweighted mean over folds; a class accuracy undefined in some fold is
// averaged over the folds where it is defined.
inline MeanMetrics mean_metrics(const std::vector<Metrics>& ms) {
  MeanMetrics out;
  auto avg = [&](auto get) -> std::optional<double> {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& m : ms)
      if (auto v = get(m)) {
        sum += *v;
        ++n;
      }
    if (n == 0) return std::nullopt;
    return sum / double(n);
  };
  out.known_acc = avg([](const Metrics& m) { return m.known_acc(); });
  out.unknown_acc = avg([](const Metrics& m) { return m.unknown_acc(); });
  out.all_acc = avg([](const Metrics& m) { return m.all_acc(); });
  out.oov_rate = avg([](const Metrics& m) { return std::optional<double>(m.oov_rate()); }).value_or(0.0);
  out.train_time_sec = avg([](const Metrics& m) { return std::optional<double>(m.train_time_sec); }).value_or(0.0);
  out.tagging_tokens_per_sec =
      avg([](const Metrics& m) { return std::optional<double>(m.tagging_tokens_per_sec); }).value_or(0.0);
  return out;
}

inline FoldReport run_fold(const Fold& fold, const CrossValidationConfig& cfg) {
  FoldReport rep;
  auto t0 = std::chrono::steady_clock::now();
  TrainedModel trained = train_model(fold.train, cfg.train);
  const double train_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const Vocabulary vocab = vocabulary(fold.train);
  const RawCorpus raw = strip_tags(fold.test);
  Tagger tagger(trained.model);
  rep.metrics = score(tagger.tag_corpus(raw), fold.test, vocab);
  rep.metrics.train_time_sec = train_secs;
  rep.metrics.tagging_tokens_per_sec = measure_tagging_speed(tagger, raw, cfg.speed_repeats);

  const InitialTagger& init = tagger.initial_tagger();
  TaggedCorpus initial;
  for (const auto& words : raw) {
    Sentence s;
    for (const auto& w : words) s.push_back(Token{w, init.tag(w)});
    initial.sentences.push_back(std::move(s));
  }
  rep.initial = score(initial, fold.test, vocab);
  rep.rules = trained.model.tree.size() - 1;
  rep.depth = trained.model.tree.depth();
  rep.level_curve = level_curve(trained.model, fold.test, vocab);
  return rep;
}

inline CrossValidationReport cross_validate(const TaggedCorpus& corpus, std::size_t k,
                                            const CrossValidationConfig& cfg = {}) {
  const auto folds = split_folds(corpus, k);
  CrossValidationReport rep;
  rep.folds.resize(folds.size());
  std::vector<std::string> errors(folds.size());
  auto work = [&](std::size_t i) {
    try {
      rep.folds[i] = run_fold(folds[i], cfg);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  };
  if (cfg.fold_threads <= 1) {
    for (std::size_t i = 0; i < folds.size(); ++i) work(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < cfg.fold_threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < folds.size(); i += cfg.fold_threads) work(i);
      });
  }
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty()) throw DataError("fold " + std::to_string(i + 1) + ": " + errors[i]);

  std::vector<Metrics> ms, init;
  int depth = 0;
  for (const auto& f : rep.folds) {
    ms.push_back(f.metrics);
    init.push_back(f.initial);
    depth = std::max(depth, f.depth);
  }
  rep.mean = mean_metrics(ms);
  rep.initial_mean = mean_metrics(init);

  // A fold shallower than d contributes its full-depth row.
  for (int d = 1; d <= depth; ++d) {
    MeanLevelRow row{d, 0.0, 0.0};
    for (const auto& f : rep.folds) {
      if (f.level_curve.empty()) continue;
      const auto& r = f.level_curve[static_cast<std::size_t>(std::min(d, f.depth) - 1)];
      row.rule_count += double(r.rule_count);
      row.all_acc += r.metrics.all_acc().value_or(0.0);
    }
    row.rule_count /= double(rep.folds.size());
    row.all_acc /= double(rep.folds.size());
    rep.level_curve.push_back(row);
  }
  return rep;
}

namespace detail {

inline nlohmann::ordered_json acc_json(const std::optional<double>& v) {
  if (!v) return "n/a";
  return *v;
}

}  // namespace detail

inline nlohmann::ordered_json metrics_json(const Metrics& m) {
  nlohmann::ordered_json j;
  j["known_acc"] = detail::acc_json(m.known_acc());
  j["unknown_acc"] = detail::acc_json(m.unknown_acc());
  j["all_acc"] = detail::acc_json(m.all_acc());
  j["tokens"] = m.tokens();
  j["known_tokens"] = m.known_tokens;
  j["unknown_tokens"] = m.unknown_tokens;
  j["known_correct"] = m.known_correct;
  j["unknown_correct"] = m.unknown_correct;
  j["oov_rate"] = m.oov_rate();
  j["train_time_sec"] = m.train_time_sec;
  j["tagging_tokens_per_sec"] = m.tagging_tokens_per_sec;
  return j;
}

inline nlohmann::ordered_json mean_json(const MeanMetrics& m) {
  nlohmann::ordered_json j;
  j["known_acc"] = detail::acc_json(m.known_acc);
  j["unknown_acc"] = detail::acc_json(m.unknown_acc);
  j["all_acc"] = detail::acc_json(m.all_acc);
  j["oov_rate"] = m.oov_rate;
  j["train_time_sec"] = m.train_time_sec;
  j["tagging_tokens_per_sec"] = m.tagging_tokens_per_sec;
  return j;
}

inline nlohmann::ordered_json report_json(const CrossValidationReport& rep, std::size_t speed_repeats) {
  nlohmann::ordered_json j;
  j["folds"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rep.folds.size(); ++i) {
    const auto& f = rep.folds[i];
    nlohmann::ordered_json fj;
    fj["fold"] = i + 1;
    fj["metrics"] = metrics_json(f.metrics);
    fj["initial"] = metrics_json(f.initial);
    fj["rules"] = f.rules;
    fj["depth"] = f.depth;
    fj["level_curve"] = nlohmann::ordered_json::array();
    for (const auto& r : f.level_curve)
      fj["level_curve"].push_back({{"level", r.level},
                                   {"rule_count", r.rule_count},
                                   {"all_acc", detail::acc_json(r.metrics.all_acc())}});
    j["folds"].push_back(std::move(fj));
  }
  j["mean"] = mean_json(rep.mean);
  j["initial_mean"] = mean_json(rep.initial_mean);
  j["level_curve"] = nlohmann::ordered_json::array();
  for (const auto& r : rep.level_curve)
    j["level_curve"].push_back({{"level", r.level}, {"rule_count", r.rule_count}, {"all_acc", r.all_acc}});
  j["speed"] = {{"tokens_per_sec", rep.mean.tagging_tokens_per_sec}, {"repeats", speed_repeats}};
  return j;
}

}  // namespace rdr
