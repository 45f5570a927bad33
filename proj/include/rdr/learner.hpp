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

// Error-driven construction of the rule tree.
//
// The tree starts with the default rule and one "currentTag == T -> T" rule
// per tag of the initialized corpus. Every token becomes a record (its
// window object plus the gold tag) and is filed under the node that fires
// last for it. Nodes are then processed depth first: at node n, candidate
// rules are generated from the records n gets wrong, scored as
// S = A - B over those records (A: records the rule would fix, B: records
// it matches but would still get wrong), and the best one is added as an
// exception of n if S clears the threshold for its level. Records filed
// under n that match the new rule move to the new node, which is processed
// before n is revisited. Below level 1, a candidate matched by any record n
// already gets right is discarded.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rdr/corpus.hpp"
#include "rdr/lexicon.hpp"
#include "rdr/rule_templates.hpp"
#include "rdr/scrdr_tree.hpp"
#include "rdr/tag_object.hpp"

namespace rdr {

struct Thresholds {
  // Minimum score for rules added under level-1 nodes.
  long layer2 = 3;
  // Minimum score for every deeper rule.
  long higher = 2;
  // S must be strictly greater than the threshold; false allows equality.
  bool strict = true;

  long for_parent_level(int level) const { return level <= 1 ? layer2 : higher; }
  bool passes(long score, int parent_level) const {
    long t = for_parent_level(parent_level);
    return strict ? score > t : score >= t;
  }
};

struct LearnerOptions {
  Thresholds thresholds;
  int max_level = 50;
  // Worker threads for candidate scoring; 1 scores serially. The result
  // does not depend on this.
  unsigned threads = 1;
};

// One entry of the object-driven dictionary.
struct ObjectRecord {
  TagObject obj;
  std::string correct;
};

struct ScoredRule {
  CandidateRule candidate;
  long a = 0;
  long b = 0;
  long score = 0;
};

// One line of the audit log.
struct Insertion {
  NodeId node = kNoNode;
  NodeId parent = kNoNode;  // the node the rule is an exception of
  int parent_level = 0;
  int level = 0;
  int template_id = 0;
  std::string rule;
  long a = 0;
  long b = 0;
  long score = 0;
  // Parent's correctly tagged records matched by the rule at insertion
  // time, recounted by plain condition matching.
  long correct_set_hits = 0;
  std::vector<NodeId> path;
};

namespace detail {

using ValueId = std::uint32_t;
constexpr ValueId kNullValue = 0;
using EncodedObject = std::array<ValueId, kFieldCount>;
using TemplateKey = std::array<ValueId, kMaxTemplateArity>;

struct TemplateKeyHash {
  std::size_t operator()(const TemplateKey& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (ValueId v : k) h = (h ^ v) * 0x100000001b3ULL;
    return h;
  }
};

// Interns every string occurring in objects and tags; id 0 is null.
class StringPool {
 public:
  StringPool() { strings_.emplace_back(); }

  ValueId intern(std::string_view s) {
    auto it = ids_.find(s);
    if (it != ids_.end()) return it->second;
    auto id = static_cast<ValueId>(strings_.size());
    strings_.emplace_back(s);
    ids_.emplace(strings_.back(), id);
    return id;
  }
  ValueId find(std::string_view s) const {
    auto it = ids_.find(s);
    return it == ids_.end() ? kNullValue : it->second;
  }
  const std::string& str(ValueId id) const { return strings_[id]; }

 private:
  std::vector<std::string> strings_;
  StringMap<ValueId> ids_;
};

// Case view over an encoded object.
struct EncodedCase {
  const EncodedObject* obj;
  const StringPool* pool;
  std::optional<std::string_view> field(Field f) const {
    ValueId v = (*obj)[static_cast<std::size_t>(f)];
    if (v == kNullValue) return std::nullopt;
    return std::string_view(pool->str(v));
  }
};

inline bool bind_key(const RuleTemplate& t, const EncodedObject& obj, TemplateKey& key) {
  key = {};
  for (std::size_t i = 0; i < t.arity; ++i) {
    ValueId v = obj[static_cast<std::size_t>(t.fields[i])];
    if (v == kNullValue) return false;
    key[i] = v;
  }
  return true;
}

struct EncodedCandidate {
  int template_id = -1;
  TemplateKey key{};
  ValueId conclusion = kNullValue;
  long a = 0;
  long b = 0;
  long score = 0;
};

// Deterministic ranking: higher score, then lower template id, then bound
// values and conclusion compared as strings.
inline bool ranks_before(const EncodedCandidate& x, const EncodedCandidate& y, const StringPool& pool) {
  if (x.score != y.score) return x.score > y.score;
  if (x.template_id != y.template_id) return x.template_id < y.template_id;
  for (std::size_t i = 0; i < kMaxTemplateArity; ++i) {
    if (x.key[i] == y.key[i]) continue;
    return pool.str(x.key[i]) < pool.str(y.key[i]);
  }
  return pool.str(x.conclusion) < pool.str(y.conclusion);
}

struct TagCounts {
  long total = 0;
  std::vector<std::pair<ValueId, long>> by_tag;
  void add(ValueId tag) {
    ++total;
    for (auto& [t, c] : by_tag)
      if (t == tag) { ++c; return; }
    by_tag.emplace_back(tag, 1);
  }
};

// Best candidate of one template over the wrong set, skipping keys that
// occur in the excluded (correct) set when `exclude` is set.
inline std::optional<EncodedCandidate> best_for_template(const RuleTemplate& tmpl,
                                                         std::span<const EncodedObject> objs,
                                                         std::span<const ValueId> correct,
                                                         std::span<const std::uint32_t> wrong_set,
                                                         std::span<const std::uint32_t> correct_set, bool exclude,
                                                         const StringPool& pool) {
  std::unordered_map<TemplateKey, TagCounts, TemplateKeyHash> groups;
  TemplateKey key;
  for (std::uint32_t r : wrong_set)
    if (bind_key(tmpl, objs[r], key)) groups[key].add(correct[r]);
  if (groups.empty()) return std::nullopt;

  std::unordered_set<TemplateKey, TemplateKeyHash> excluded;
  if (exclude)
    for (std::uint32_t r : correct_set)
      if (bind_key(tmpl, objs[r], key)) excluded.insert(key);

  std::optional<EncodedCandidate> best;
  for (const auto& [k, counts] : groups) {
    if (excluded.contains(k)) continue;
    for (const auto& [tag, n] : counts.by_tag) {
      EncodedCandidate c{tmpl.id, k, tag, n, counts.total - n, 2 * n - counts.total};
      if (!best || ranks_before(c, *best, pool)) best = c;
    }
  }
  return best;
}

// Scores every template (optionally across threads) and merges with the
// deterministic ranking. Threshold not applied.
inline std::optional<EncodedCandidate> best_candidate(std::span<const EncodedObject> objs,
                                                      std::span<const ValueId> correct,
                                                      std::span<const std::uint32_t> wrong_set,
                                                      std::span<const std::uint32_t> correct_set, bool exclude,
                                                      const StringPool& pool, unsigned threads) {
  if (wrong_set.empty()) return std::nullopt;
  std::array<std::optional<EncodedCandidate>, kRuleTemplates.size()> per_template;
  auto run = [&](std::size_t begin, std::size_t step) {
    for (std::size_t t = begin; t < kRuleTemplates.size(); t += step)
      per_template[t] = best_for_template(kRuleTemplates[t], objs, correct, wrong_set, correct_set, exclude, pool);
  };
  if (threads <= 1) {
    run(0, 1);
  } else {
    std::vector<std::jthread> workers;
    const std::size_t n = std::min<std::size_t>(threads, kRuleTemplates.size());
    for (std::size_t i = 0; i < n; ++i) workers.emplace_back(run, i, n);
  }
  std::optional<EncodedCandidate> best;
  for (const auto& c : per_template)
    if (c && (!best || ranks_before(*c, *best, pool))) best = c;
  return best;
}

inline Rule decode_rule(const EncodedCandidate& c, const StringPool& pool) {
  const RuleTemplate& tmpl = kRuleTemplates[static_cast<std::size_t>(c.template_id)];
  std::vector<FieldTest> tests;
  for (std::size_t i = 0; i < tmpl.arity; ++i) tests.push_back(FieldTest{tmpl.fields[i], pool.str(c.key[i])});
  return Rule{Condition(std::move(tests)), pool.str(c.conclusion)};
}

}  // namespace detail

// Picks the exception rule to add under a node of `parent_level`, given the
// records it gets wrong and right. Returns nothing when no candidate clears
// the threshold.
inline std::optional<ScoredRule> select_rule(std::span<const ObjectRecord> wrong_set,
                                             std::span<const ObjectRecord> correct_set, int parent_level,
                                             const Thresholds& thresholds, unsigned threads = 1) {
  detail::StringPool pool;
  std::vector<detail::EncodedObject> objs;
  std::vector<detail::ValueId> correct;
  std::vector<std::uint32_t> wrong_idx, correct_idx;
  auto add = [&](const ObjectRecord& r, std::vector<std::uint32_t>& idx) {
    detail::EncodedObject e{};
    for (std::size_t i = 0; i < kFieldCount; ++i)
      if (r.obj.values[i]) e[i] = pool.intern(*r.obj.values[i]);
    idx.push_back(static_cast<std::uint32_t>(objs.size()));
    objs.push_back(e);
    correct.push_back(pool.intern(r.correct));
  };
  for (const auto& r : wrong_set) add(r, wrong_idx);
  for (const auto& r : correct_set) add(r, correct_idx);

  auto best = detail::best_candidate(objs, correct, wrong_idx, correct_idx, parent_level > 1, pool, threads);
  if (!best || !thresholds.passes(best->score, parent_level)) return std::nullopt;
  return ScoredRule{CandidateRule{best->template_id, detail::decode_rule(*best, pool)}, best->a, best->b,
                    best->score};
}

// The object-driven dictionary: one record per token, windows taken from
// the initialized corpus, correct tags from the gold one.
inline std::vector<ObjectRecord> build_records(const TaggedCorpus& initialized, const TaggedCorpus& gold) {
  if (initialized.sentences.size() != gold.sentences.size())
    throw DataError("initialized corpus has " + std::to_string(initialized.sentences.size()) +
                    " sentences, gold has " + std::to_string(gold.sentences.size()));
  for (std::size_t s = 0; s < gold.sentences.size(); ++s) {
    const auto& a = initialized.sentences[s];
    const auto& b = gold.sentences[s];
    if (a.size() != b.size())
      throw DataError("sentence " + std::to_string(s + 1) + ": " + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()) + " tokens");
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].word != b[i].word)
        throw DataError("sentence " + std::to_string(s + 1) + ", token " + std::to_string(i + 1) + ": '" +
                        a[i].word + "' vs '" + b[i].word + "'");
  }
  auto objs = extract_objects(initialized);
  std::vector<ObjectRecord> records;
  records.reserve(objs.size());
  std::size_t k = 0;
  for (const auto& s : gold.sentences)
    for (const auto& t : s) records.push_back(ObjectRecord{std::move(objs[k++]), t.tag});
  return records;
}

// Default rule plus one "currentTag == T -> T" node per tag, chained by
// if-not edges in the given order.
inline RdrTree seed_layer1(const std::vector<std::string>& tags) {
  RdrTree tree;
  NodeId prev = kNoNode;
  for (const auto& t : tags) {
    Rule r{Condition({FieldTest{Field::kCurrentTag, t}}), t};
    prev = prev == kNoNode ? tree.add_except_child(kRootNode, std::move(r)) : tree.add_ifnot_child(prev, std::move(r));
  }
  return tree;
}

inline std::vector<NodeId> node_path(const RdrTree& tree, NodeId id) {
  std::vector<NodeId> path;
  for (NodeId cur = id; cur != kNoNode; cur = tree.node(cur).parent) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

struct LearnResult {
  RdrTree tree;
  std::vector<Insertion> insertions;
  std::size_t records = 0;
  std::size_t initial_correct = 0;
  std::size_t final_correct = 0;
  // True when a from-scratch evaluation of every record reproduced the
  // incrementally maintained node ledger.
  bool ledger_consistent = false;

  double initial_accuracy() const { return records ? double(initial_correct) / double(records) : 1.0; }
  double training_accuracy() const { return records ? double(final_correct) / double(records) : 1.0; }
};

class Learner {
 public:
  Learner(const std::vector<ObjectRecord>& records, const std::vector<std::string>& layer1_tags,
          LearnerOptions opts)
      : opts_(opts) {
    objs_.reserve(records.size());
    correct_.reserve(records.size());
    for (const auto& r : records) {
      detail::EncodedObject e{};
      for (std::size_t i = 0; i < kFieldCount; ++i)
        if (r.obj.values[i]) e[i] = pool_.intern(*r.obj.values[i]);
      objs_.push_back(e);
      correct_.push_back(pool_.intern(r.correct));
    }
    tree_ = seed_layer1(layer1_tags);
    for (const auto& n : tree_.nodes()) register_node(n.rule);

    // Initial filing: each record sits under the layer-1 node of its tag,
    // or under the root when its tag has no layer-1 node.
    std::unordered_map<detail::ValueId, NodeId> by_tag;
    for (NodeId id = 1; id < static_cast<NodeId>(tree_.size()); ++id)
      by_tag.emplace(conclusion_[static_cast<std::size_t>(id)], id);
    const auto cur = static_cast<std::size_t>(Field::kCurrentTag);
    for (std::uint32_t r = 0; r < objs_.size(); ++r) {
      auto it = by_tag.find(objs_[r][cur]);
      ledger_[static_cast<std::size_t>(it == by_tag.end() ? kRootNode : it->second)].push_back(r);
    }
  }

  LearnResult run() {
    for (NodeId id = tree_.root().except_child; id != kNoNode; id = tree_.node(id).ifnot_child) process(id);

    LearnResult result;
    result.records = objs_.size();
    const auto cur = static_cast<std::size_t>(Field::kCurrentTag);
    for (std::uint32_t r = 0; r < objs_.size(); ++r)
      if (objs_[r][cur] == correct_[r]) ++result.initial_correct;
    for (std::size_t n = 0; n < ledger_.size(); ++n)
      for (std::uint32_t r : ledger_[n])
        if (final_tag(static_cast<NodeId>(n), r) == correct_[r]) ++result.final_correct;
    result.ledger_consistent = ledger_matches_reevaluation();
    result.insertions = std::move(insertions_);
    result.tree = std::move(tree_);
    return result;
  }

 private:
  // Tag the tagger outputs for record r filed under node n: the node's
  // conclusion, or the initial tag when only the default rule fired.
  detail::ValueId final_tag(NodeId n, std::uint32_t r) const {
    if (n == kRootNode) return objs_[r][static_cast<std::size_t>(Field::kCurrentTag)];
    return conclusion_[static_cast<std::size_t>(n)];
  }

  void register_node(const Rule& rule) {
    std::vector<std::pair<std::size_t, detail::ValueId>> enc;
    for (const auto& t : rule.condition.tests())
      enc.emplace_back(static_cast<std::size_t>(t.field), pool_.intern(t.value));
    conditions_.push_back(std::move(enc));
    conclusion_.push_back(pool_.intern(rule.conclusion));
    ledger_.emplace_back();
  }

  bool matches(std::size_t node, std::uint32_t r) const {
    for (const auto& [f, v] : conditions_[node])
      if (objs_[r][f] != v) return false;
    return true;
  }

  void process(NodeId eta) {
    const int level = tree_.node(eta).level;
    std::vector<std::uint32_t> wrong, right;
    for (;;) {
      wrong.clear();
      right.clear();
      const auto e = static_cast<std::size_t>(eta);
      for (std::uint32_t r : ledger_[e]) (correct_[r] == conclusion_[e] ? right : wrong).push_back(r);

      auto best = detail::best_candidate(objs_, correct_, wrong, right, level > 1, pool_, opts_.threads);
      if (!best || !opts_.thresholds.passes(best->score, level)) return;
      if (level + 1 > opts_.max_level)
        throw DataError("rule under node " + std::to_string(eta) + " would exceed the level cap of " +
                        std::to_string(opts_.max_level));

      Rule rule = detail::decode_rule(*best, pool_);
      Insertion ins;
      ins.parent = eta;
      ins.parent_level = level;
      ins.template_id = best->template_id;
      ins.rule = rule_text(rule);
      ins.a = best->a;
      ins.b = best->b;
      ins.score = best->score;
      for (std::uint32_t r : right)
        if (satisfies(detail::EncodedCase{&objs_[r], &pool_}, rule.condition)) ++ins.correct_set_hits;

      const NodeId nu = tree_.insert_exception(eta, rule);
      register_node(rule);
      const auto n = static_cast<std::size_t>(nu);
      auto& from = ledger_[e];
      auto split = std::stable_partition(from.begin(), from.end(), [&](std::uint32_t r) { return !matches(n, r); });
      ledger_[n].assign(split, from.end());
      from.erase(split, from.end());

      ins.node = nu;
      ins.level = tree_.node(nu).level;
      ins.path = node_path(tree_, nu);
      insertions_.push_back(std::move(ins));
      process(nu);
    }
  }

  bool ledger_matches_reevaluation() const {
    std::vector<NodeId> filed(objs_.size(), kNoNode);
    for (std::size_t n = 0; n < ledger_.size(); ++n)
      for (std::uint32_t r : ledger_[n]) {
        if (filed[r] != kNoNode) return false;
        filed[r] = static_cast<NodeId>(n);
      }
    for (std::uint32_t r = 0; r < objs_.size(); ++r)
      if (tree_.last_fired(detail::EncodedCase{&objs_[r], &pool_}) != filed[r]) return false;
    return true;
  }

  LearnerOptions opts_;
  detail::StringPool pool_;
  std::vector<detail::EncodedObject> objs_;
  std::vector<detail::ValueId> correct_;
  RdrTree tree_;
  // Per node, indexed by NodeId.
  std::vector<std::vector<std::pair<std::size_t, detail::ValueId>>> conditions_;
  std::vector<detail::ValueId> conclusion_;
  std::vector<std::vector<std::uint32_t>> ledger_;
  std::vector<Insertion> insertions_;
};

// Learns a tree that corrects `initialized` towards `gold`. Layer-1 rules
// come from the initialized corpus's tags; gold-only tags are allowed.
inline LearnResult learn(const TaggedCorpus& initialized, const TaggedCorpus& gold, const LearnerOptions& opts = {}) {
  if (opts.thresholds.layer2 < 1 || opts.thresholds.higher < 1)
    throw DataError("thresholds must be at least 1");
  if (opts.max_level < 1) throw DataError("level cap must be at least 1");
  auto records = build_records(initialized, gold);
  return Learner(records, tagset(initialized), opts).run();
}

}  // namespace rdr
