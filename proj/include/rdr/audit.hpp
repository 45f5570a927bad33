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

// Post-hoc learning report and the audit.jsonl log.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rdr/learner.hpp"

namespace rdr {

struct AuditReport {
  // Rule count per level; index 0 is the default rule.
  std::vector<std::size_t> rules_per_level;
  std::size_t records = 0;
  std::size_t initial_correct = 0;
  std::size_t final_correct = 0;

  double initial_accuracy() const { return records ? double(initial_correct) / double(records) : 1.0; }
  double training_accuracy() const { return records ? double(final_correct) / double(records) : 1.0; }
};

// Re-evaluates every record through the tree.
inline AuditReport audit(const RdrTree& tree, std::span<const ObjectRecord> records) {
  AuditReport rep;
  rep.rules_per_level = tree.level_census();
  rep.records = records.size();
  for (const auto& r : records) {
    const std::string& initial = *r.obj.values[static_cast<std::size_t>(Field::kCurrentTag)];
    if (initial == r.correct) ++rep.initial_correct;
    NodeId last = tree.last_fired(r.obj);
    const std::string& out = last == kRootNode ? initial : tree.node(last).rule.conclusion;
    if (out == r.correct) ++rep.final_correct;
  }
  return rep;
}

inline nlohmann::ordered_json insertion_json(const Insertion& ins) {
  nlohmann::ordered_json j;
  j["kind"] = "insertion";
  j["node"] = ins.node;
  j["parent"] = ins.parent;
  j["path"] = ins.path;
  j["level"] = ins.level;
  j["template"] = ins.template_id;
  j["rule"] = ins.rule;
  j["A"] = ins.a;
  j["B"] = ins.b;
  j["S"] = ins.score;
  j["correct_set_hits"] = ins.correct_set_hits;
  return j;
}

// Header line, one line per inserted rule, then a summary line.
inline std::string audit_jsonl(const LearnResult& result, const LearnerOptions& opts) {
  std::string out;
  nlohmann::ordered_json header;
  header["kind"] = "header";
  header["threshold1"] = opts.thresholds.layer2;
  header["threshold2"] = opts.thresholds.higher;
  header["strict"] = opts.thresholds.strict;
  header["max_level"] = opts.max_level;
  header["records"] = result.records;
  out += header.dump() + '\n';
  for (const auto& ins : result.insertions) out += insertion_json(ins).dump() + '\n';

  nlohmann::ordered_json summary;
  summary["kind"] = "summary";
  summary["rules"] = result.tree.size() - 1;
  summary["rules_per_level"] = result.tree.level_census();
  summary["initial_correct"] = result.initial_correct;
  summary["final_correct"] = result.final_correct;
  summary["initial_accuracy"] = result.initial_accuracy();
  summary["training_accuracy"] = result.training_accuracy();
  summary["ledger_consistent"] = result.ledger_consistent;
  out += summary.dump() + '\n';
  return out;
}

}  // namespace rdr
