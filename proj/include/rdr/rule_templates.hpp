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

// Rule templates: which object fields a candidate exception rule may test.

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "rdr/scrdr_tree.hpp"
#include "rdr/tag_object.hpp"

namespace rdr {

constexpr std::size_t kMaxTemplateArity = 3;

struct RuleTemplate {
  int id;
  std::size_t arity;
  std::array<Field, kMaxTemplateArity> fields;
};

namespace detail {
using F = Field;
}  // namespace detail

// Ids are positions in this table (our numbering). Grouped as: words,
// word bigrams, word trigrams, tags, tag bigrams, word/tag combinations,
// suffixes.
inline constexpr std::array<RuleTemplate, 29> kRuleTemplates = {{
    {0, 1, {detail::F::kPrev2Word}},
    {1, 1, {detail::F::kPrev1Word}},
    {2, 1, {detail::F::kWord}},
    {3, 1, {detail::F::kNext1Word}},
    {4, 1, {detail::F::kNext2Word}},
    {5, 2, {detail::F::kPrev2Word, detail::F::kWord}},
    {6, 2, {detail::F::kPrev1Word, detail::F::kWord}},
    {7, 2, {detail::F::kPrev1Word, detail::F::kNext1Word}},
    {8, 2, {detail::F::kWord, detail::F::kNext1Word}},
    {9, 2, {detail::F::kWord, detail::F::kNext2Word}},
    {10, 3, {detail::F::kPrev2Word, detail::F::kPrev1Word, detail::F::kWord}},
    {11, 3, {detail::F::kPrev1Word, detail::F::kWord, detail::F::kNext1Word}},
    {12, 3, {detail::F::kWord, detail::F::kNext1Word, detail::F::kNext2Word}},
    {13, 1, {detail::F::kPrev2Tag}},
    {14, 1, {detail::F::kPrev1Tag}},
    {15, 1, {detail::F::kCurrentTag}},
    {16, 1, {detail::F::kNext1Tag}},
    {17, 1, {detail::F::kNext2Tag}},
    {18, 2, {detail::F::kPrev2Tag, detail::F::kPrev1Tag}},
    {19, 2, {detail::F::kPrev1Tag, detail::F::kNext1Tag}},
    {20, 2, {detail::F::kNext1Tag, detail::F::kNext2Tag}},
    {21, 2, {detail::F::kPrev1Tag, detail::F::kWord}},
    {22, 2, {detail::F::kWord, detail::F::kNext1Tag}},
    {23, 3, {detail::F::kPrev1Tag, detail::F::kWord, detail::F::kNext1Tag}},
    {24, 3, {detail::F::kPrev2Tag, detail::F::kPrev1Tag, detail::F::kWord}},
    {25, 3, {detail::F::kWord, detail::F::kNext1Tag, detail::F::kNext2Tag}},
    {26, 1, {detail::F::kSuffix2}},
    {27, 1, {detail::F::kSuffix3}},
    {28, 1, {detail::F::kSuffix4}},
}};

struct CandidateRule {
  int template_id;
  Rule rule;

  bool operator==(const CandidateRule&) const = default;
};

// Binds `tmpl` to the object's values. Returns false (leaving `out`
// untouched) when one of the template's fields is null.
template <Case C>
bool bind_template(const RuleTemplate& tmpl, const C& obj, std::vector<FieldTest>& out) {
  std::array<std::string_view, kMaxTemplateArity> vals;
  for (std::size_t i = 0; i < tmpl.arity; ++i) {
    auto v = obj.field(tmpl.fields[i]);
    if (!v) return false;
    vals[i] = *v;
  }
  for (std::size_t i = 0; i < tmpl.arity; ++i) out.push_back(FieldTest{tmpl.fields[i], std::string(vals[i])});
  return true;
}

// One candidate per template whose fields are all present, in catalog order.
template <Case C>
std::vector<CandidateRule> instantiate(const C& obj, const std::string& correct) {
  std::vector<CandidateRule> out;
  out.reserve(kRuleTemplates.size());
  std::vector<FieldTest> tests;
  for (const auto& tmpl : kRuleTemplates) {
    tests.clear();
    if (!bind_template(tmpl, obj, tests)) continue;
    out.push_back(CandidateRule{tmpl.id, Rule{Condition(tests), correct}});
  }
  return out;
}

}  // namespace rdr
