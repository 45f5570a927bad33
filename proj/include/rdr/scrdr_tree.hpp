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

// Single Classification Ripple Down Rules tree.
//
// Every node holds a rule "if condition then tag = conclusion" and has up to
// two children: the except child, tried when the node fires, and the if-not
// child, tried when it does not. A case enters at the root (whose condition
// is always true) and the conclusion is taken from the last node that fired.
//
// Nodes live in a flat vector addressed by NodeId; the root is node 0.
// Levels count except edges from the root: the root is level 0, its except
// chain is level 1, and so on. If-not children share their sibling's level.
//
// Model text format, one node per line in preorder (node, except subtree,
// if-not subtree), indented by one tab per level:
//
//   if True then tag = ""
//   	if currentTag == "VB" then tag = "VB"
//   		if prev1Tag == "NNS" then tag = "VBP"
//   	if currentTag == "NN" then tag = "NN"
//
// A line one level deeper than the line above is that node's except child;
// a line at an already open level is the if-not child of the last node seen
// at that level.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdr/tag_object.hpp"
#include "rdr/text.hpp"

namespace rdr {

struct FieldTest {
  Field field;
  std::string value;

  bool operator==(const FieldTest&) const = default;
  auto operator<=>(const FieldTest&) const = default;
};

// Conjunction of equality tests, at most one per field, kept sorted by field.
// No tests means the always-true condition (root only).
class Condition {
 public:
  Condition() = default;
  explicit Condition(std::vector<FieldTest> tests) : tests_(std::move(tests)) {
    std::sort(tests_.begin(), tests_.end());
    for (std::size_t i = 1; i < tests_.size(); ++i)
      if (tests_[i].field == tests_[i - 1].field)
        throw DataError("condition tests field '" + std::string(field_name(tests_[i].field)) + "' twice");
  }

  bool is_true() const { return tests_.empty(); }
  const std::vector<FieldTest>& tests() const { return tests_; }

  bool operator==(const Condition&) const = default;

 private:
  std::vector<FieldTest> tests_;
};

struct Rule {
  Condition condition;
  std::string conclusion;

  bool operator==(const Rule&) const = default;
};

// A null field never satisfies a test.
template <Case C>
bool satisfies(const C& c, const Condition& cond) {
  for (const auto& t : cond.tests()) {
    auto v = c.field(t.field);
    if (!v || *v != t.value) return false;
  }
  return true;
}

using NodeId = std::int32_t;
constexpr NodeId kNoNode = -1;
constexpr NodeId kRootNode = 0;

struct RdrNode {
  Rule rule;
  NodeId except_child = kNoNode;
  NodeId ifnot_child = kNoNode;
  // The node whose except or if-not edge leads here.
  NodeId parent = kNoNode;
  int level = 0;
};

struct EvaluationResult {
  std::string conclusion;
  std::vector<NodeId> path;
  NodeId last_fired = kRootNode;
};

class RdrTree {
 public:
  // A tree holding only the default rule `if True then tag = ""`.
  RdrTree() { nodes_.push_back(RdrNode{}); }

  std::size_t size() const { return nodes_.size(); }
  const RdrNode& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
  const RdrNode& root() const { return nodes_.front(); }
  const std::vector<RdrNode>& nodes() const { return nodes_; }

  // Attaches `rule` as an exception of `parent`: as its except child when it
  // has none, otherwise at the end of the if-not chain hanging off it.
  NodeId insert_exception(NodeId parent, Rule rule) {
    check_rule(rule);
    NodeId cur = node(parent).except_child;
    if (cur == kNoNode) return attach(parent, std::move(rule), /*except=*/true);
    while (node(cur).ifnot_child != kNoNode) cur = node(cur).ifnot_child;
    return attach(cur, std::move(rule), /*except=*/false);
  }

  // Low-level edge construction, used by the parser and tests.
  NodeId add_except_child(NodeId parent, Rule rule) {
    check_rule(rule);
    if (node(parent).except_child != kNoNode) throw DataError("node already has an except child");
    return attach(parent, std::move(rule), true);
  }
  NodeId add_ifnot_child(NodeId sibling, Rule rule) {
    check_rule(rule);
    if (sibling == kRootNode) throw DataError("the root cannot have an if-not child");
    if (node(sibling).ifnot_child != kNoNode) throw DataError("node already has an if-not child");
    return attach(sibling, std::move(rule), false);
  }

  // Normally "", which makes the caller fall back to the initial tag.
  void set_default_conclusion(std::string tag) { nodes_.front().rule.conclusion = std::move(tag); }

  int depth() const {
    int d = 0;
    for (const auto& n : nodes_) d = std::max(d, n.level);
    return d;
  }

  // Nodes per level; index 0 is the root.
  std::vector<std::size_t> level_census() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(depth()) + 1, 0);
    for (const auto& n : nodes_) ++counts[static_cast<std::size_t>(n.level)];
    return counts;
  }

  // Walks the tree, calling visit(id) on every node on the evaluation path.
  // Returns the last node that fired.
  template <Case C, typename Visit>
  NodeId walk(const C& c, Visit&& visit) const {
    NodeId last = kRootNode;
    NodeId cur = kRootNode;
    while (cur != kNoNode) {
      visit(cur);
      const RdrNode& n = nodes_[static_cast<std::size_t>(cur)];
      if (satisfies(c, n.rule.condition)) {
        last = cur;
        cur = n.except_child;
      } else {
        cur = n.ifnot_child;
      }
    }
    return last;
  }

  template <Case C>
  NodeId last_fired(const C& c) const {
    return walk(c, [](NodeId) {});
  }

  template <Case C>
  EvaluationResult evaluate(const C& c) const {
    EvaluationResult r;
    r.last_fired = walk(c, [&](NodeId id) { r.path.push_back(id); });
    r.conclusion = node(r.last_fired).rule.conclusion;
    return r;
  }

  // Copy without nodes deeper than max_level.
  RdrTree truncate(int max_level) const {
    if (max_level < 1) throw DataError("truncation level must be at least 1");
    RdrTree out;
    out.set_default_conclusion(root().rule.conclusion);
    copy_subtree(node(kRootNode).except_child, kRootNode, true, max_level, out);
    return out;
  }

 private:
  NodeId attach(NodeId from, Rule rule, bool except) {
    RdrNode n;
    n.rule = std::move(rule);
    n.parent = from;
    n.level = node(from).level + (except ? 1 : 0);
    auto id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(std::move(n));
    auto& src = nodes_[static_cast<std::size_t>(from)];
    (except ? src.except_child : src.ifnot_child) = id;
    return id;
  }

  static void check_rule(const Rule& rule) {
    if (rule.condition.is_true()) throw DataError("only the default rule may have an always-true condition");
    if (rule.conclusion.empty()) throw DataError("only the default rule may conclude an empty tag");
  }

  void copy_subtree(NodeId src, NodeId dst_from, bool except, int max_level, RdrTree& out) const {
    // Iterate the if-not chain, recursing into except children.
    while (src != kNoNode) {
      const RdrNode& n = node(src);
      if (n.level > max_level) return;
      NodeId copy = except ? out.add_except_child(dst_from, n.rule) : out.add_ifnot_child(dst_from, n.rule);
      copy_subtree(n.except_child, copy, true, max_level, out);
      dst_from = copy;
      except = false;
      src = n.ifnot_child;
    }
  }

  std::vector<RdrNode> nodes_;
};

// Same shape and same rules, regardless of node numbering.
inline bool structurally_equal(const RdrTree& a, const RdrTree& b) {
  std::vector<std::pair<NodeId, NodeId>> stack{{kRootNode, kRootNode}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if ((x == kNoNode) != (y == kNoNode)) return false;
    if (x == kNoNode) continue;
    const auto& nx = a.node(x);
    const auto& ny = b.node(y);
    if (nx.rule != ny.rule || nx.level != ny.level) return false;
    stack.emplace_back(nx.except_child, ny.except_child);
    stack.emplace_back(nx.ifnot_child, ny.ifnot_child);
  }
  return true;
}

namespace detail {

inline void append_quoted(std::string& out, std::string_view v) {
  out += '"';
  for (char ch : v) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
}

}  // namespace detail

inline std::string condition_text(const Condition& cond) {
  if (cond.is_true()) return "True";
  std::string out;
  for (std::size_t i = 0; i < cond.tests().size(); ++i) {
    const auto& t = cond.tests()[i];
    if (i) out += " and ";
    out += field_name(t.field);
    out += " == ";
    detail::append_quoted(out, t.value);
  }
  return out;
}

inline std::string rule_text(const Rule& rule) {
  std::string out = "if " + condition_text(rule.condition) + " then tag = ";
  detail::append_quoted(out, rule.conclusion);
  return out;
}

inline std::string serialize_tree(const RdrTree& tree) {
  std::string out;
  std::vector<NodeId> stack{kRootNode};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const RdrNode& n = tree.node(id);
    out.append(static_cast<std::size_t>(n.level), '\t');
    out += rule_text(n.rule);
    out += '\n';
    if (n.ifnot_child != kNoNode) stack.push_back(n.ifnot_child);
    if (n.except_child != kNoNode) stack.push_back(n.except_child);
  }
  return out;
}

namespace detail {

class RuleLineParser {
 public:
  RuleLineParser(std::string_view s, std::size_t line_no) : s_(s), line_(line_no) {}

  Rule parse() {
    expect("if ");
    std::vector<FieldTest> tests;
    if (s_.substr(pos_).starts_with("True ")) {
      pos_ += 4;
    } else {
      for (;;) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ' ') ++pos_;
        std::string_view name = s_.substr(start, pos_ - start);
        auto field = field_from_name(name);
        if (!field) fail("unknown field '" + std::string(name) + "'");
        expect(" == ");
        tests.push_back(FieldTest{*field, quoted()});
        if (s_.substr(pos_).starts_with(" and ")) {
          pos_ += 5;
          continue;
        }
        break;
      }
    }
    expect(" then tag = ");
    std::string conclusion = quoted();
    if (pos_ != s_.size()) fail("trailing characters");
    if (!tests.empty() && conclusion.empty()) fail("empty conclusion on a non-default rule");
    try {
      return Rule{Condition(std::move(tests)), std::move(conclusion)};
    } catch (const DataError& e) {
      fail(e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

  void expect(std::string_view lit) {
    if (s_.substr(pos_).substr(0, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }

  std::string quoted() {
    if (pos_ >= s_.size() || s_[pos_] != '"') fail("expected '\"'");
    ++pos_;
    std::string v;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\') {
        if (++pos_ >= s_.size()) break;
      }
      v += s_[pos_++];
    }
    if (pos_ >= s_.size()) fail("unterminated string");
    ++pos_;
    return v;
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RdrTree parse_tree(std::string_view text) {
  RdrTree tree;
  bool have_root = false;
  // Last node seen at each level.
  std::vector<NodeId> open;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (line.empty()) return;
    std::size_t depth = 0;
    while (depth < line.size() && line[depth] == '\t') ++depth;
    Rule rule = detail::RuleLineParser(line.substr(depth), line_no).parse();

    if (!have_root) {
      if (depth != 0 || !rule.condition.is_true())
        throw ParseError(line_no, "first line must be the default rule at depth 0");
      have_root = true;
      open.assign(1, kRootNode);
      tree = RdrTree();
      tree.set_default_conclusion(std::move(rule.conclusion));
      return;
    }
    if (depth == 0) throw ParseError(line_no, "only one node may sit at depth 0");
    if (rule.condition.is_true()) throw ParseError(line_no, "always-true condition below the root");
    if (depth > open.size()) throw ParseError(line_no, "indentation jumps more than one level");
    try {
      NodeId id;
      if (depth == open.size()) {
        id = tree.add_except_child(open.back(), std::move(rule));
        open.push_back(id);
      } else {
        open.resize(depth + 1);
        id = tree.add_ifnot_child(open[depth], std::move(rule));
        open[depth] = id;
      }
    } catch (const DataError& e) {
      throw ParseError(line_no, e.what());
    }
  });
  if (!have_root) throw ParseError(0, "empty model file");
  return tree;
}

}  // namespace rdr
