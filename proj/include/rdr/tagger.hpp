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

// Tagging with a learned model, and the on-disk model directory.

#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "rdr/corpus.hpp"
#include "rdr/initial_tagger.hpp"
#include "rdr/lexicon.hpp"
#include "rdr/scrdr_tree.hpp"
#include "rdr/tag_object.hpp"

namespace rdr {

struct Model {
  Lexicon lexicon;
  RdrTree tree;
  InitialTaggerOptions init;
};

// Initial tags from the lexicon tagger, then one pass of the tree over the
// initially tagged sentence. Where only the default rule fires, the initial
// tag is kept.
class Tagger {
 public:
  // `model` must outlive the tagger.
  explicit Tagger(const Model& model) : model_(&model), initial_(model.lexicon, model.init) {}

  std::vector<std::string> tag(const RawSentence& words) const {
    return correct(words, initial_.tag_sentence(words));
  }

  // Applies the tree on top of externally supplied initial tags.
  std::vector<std::string> correct(const RawSentence& words, const std::vector<std::string>& initial) const {
    std::vector<std::string> out;
    out.reserve(words.size());
    const RdrTree& tree = model_->tree;
    for (std::size_t i = 0; i < words.size(); ++i) {
      NodeId last = tree.last_fired(WindowCase(words, initial, i));
      out.push_back(last == kRootNode ? initial[i] : tree.node(last).rule.conclusion);
    }
    return out;
  }

  TaggedCorpus tag_corpus(const RawCorpus& raw, unsigned threads = 1) const {
    return run(raw.size(), threads, [&](std::size_t s) {
      const auto& words = raw[s];
      return zip(words, tag(words));
    });
  }

  TaggedCorpus correct_corpus(const TaggedCorpus& initialized, unsigned threads = 1) const {
    return run(initialized.sentences.size(), threads, [&](std::size_t s) {
      RawSentence words;
      std::vector<std::string> tags;
      for (const auto& t : initialized.sentences[s]) {
        words.push_back(t.word);
        tags.push_back(t.tag);
      }
      return zip(words, correct(words, tags));
    });
  }

  const InitialTagger& initial_tagger() const { return initial_; }

 private:
  static Sentence zip(const RawSentence& words, std::vector<std::string> tags) {
    Sentence s;
    s.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) s.push_back(Token{words[i], std::move(tags[i])});
    return s;
  }

  // Sentences are independent; output keeps input order.
  template <typename Fn>
  static TaggedCorpus run(std::size_t n, unsigned threads, Fn&& one) {
    TaggedCorpus out;
    out.sentences.resize(n);
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t s = begin; s < end; ++s) out.sentences[s] = one(s);
    };
    if (threads <= 1 || n < 2) {
      work(0, n);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (n + threads - 1) / threads;
      for (std::size_t b = 0; b < n; b += chunk) pool.emplace_back(work, b, std::min(n, b + chunk));
    }
    return out;
  }

  const Model* model_;
  InitialTagger initial_;
};

inline constexpr const char* kTreeFile = "model.rdr";
inline constexpr const char* kLexiconFile = "model.lex";
inline constexpr const char* kAuditFile = "audit.jsonl";
// Present only for english-regex models.
inline constexpr const char* kRegexFile = "model.regex";

inline std::string serialize_regex_rules(const std::vector<RegexRule>& rules) {
  std::string out;
  for (const auto& r : rules) out += r.pattern + '\t' + r.tag + '\n';
  return out;
}

inline void save_model(const std::filesystem::path& dir, const Model& model) {
  std::filesystem::create_directories(dir);
  write_file((dir / kTreeFile).string(), serialize_tree(model.tree));
  write_file((dir / kLexiconFile).string(), serialize_lexicon(model.lexicon));
  const auto regex_path = dir / kRegexFile;
  if (model.init.mode == InitMode::kEnglishRegex)
    write_file(regex_path.string(), serialize_regex_rules(model.init.regex_rules));
  else
    std::filesystem::remove(regex_path);
}

inline Model load_model(const std::filesystem::path& dir) {
  Model m;
  for (const char* f : {kTreeFile, kLexiconFile})
    if (!std::filesystem::exists(dir / f)) throw DataError("model file '" + (dir / f).string() + "' is missing");
  auto with_file = [](const std::filesystem::path& p, auto&& parse) {
    try {
      return parse(read_file(p.string()));
    } catch (const ParseError& e) {
      throw DataError(p.string() + ": " + e.what());
    }
  };
  m.tree = with_file(dir / kTreeFile, [](const std::string& s) { return parse_tree(s); });
  m.lexicon = with_file(dir / kLexiconFile, [](const std::string& s) { return parse_lexicon(s); });
  if (std::filesystem::exists(dir / kRegexFile)) {
    m.init.mode = InitMode::kEnglishRegex;
    m.init.regex_rules = with_file(dir / kRegexFile, [](const std::string& s) { return parse_regex_rules(s); });
  }
  return m;
}

}  // namespace rdr
