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

// rdrtag: train, tag, eval, xval.
//
// Exit codes: 0 success, 1 usage error, 2 data error. Diagnostics go to
// stderr. Options may also come from a TOML/INI file given with --config
// (flags override the file).

#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rdr/commands.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

const std::map<std::string, rdr::InitMode> kModes = {{"generic", rdr::InitMode::kGeneric},
                                                     {"english-regex", rdr::InitMode::kEnglishRegex}};

void add_separator(CLI::App* cmd, char& sep) {
  cmd->add_option("--separator", sep, "Character joining word and tag")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ripple-down-rules POS / morphological tagger"};
  app.set_config("--config", "", "TOML or INI file with option defaults");
  app.require_subcommand(1);

  rdr::TrainConfig train;
  std::string mode = "generic";
  std::string init_from, regex_file;
  auto* c_train = app.add_subcommand("train", "Learn a model from a gold tagged corpus");
  c_train->add_option("--corpus", train.corpus, "Gold tagged corpus")->required()->check(CLI::ExistingFile);
  c_train->add_option("--model", train.model_dir, "Output model directory")->required();
  c_train->add_option("--threshold1", train.options.learner.thresholds.layer2, "Score threshold for layer-2 rules")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  c_train->add_option("--threshold2", train.options.learner.thresholds.higher, "Score threshold for deeper rules")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  c_train->add_flag("!--non-strict", train.options.learner.thresholds.strict,
                    "Accept rules whose score equals the threshold");
  add_separator(c_train, train.separator);
  c_train->add_option("--mode", mode, "Unknown-word handling")
      ->capture_default_str()
      ->check(CLI::IsMember({"generic", "english-regex"}));
  c_train->add_option("--regex-rules", regex_file, "pattern<TAB>tag file for english-regex mode")
      ->check(CLI::ExistingFile);
  c_train->add_option("--init-from", init_from, "Externally initialized corpus to learn corrections for")
      ->check(CLI::ExistingFile);
  c_train->add_option("--max-level", train.options.learner.max_level, "Exception level cap")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  c_train->add_option("--threads", train.options.learner.threads, "Threads for rule scoring")->capture_default_str();

  rdr::TagConfig tag;
  std::string tag_init;
  auto* c_tag = app.add_subcommand("tag", "Tag raw text (one sentence per line)");
  c_tag->add_option("--model", tag.model_dir, "Model directory")->required()->check(CLI::ExistingDirectory);
  c_tag->add_option("--input", tag.input, "Raw text")->required()->check(CLI::ExistingFile);
  c_tag->add_option("--output", tag.output, "Tagged output")->required();
  c_tag->add_option("--init-from", tag_init, "Initial tags from an external tagger")->check(CLI::ExistingFile);
  c_tag->add_option("--threads", tag.threads, "Tagging threads")->capture_default_str();
  add_separator(c_tag, tag.separator);

  rdr::EvalConfig eval;
  auto* c_eval = app.add_subcommand("eval", "Score predictions against gold; JSON to stdout");
  c_eval->add_option("--gold", eval.gold, "Gold tagged corpus")->required()->check(CLI::ExistingFile);
  c_eval->add_option("--pred", eval.pred, "Predicted tagged corpus")->required()->check(CLI::ExistingFile);
  c_eval->add_option("--train-corpus", eval.train_corpus, "Training corpus (defines known words)")
      ->required()
      ->check(CLI::ExistingFile);
  add_separator(c_eval, eval.separator);

  rdr::XvalConfig xval;
  std::string xmode = "generic";
  auto* c_xval = app.add_subcommand("xval", "Contiguous k-fold cross-validation");
  c_xval->add_option("--corpus", xval.corpus, "Gold tagged corpus")->required()->check(CLI::ExistingFile);
  c_xval->add_option("--folds", xval.folds, "Number of folds")->capture_default_str()->check(CLI::Range(2, 1000000));
  c_xval->add_option("--report", xval.report, "Output report (JSON)")->required();
  c_xval->add_option("--threshold1", xval.cv.train.learner.thresholds.layer2, "Score threshold for layer-2 rules")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  c_xval->add_option("--threshold2", xval.cv.train.learner.thresholds.higher, "Score threshold for deeper rules")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  c_xval->add_option("--mode", xmode, "Unknown-word handling")
      ->capture_default_str()
      ->check(CLI::IsMember({"generic", "english-regex"}));
  c_xval->add_option("--max-level", xval.cv.train.learner.max_level, "Exception level cap")->capture_default_str();
  c_xval->add_option("--speed-repeats", xval.cv.speed_repeats, "Tagging-speed repeats per fold")
      ->capture_default_str();
  c_xval->add_option("--threads", xval.cv.fold_threads, "Folds run concurrently")->capture_default_str();
  add_separator(c_xval, xval.separator);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*c_train) {
      train.options.mode = kModes.at(mode);
      if (!init_from.empty()) train.init_from = init_from;
      if (!regex_file.empty()) train.regex_file = regex_file;
      auto trained = rdr::cmd_train(train);
      std::cerr << "learned " << trained.model.tree.size() - 1 << " rules, depth " << trained.model.tree.depth()
                << "; training accuracy " << trained.learned.initial_accuracy() << " -> "
                << trained.learned.training_accuracy() << "\n";
    } else if (*c_tag) {
      if (!tag_init.empty()) tag.init_from = tag_init;
      rdr::cmd_tag(tag);
    } else if (*c_eval) {
      std::cout << rdr::cmd_eval(eval).dump(2) << "\n";
    } else if (*c_xval) {
      xval.cv.train.mode = kModes.at(xmode);
      auto rep = rdr::cmd_xval(xval);
      std::cerr << "mean accuracy " << rdr::report_json(rep, xval.cv.speed_repeats)["mean"]["all_acc"] << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "rdrtag: " << e.what() << "\n";
    return kDataError;
  }
  return 0;
}
