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

#pragma once

#include "rdr/audit.hpp"
#include "rdr/commands.hpp"
#include "rdr/corpus.hpp"
#include "rdr/evaluation.hpp"
#include "rdr/initial_tagger.hpp"
#include "rdr/learner.hpp"
#include "rdr/lexicon.hpp"
#include "rdr/pipeline.hpp"
#include "rdr/rule_templates.hpp"
#include "rdr/scrdr_tree.hpp"
#include "rdr/tag_object.hpp"
#include "rdr/tagger.hpp"
#include "rdr/text.hpp"
