// Copyright 2026 The Junta LCC Authors.
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

#ifndef JUNTA_LCC_ACCEPTANCE_H_
#define JUNTA_LCC_ACCEPTANCE_H_

#include <functional>
#include <string>
#include <vector>

namespace junta_lcc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;

  // "[PASS] 3 name: detail (1.23 s)"
  std::string Line() const;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

// The end-to-end acceptance criteria, each with its thresholds pinned.
const std::vector<Criterion>& AcceptanceCriteria();

// Runs every criterion (or only `id` when positive), printing one line per
// criterion through `sink` as it completes.
std::vector<CriterionResult> RunAcceptance(
    int id, const std::function<void(const CriterionResult&)>& sink);

}  // namespace junta_lcc

#endif  // JUNTA_LCC_ACCEPTANCE_H_
