// Copyright 2026 The vocabrand Authors
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

// The worked example end to end: the two nine-toss sequences, their runs and
// binomial verdicts, the teads/hails relabeling (kept positions {1,4,9}) and
// the schmeads/schmails relabeling (kept positions {2,3,5,9}), each checked
// against pinned exact values at alpha = 1/20.

#ifndef VOCABRAND_REPRODUCE_H_
#define VOCABRAND_REPRODUCE_H_

#include <string>
#include <vector>

#include "vocabrand/report.h"

namespace vocabrand {

struct Reproduction {
  Report report;
  // One line per value that differs from its pinned expectation.
  std::vector<std::string> deviations;

  bool ok() const { return deviations.empty(); }
};

Reproduction ReproduceWorkedExample();

}  // namespace vocabrand

#endif  // VOCABRAND_REPRODUCE_H_
