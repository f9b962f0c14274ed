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

#ifndef VOCABRAND_CLI_H_
#define VOCABRAND_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace vocabrand {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputationError = 1;
inline constexpr int kExitUsageError = 2;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`. Returns 0 on success, 2 on usage or input errors,
// 1 on computation errors (cap exceeded, failed reproduction).
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace vocabrand

#endif  // VOCABRAND_CLI_H_
