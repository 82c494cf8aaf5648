// Copyright 2026 The frobforms Authors.
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

// Command-line front end, callable in process for tests.

#ifndef FROBFORMS_CLI_HPP_
#define FROBFORMS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace frobforms::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // BudgetExceeded and other computational failures
inline constexpr int kExitUsage = 2;    // bad flags or unparsable input

// `args` excludes the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobforms::cli

#endif  // FROBFORMS_CLI_HPP_
