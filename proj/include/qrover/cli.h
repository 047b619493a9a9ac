// Copyright 2026 The qrover Authors
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

#ifndef QROVER_CLI_H_
#define QROVER_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qrover {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNonRobust = 2;

/// Runs one command. `args` excludes the program name. Exit codes: 0 on
/// success, 2 when a non-robust item or adversarial input was found, 1 on
/// any usage, input or solver error (reported on `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrover

#endif  // QROVER_CLI_H_
