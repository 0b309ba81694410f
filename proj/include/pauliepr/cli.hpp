// Copyright 2026 The pauliepr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAULIEPR_CLI_HPP
#define PAULIEPR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pauliepr::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

/// Runs one command line. args[0] is the program name. Returns the process exit code:
/// 0 success, 1 a verification check failed, 2 any error (bad input, I/O).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace pauliepr::cli

#endif
