// Copyright 2026 The gensat Authors.
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

// Command-line front end. JSON goes to `out`, prose to `err`.
// Exit codes: 0 ok, 2 usage, 3 domain error, 4 certification mismatch.

#ifndef GENSAT_CLI_HPP_
#define GENSAT_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace gensat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitMismatch = 4;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gensat

#endif  // GENSAT_CLI_HPP_
