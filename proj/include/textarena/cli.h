// Copyright 2026 The TextArena Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEXTARENA_CLI_H_
#define TEXTARENA_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace textarena {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPerformanceAssertion = 2;
inline constexpr int kExitUsage = 64;

// Environment variable overriding the default --min-time, in milliseconds.
inline constexpr const char* kMinTimeEnv = "TEXTARENA_MIN_TIME_MS";

// Runs the tool on `args` (without the program name). Data goes to `out`,
// diagnostics to `err`. Returns kExitOk, kExitPerformanceAssertion or
// kExitUsage.
//
//   textarena bench --suite build|concat|all [--format csv|md|json]
//                   [--min-time SECONDS] [--reps N] [--warmup N] [--assert]
//   textarena mem [--n N] [--prefix TEXT] [--mode paper|native] [--format F]
//   textarena demo extract|plus|matrix [--delim D] [--after] [--format F] ARGS...
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace textarena

#endif  // TEXTARENA_CLI_H_
