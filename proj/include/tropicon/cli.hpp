// Copyright 2026 The Tropicon Authors
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

#ifndef TROPICON_CLI_HPP_
#define TROPICON_CLI_HPP_

#include <ostream>

namespace tropicon {

// Entry point for the `tropicon` command-line tool, callable in-process so
// tests can drive it directly. Results go to `out`, diagnostics to `err`.
//
// Commands: separate, member, project, support, verify, plot.
// Exit codes: 0 success (including "not a member" answers), 1 verification
// failure, 2 command-line/JSON/schema errors, 3 violated mathematical
// preconditions (e.g. separating a member point).
//
// The TROPICON_SEMIFIELD environment variable ("max-plus"/"min-plus")
// overrides an instance's default semifield; a conflicting explicit
// "semifield" field in the input is an error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropicon

#endif  // TROPICON_CLI_HPP_
