// Copyright 2026 The projevo developers
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

#include <iosfwd>
#include <string>
#include <vector>

namespace projevo {

/// Command-line front end. Subcommands: synth, verify, estimate, examples.
///
/// Exit codes: 0 success, 1 verification failure or internal error,
/// 2 commutation failure, 3 schema error or unknown name, 4 dense cap
/// exceeded. Diagnostics go to err; nothing is printed to out on a nonzero
/// exit.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace projevo
