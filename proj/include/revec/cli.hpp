// Copyright 2026 the revec authors
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

namespace revec::cli {

/// Exit codes: 0 pass, 1 semantic failure, 2 usage or configuration error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitSemanticFail = 1;
inline constexpr int kExitConfigError = 2;

/// Runs the command line. `args` excludes the program name. Reports go to
/// `out` (or the --out path), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace revec::cli
