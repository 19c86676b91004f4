/*
   Copyright 2026 The intpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef INTPOLY_TOOLS_CLI_HPP
#define INTPOLY_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace intpoly::cli {

/// Runs one CLI invocation.  Exit codes: 0 success / verified,
/// 1 mathematical negative (non-member, non-Polya, not WPC, failed
/// verification -- with a witness in the output), 2 usage or budget errors.
/// Output is a pure function of the arguments and input files.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace intpoly::cli

#endif  // INTPOLY_TOOLS_CLI_HPP
