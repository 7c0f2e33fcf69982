/*
   Copyright 2026 The progsum authors

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

#ifndef PROGSUM_CLI_HPP
#define PROGSUM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace progsum {

/**
 * Full command-line front end (subcommands bernoulli, euler, powersum,
 * lemma-check, certify, solve).  args excludes the program name.
 * Returns the process exit code: 0 for success including mathematical
 * verdicts, 2 for usage/parameter errors.
 */
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace progsum

#endif
