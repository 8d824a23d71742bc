// Copyright 2026 The qinstr Authors
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

// Command-line front end. RunCli is the whole program minus process setup so
// tests can drive it in-process.

#ifndef QINSTR_TOOLS_CLI_H_
#define QINSTR_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qinstr::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInvariant = 2,
  kExitParse = 3,
};

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Lowercase hex SHA-256 of a byte string.
std::string Sha256Hex(const std::string& bytes);

}  // namespace qinstr::cli

#endif  // QINSTR_TOOLS_CLI_H_
