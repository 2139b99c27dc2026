// Copyright 2026 The Authors.
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

#ifndef COVMAT_CLI_HPP_
#define COVMAT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace covmat::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kSizeLimit = 2,
  kPrecondition = 3,
  kVerificationMismatch = 4,
};

// Runs one command. `args` excludes the program name, e.g.
// {"rank", "doc.cm", "--set", "a,b"}. Results go to `out`, diagnostics to
// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covmat::cli

#endif  // COVMAT_CLI_HPP_
