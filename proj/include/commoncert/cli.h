//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef COMMONCERT_CLI_H_
#define COMMONCERT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace commoncert {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitHypothesis = 2,
  kExitConsistency = 3,
};

// Runs the command line `args` (args[0] is the program name). Results go to
// `out` unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace commoncert

#endif // COMMONCERT_CLI_H_
