//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>
#include <string>
#include <vector>

#include "commoncert/cli.h"

int main(int argc, char **argv) {
  return commoncert::run_cli(std::vector<std::string>(argv, argv + argc),
                             std::cout, std::cerr);
}
