// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

// Prints one PASS/FAIL line per acceptance criterion.

#include <iostream>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance_test LEXICON_DIR\n";
    return 1;
  }
  const auto results = peircelex::acceptance::run(argv[1]);
  std::cout << peircelex::acceptance::report(results);
  return peircelex::acceptance::all_passed(results) ? 0 : 1;
}
