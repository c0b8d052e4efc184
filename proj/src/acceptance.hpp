// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace peircelex::acceptance {

struct Result {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs criteria 1 to 10 against the lexicons, model and interpretation
/// files in lexicon_dir. Failures inside a check count as a failed
/// criterion; the message ends up in detail.
std::vector<Result> run(const std::string& lexicon_dir);

bool all_passed(const std::vector<Result>& results);

/// One line per criterion: "PASS 3 name: detail".
std::string report(const std::vector<Result>& results);

}  // namespace peircelex::acceptance
