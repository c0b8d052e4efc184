// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <doctest.h>

#include <functional>
#include <string>

#include "peircelex/error.hpp"

namespace testutil {

inline std::string lexicon(const std::string& file) { return std::string(PEIRCELEX_TEST_LEXICONS) + "/" + file; }

/// Kind of the peircelex::Error thrown by f.
inline peircelex::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const peircelex::Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return peircelex::ErrorKind::Unsupported;
}

}  // namespace testutil
