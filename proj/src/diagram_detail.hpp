// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "peircelex/diagram.hpp"

namespace peircelex::detail {

/// Key of a single generator; nested diagrams enter through canonical_key.
std::string generator_key(const Diagram& g);

}  // namespace peircelex::detail
