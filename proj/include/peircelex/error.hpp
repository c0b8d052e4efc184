// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace peircelex {

/// Failure classes. Each maps to a stable machine-readable tag used by the
/// CLI (`error[<tag>]: ...`) and to a status code in the C API.
enum class ErrorKind {
  Syntax,
  Type,
  NoParse,
  MissingSymbol,
  ShapeMismatch,
  Io,
  InvalidArgument,
  Unsupported,
};

const char* error_tag(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace peircelex
