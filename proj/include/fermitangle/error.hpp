// Copyright 2026 The fermitangle Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fermitangle {

enum class ErrorCode {
  InvalidArgument,
  InvalidConfiguration,
  LinearlyDependentFactors,
  DimensionMismatch,
  NotUnitary,
  UnsupportedN,
  DoubleOccupancy,
  UnknownName,
  BadM,
  NonConvergence,
  DegeneracyResolutionFailure,
  UnsupportedDims,
  GridTooCoarse,
  Parse,
  NormDeviation,
  Io,
  InvariantViolation,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fermitangle
