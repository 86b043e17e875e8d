// SPDX-FileCopyrightText: 2026 f2c authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace f2c {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid specs, configs, or arguments. Raised before any work starts.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Tensor shape disagreement; message carries the offending shapes.
class ShapeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Diverged or otherwise failed training run (non-finite loss/params).
class TrainingError : public Error {
 public:
  using Error::Error;
};

/// File system failures; message names the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed checkpoint files. Each failure mode is a distinct subclass.
class CheckpointError : public IoError {
 public:
  using IoError::IoError;
};

class CheckpointMagicError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

class CheckpointVersionError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

class CheckpointTruncatedError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

class CheckpointSpecError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

}  // namespace f2c
