// Copyright 2026 The ncprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ncprobe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Result overflowed to a non-finite value.
class OverflowError : public Error {
  public:
    using Error::Error;
};

/// Inconsistent or incomplete parameter records.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Operator shapes or Fock specs do not match.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A displaced state leaks into the top of the truncated Fock basis.
class TruncationError : public Error {
  public:
    TruncationError(const std::string &what, std::size_t required_dim)
        : Error(what), required_dim_(required_dim) {}

    /// Smallest per-mode dimension expected to pass the leakage check.
    std::size_t required_dim() const noexcept { return required_dim_; }

  private:
    std::size_t required_dim_;
};

/// The four-pulse loop did not reduce to a scalar phase.
class LoopNotClosedError : public Error {
  public:
    using Error::Error;
};

/// Photon-number sum would need an impractically large cutoff.
class OracleInfeasibleError : public Error {
  public:
    using Error::Error;
};

/// No deformation strength reaches the requested SNR in the monotone region.
class SensitivityUnreachableError : public Error {
  public:
    SensitivityUnreachableError(const std::string &what, double boundary_signal)
        : Error(what), boundary_signal_(boundary_signal) {}

    /// Signal |Theta| attained at the bracket boundary gamma = pi/2.
    double boundary_signal() const noexcept { return boundary_signal_; }

  private:
    double boundary_signal_;
};

}  // namespace ncprobe
