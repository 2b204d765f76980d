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

// The `ncprobe` command-line tool.
//
// Exit codes:
//   0  success
//   1  unexpected internal error
//   2  usage error (unknown flag, missing argument)
//   3  configuration error (schema violation, invalid parameters, unreadable file,
//      oracle infeasible for the requested photon number)
//   4  tolerance failure (a verification exceeded its threshold, loop did not close)
//   5  truncation failure (Fock cutoff too small for the requested displacement)

#pragma once

#include <iosfwd>

namespace ncprobe::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kConfig = 3,
    kTolerance = 4,
    kTruncation = 5,
};

/// Tolerance on |extracted - predicted| loop phase in verify-loop.
inline constexpr double kLoopPhaseTolerance = 1e-8;
/// Tolerance on interior commutator residuals.
inline constexpr double kCommutatorTolerance = 1e-12;
/// Tolerance on the relative photon-sum / closed-form difference.
inline constexpr double kOracleTolerance = 1e-9;

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace ncprobe::cli
