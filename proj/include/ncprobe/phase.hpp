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

// Closed-form optical observables after N loops.
//
// With c = (1 + theta omega / 4)(l1^2 + l2^2) the loop multiplies photon block
// n by exp(-i N c n^2), so for a coherent input |alpha>
//
//   <a>_N = alpha exp(-i N c - N_p (1 - exp(-2 i N c))).
//
// Writing <a>_N = <a>_QM,N exp(-i Theta(N)) with the undeformed reference at
// the same N isolates the deformation phase; g = N l^2 theta omega / 2.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "ncprobe/units.hpp"

namespace ncprobe {

/// Undeformed mean field alpha exp(-i N s - N_p (1 - exp(-2 i N s))), s = l1^2 + l2^2.
/// Requires n_p == |alpha|^2.
std::complex<double> mean_field_qm(std::complex<double> alpha, double lambda1, double lambda2, double n_p,
                                   std::int64_t cycles = 1);

/// Deformed mean field for an isotropic pulse (l1 = l2 = lambda) after `cycles` loops.
std::complex<double> mean_field_deformed(std::complex<double> alpha, double lambda, const DeformationParams &def,
                                         std::int64_t cycles, double n_p);

/// g = N lambda^2 theta omega / 2.
double deformation_angle(std::int64_t cycles, double lambda, const DeformationParams &def);

/// Theta(N) = g + i N_p exp(-4 i N lambda^2) (exp(-2 i g) - 1).
std::complex<double> theta_phase(std::int64_t cycles, double lambda, const DeformationParams &def, double n_p);

struct ThetaMagnitude {
    double value = 0.0;
    double g = 0.0;
    /// Set when g lies outside [0, pi], where the signal stops being monotone.
    std::optional<std::string> warning;
};

/// |Theta(N)| in the summed-magnitude form g + 2 N_p sin g.
ThetaMagnitude theta_magnitude(std::int64_t cycles, double lambda, const DeformationParams &def, double n_p);

/// gamma + 2 N_p sin gamma.
double signal_from_gamma(double gamma, double n_p);

/// gamma = 8 theta omega N hbar F^2 / (m w_m lambda_L^2); with only the
/// coupling-rate cavity description, N lambda^2 theta omega / 2.
double gamma_from_experiment(const DeformationParams &def, const MechanicalParams &mech, const CavityParams &cav,
                             std::int64_t cycles);

struct PhaseSignal {
    std::complex<double> theta_complex;
    double theta_magnitude_paper = 0.0;
    /// |Theta(N)| taken literally as a complex modulus; agrees with the
    /// summed form to first order in g.
    double theta_modulus = 0.0;
    double gamma = 0.0;
    std::complex<double> mean_field_qm;
    std::complex<double> mean_field_deformed;
    std::optional<std::string> warning;
};

/// Every observable for a validated configuration. Needs an isotropic pulse.
PhaseSignal phase_signal(const Configuration &cfg);

}  // namespace ncprobe
