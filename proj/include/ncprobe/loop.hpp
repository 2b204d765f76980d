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

// Brute-force loop operator and photon-number-sum oracle.
//
// For a fixed photon number n the four-pulse loop acting on the oscillator is
//
//   xi(n) = exp(i n G_p) exp(-i n G_x) exp(-i n G_p) exp(i n G_x),
//   G_x = l1 X + l2 Y,   G_p = l1 PX + l2 PY,
//
// built here from the deformed quadratures by matrix exponentiation, with no
// use of the commutator algebra. Because [G_x, G_p] is a c-number the loop
// must collapse to the scalar phase -(1 + theta omega / 4)(l1^2 + l2^2) n^2;
// extract_loop_phase measures how close the numerical result comes.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>

#include "ncprobe/fock.hpp"
#include "ncprobe/units.hpp"

namespace ncprobe {

/// Default truncation guard: a displaced vacuum may put at most this much
/// amplitude outside the interior subspace.
inline constexpr double kLeakageTolerance = 1e-8;
/// extract_loop_phase rejects loops further than this from a scalar.
inline constexpr double kLoopClosureTolerance = 1e-6;
/// Largest photon number evaluated by matrix exponentiation in the mean-field oracle.
inline constexpr std::size_t kBruteForcePhotonLimit = 8;
/// Poisson mass allowed beyond the photon cutoff.
inline constexpr double kPoissonTailTolerance = 1e-12;
/// The photon sum refuses cutoffs larger than this.
inline constexpr std::size_t kMaxPhotonCutoff = 5000;

/// Fock spec used for loop verification: interior = lower half of each mode.
FockSpec loop_fock_spec(std::size_t dim_per_mode);

struct LoopResult {
    std::size_t photon_n = 0;
    double extracted_phase = 0.0;    // principal value in (-pi, pi]
    double identity_residual = 0.0;  // max interior |U - exp(i phase) I|
    double leakage = 0.0;
    double diagonal_phase_spread = 0.0;
};

/// G_x = l1 X + l2 Y.
OperatorMatrix position_generator(const DeformedQuadratures &q, double lambda1, double lambda2);
/// G_p = l1 PX + l2 PY.
OperatorMatrix momentum_generator(const DeformedQuadratures &q, double lambda1, double lambda2);

/// Spectral cache for the two loop generators of one (deformation, lambda)
/// configuration; every photon number and cycle count reuses it.
///
/// Photon block n is evaluated at coupling n * coupling_scale. Spectra may be
/// shared between evaluators: xi for lambda1 = lambda2 = l is the loop of the
/// generators X + Y and PX + PY at coupling n * l.
class LoopEvaluator {
  public:
    LoopEvaluator(const FockSpec &spec, const DeformationParams &def, double lambda1, double lambda2);
    LoopEvaluator(std::shared_ptr<const HermitianSpectrum> position,
                  std::shared_ptr<const HermitianSpectrum> momentum, double coupling_scale = 1.0);

    const FockSpec &spec() const { return spec_; }
    double coupling_scale() const { return scale_; }

    /// One loop xi(n) as a full matrix.
    OperatorMatrix unitary(std::size_t n) const;
    /// xi(n)^cycles.
    OperatorMatrix unitary(std::size_t n, std::int64_t cycles) const;
    /// Interior rows and columns of xi(n), ordered as spec().interior_indices().
    ComplexMatrix interior_block(std::size_t n) const;
    /// xi(n) |state>.
    ComplexVector apply(std::size_t n, const ComplexVector &state) const;

    /// Largest norm outside the interior seen while driving the vacuum
    /// through the four displacements of xi(n).
    double leakage(std::size_t n) const;
    /// Estimated per-mode dimension that would bring leakage(n) under tolerance.
    std::size_t required_dim(std::size_t n) const;

    /// Phase, closure residual and leakage of xi(n) from its interior block.
    /// Throws TruncationError or LoopNotClosedError.
    LoopResult evaluate(std::size_t n) const;

  private:
    ComplexMatrix chain(std::size_t n, ComplexMatrix block) const;
    std::array<ComplexVector, 4> vacuum_stages(std::size_t n) const;

    std::shared_ptr<const HermitianSpectrum> position_;
    std::shared_ptr<const HermitianSpectrum> momentum_;
    FockSpec spec_;
    double scale_;
    ComplexMatrix overlap_;  // V_p^dagger V_x
};

/// One loop xi(n) for the pulse's lambdas. Throws TruncationError when the
/// displaced vacuum leaks out of the interior, naming the dimension needed.
OperatorMatrix loop_unitary(std::size_t n, const PulseSequence &pulse, const DeformationParams &def,
                            const FockSpec &spec);

/// Phase of <0,0|U|0,0> plus closure diagnostics over the interior.
/// Throws LoopNotClosedError when the residual exceeds kLoopClosureTolerance.
LoopResult extract_loop_phase(const OperatorMatrix &u, std::size_t photon_n = 0);

/// -N (1 + theta omega / 4)(l1^2 + l2^2) n^2.
double predicted_loop_phase(std::size_t n, const PulseSequence &pulse, const DeformationParams &def);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double phase);

enum class MeanFieldMethod { closed_form, photon_sum, photon_sum_brute_force };

struct MeanFieldResult {
    std::complex<double> value;
    MeanFieldMethod method = MeanFieldMethod::photon_sum;
    std::size_t cutoff_used = 0;
    double tail_mass = 0.0;
};

const char *to_string(MeanFieldMethod m);

/// Poisson probability P(X > cutoff) for mean n_p.
double poisson_tail(double n_p, std::size_t cutoff);

/// Smallest cutoff >= start with poisson_tail <= kPoissonTailTolerance.
/// Throws OracleInfeasibleError beyond kMaxPhotonCutoff.
std::size_t photon_cutoff_for(double n_p, std::size_t start = 0);

/// Phase acquired by the photon-number block n after all cycles.
using BlockPhase = std::function<double(std::size_t)>;

/// <a> = alpha sum_m P_m exp(i (phi(m+1) - phi(m))), with phi the N-cycle
/// block phase from predicted_loop_phase. cutoff 0 picks one automatically;
/// a too-small cutoff is raised until the tail is negligible.
MeanFieldResult mean_field_photon_sum(const PulseSequence &pulse, const DeformationParams &def,
                                      std::size_t photon_cutoff = 0);
MeanFieldResult mean_field_photon_sum(const PulseSequence &pulse, std::size_t photon_cutoff,
                                      const BlockPhase &block_phase);

/// Fully numerical mean field: the oscillator starts in the two-mode vacuum,
/// each photon block is evolved by xi(n)^N from matrix exponentials and
/// <a> = alpha sum_m P_m <v_m | v_{m+1}>. Needs the cutoff + 1 <= kBruteForcePhotonLimit.
MeanFieldResult mean_field_brute_force(const PulseSequence &pulse, const DeformationParams &def,
                                       const FockSpec &spec);

}  // namespace ncprobe
