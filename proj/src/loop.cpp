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

#include "ncprobe/loop.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <boost/math/special_functions/gamma.hpp>

#include "ncprobe/errors.hpp"

namespace ncprobe {

namespace {

double outside_interior_norm(const FockSpec &spec, const ComplexVector &v) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!spec.is_interior(static_cast<std::size_t>(i))) sum += std::norm(v(i));
    }
    return std::sqrt(sum);
}

// Smallest m with P(X >= m) <= tail for X ~ Poisson(mean).
std::size_t poisson_quantile(double mean, double tail) {
    std::size_t m = 1;
    while (mean > 0.0 && boost::math::gamma_p(static_cast<double>(m), mean) > tail) ++m;
    return m;
}

LoopResult summarize_block(const ComplexMatrix &block, std::size_t photon_n, double leakage) {
    LoopResult r;
    r.photon_n = photon_n;
    r.leakage = leakage;
    r.extracted_phase = std::arg(block(0, 0));
    const std::complex<double> scalar = std::polar(1.0, r.extracted_phase);
    for (Eigen::Index j = 0; j < block.cols(); ++j) {
        for (Eigen::Index i = 0; i < block.rows(); ++i) {
            const std::complex<double> target = (i == j) ? scalar : 0.0;
            r.identity_residual = std::max(r.identity_residual, std::abs(block(i, j) - target));
        }
        r.diagonal_phase_spread =
            std::max(r.diagonal_phase_spread, std::abs(std::arg(block(j, j) * std::conj(scalar))));
    }
    if (!(r.identity_residual <= kLoopClosureTolerance)) {
        throw LoopNotClosedError("loop does not close to a scalar phase: interior residual " +
                                 std::to_string(r.identity_residual));
    }
    return r;
}

}  // namespace

FockSpec loop_fock_spec(std::size_t dim_per_mode) { return FockSpec(dim_per_mode, 2, dim_per_mode / 2); }

// ---------------------------------------------------------------------------
// LoopEvaluator

OperatorMatrix position_generator(const DeformedQuadratures &q, double lambda1, double lambda2) {
    return lambda1 * q.x + lambda2 * q.y;
}

OperatorMatrix momentum_generator(const DeformedQuadratures &q, double lambda1, double lambda2) {
    return lambda1 * q.px + lambda2 * q.py;
}

LoopEvaluator::LoopEvaluator(const FockSpec &spec, const DeformationParams &def, double lambda1,
                             double lambda2)
    : LoopEvaluator(std::make_shared<const HermitianSpectrum>(
                        position_generator(deformed_quadratures(spec, def), lambda1, lambda2)),
                    std::make_shared<const HermitianSpectrum>(
                        momentum_generator(deformed_quadratures(spec, def), lambda1, lambda2))) {}

LoopEvaluator::LoopEvaluator(std::shared_ptr<const HermitianSpectrum> position,
                             std::shared_ptr<const HermitianSpectrum> momentum, double coupling_scale)
    : position_(std::move(position)),
      momentum_(std::move(momentum)),
      spec_(position_->spec()),
      scale_(coupling_scale) {
    if (!(momentum_->spec() == spec_)) {
        throw DimensionError("loop generators live on different Fock specs");
    }
    overlap_ = momentum_->eigenvectors().adjoint() * position_->eigenvectors();
}

// xi(n) = Vp Dp(n) W Dx(-n) W^dag Dp(-n) W Dx(n) Vx^dag, with W = Vp^dag Vx and
// D(s) = diag(exp(i s w)). `block` enters already rotated by Vx^dag.
ComplexMatrix LoopEvaluator::chain(std::size_t n, ComplexMatrix block) const {
    const double s = scale_ * static_cast<double>(n);
    block = position_->phases(s).asDiagonal() * block;
    block = overlap_ * block;
    block = momentum_->phases(-s).asDiagonal() * block;
    block = overlap_.adjoint() * block;
    block = position_->phases(-s).asDiagonal() * block;
    block = overlap_ * block;
    block = momentum_->phases(s).asDiagonal() * block;
    return block;
}

OperatorMatrix LoopEvaluator::unitary(std::size_t n) const {
    ComplexMatrix rotated = chain(n, position_->eigenvectors().adjoint());
    return OperatorMatrix(momentum_->eigenvectors() * rotated, spec_);
}

OperatorMatrix LoopEvaluator::unitary(std::size_t n, std::int64_t cycles) const {
    if (cycles < 1) throw DomainError("cycles >= 1");
    ComplexMatrix base = unitary(n).data();
    const auto dim = base.rows();
    ComplexMatrix result = ComplexMatrix::Identity(dim, dim);
    for (auto k = static_cast<std::uint64_t>(cycles); k > 0; k >>= 1) {
        if (k & 1U) result = result * base;
        if (k > 1) base = base * base;
    }
    return OperatorMatrix(std::move(result), spec_);
}

ComplexMatrix LoopEvaluator::interior_block(std::size_t n) const {
    const auto idx = spec_.interior_indices();
    const ComplexMatrix &vx = position_->eigenvectors();
    const ComplexMatrix &vp = momentum_->eigenvectors();
    ComplexMatrix start = vx(idx, Eigen::all).adjoint();
    ComplexMatrix rotated = chain(n, std::move(start));
    return vp(idx, Eigen::all) * rotated;
}

ComplexVector LoopEvaluator::apply(std::size_t n, const ComplexVector &state) const {
    const double s = scale_ * static_cast<double>(n);
    ComplexVector v = position_->apply(s, state);
    v = momentum_->apply(-s, v);
    v = position_->apply(-s, v);
    return momentum_->apply(s, v);
}

std::array<ComplexVector, 4> LoopEvaluator::vacuum_stages(std::size_t n) const {
    const double s = scale_ * static_cast<double>(n);
    ComplexVector vacuum = ComplexVector::Zero(static_cast<Eigen::Index>(spec_.total_dim()));
    vacuum(0) = 1.0;
    std::array<ComplexVector, 4> stages;
    stages[0] = position_->apply(s, vacuum);
    stages[1] = momentum_->apply(-s, stages[0]);
    stages[2] = position_->apply(-s, stages[1]);
    stages[3] = momentum_->apply(s, stages[2]);
    return stages;
}

double LoopEvaluator::leakage(std::size_t n) const {
    if (n == 0) return 0.0;
    double worst = 0.0;
    for (const auto &v : vacuum_stages(n)) worst = std::max(worst, outside_interior_norm(spec_, v));
    return worst;
}

std::size_t LoopEvaluator::required_dim(std::size_t n) const {
    double mean = 0.0;
    for (const auto &v : vacuum_stages(n)) {
        for (std::size_t mode = 0; mode < spec_.modes(); ++mode) {
            double occ = 0.0;
            for (Eigen::Index i = 0; i < v.size(); ++i) {
                occ += std::norm(v(i)) * static_cast<double>(spec_.occupation(static_cast<std::size_t>(i), mode));
            }
            mean = std::max(mean, occ);
        }
    }
    const std::size_t needed = poisson_quantile(mean, kLeakageTolerance * kLeakageTolerance);
    return std::max(needed + spec_.interior_margin(), spec_.dim_per_mode() + 1);
}

LoopResult LoopEvaluator::evaluate(std::size_t n) const {
    const double leak = leakage(n);
    if (!(leak <= kLeakageTolerance)) {
        const auto d = required_dim(n);
        throw TruncationError(fmt::format("displacement at photon number {} leaks {:.3e} out of the interior; "
                                          "need dim_per_mode >= {}",
                                          n, leak, d),
                              d);
    }
    return summarize_block(interior_block(n), n, leak);
}

// ---------------------------------------------------------------------------

OperatorMatrix loop_unitary(std::size_t n, const PulseSequence &pulse, const DeformationParams &def,
                            const FockSpec &spec) {
    if (n == 0) return OperatorMatrix::identity(spec);
    LoopEvaluator loop(spec, def, pulse.lambda1, pulse.lambda2);
    const double leak = loop.leakage(n);
    if (!(leak <= kLeakageTolerance)) {
        const auto d = loop.required_dim(n);
        throw TruncationError("loop at photon number " + std::to_string(n) +
                                  " is truncation-contaminated; need dim_per_mode >= " + std::to_string(d),
                              d);
    }
    return loop.unitary(n);
}

LoopResult extract_loop_phase(const OperatorMatrix &u, std::size_t photon_n) {
    const auto idx = u.spec().interior_indices();
    const ComplexMatrix block = u.data()(idx, idx);
    return summarize_block(block, photon_n, 0.0);
}

double predicted_loop_phase(std::size_t n, const PulseSequence &pulse, const DeformationParams &def) {
    const double nn = static_cast<double>(n);
    return -static_cast<double>(pulse.cycles) * (1.0 + def.eps()) * pulse.lambda_squared_sum() * nn * nn;
}

double wrap_phase(double phase) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(phase, two_pi);  // [-pi, pi]
    if (r <= -std::numbers::pi) r += two_pi;
    return r;
}

// ---------------------------------------------------------------------------
// Mean field

const char *to_string(MeanFieldMethod m) {
    switch (m) {
        case MeanFieldMethod::closed_form:
            return "closed_form";
        case MeanFieldMethod::photon_sum:
            return "photon_sum";
        case MeanFieldMethod::photon_sum_brute_force:
            return "photon_sum_brute_force";
    }
    return "unknown";
}

double poisson_tail(double n_p, std::size_t cutoff) {
    if (n_p <= 0.0) return 0.0;
    return boost::math::gamma_p(static_cast<double>(cutoff) + 1.0, n_p);
}

std::size_t photon_cutoff_for(double n_p, std::size_t start) {
    if (!(n_p >= 0.0) || !std::isfinite(n_p)) throw DomainError("mean photon number must be finite and >= 0");
    std::size_t cutoff = std::max<std::size_t>(start, 1);
    if (cutoff > kMaxPhotonCutoff) {
        throw OracleInfeasibleError("photon cutoff " + std::to_string(cutoff) + " exceeds " +
                                    std::to_string(kMaxPhotonCutoff) + "; use the closed form");
    }
    // Jump close to the answer, then walk.
    const auto guess = static_cast<std::size_t>(n_p + 10.0 * std::sqrt(n_p));
    if (poisson_tail(n_p, cutoff) > kPoissonTailTolerance) {
        const std::size_t floor = cutoff;
        cutoff = std::max(cutoff, std::min(guess, kMaxPhotonCutoff));
        while (cutoff > floor && poisson_tail(n_p, cutoff - 1) <= kPoissonTailTolerance) --cutoff;
    }
    while (poisson_tail(n_p, cutoff) > kPoissonTailTolerance) {
        if (++cutoff > kMaxPhotonCutoff) {
            throw OracleInfeasibleError("mean photon number " + std::to_string(n_p) +
                                        " needs a photon cutoff above " + std::to_string(kMaxPhotonCutoff) +
                                        "; the photon-number sum is infeasible, use the closed form");
        }
    }
    return cutoff;
}

MeanFieldResult mean_field_photon_sum(const PulseSequence &pulse, std::size_t photon_cutoff,
                                      const BlockPhase &block_phase) {
    const double n_p = std::norm(pulse.alpha);
    const std::size_t cutoff = photon_cutoff_for(n_p, photon_cutoff);
    std::complex<double> sum = 0.0;
    double prev = block_phase(0);
    for (std::size_t m = 0; m <= cutoff; ++m) {
        const double next = block_phase(m + 1);
        double weight = 0.0;
        if (n_p > 0.0) {
            const double md = static_cast<double>(m);
            weight = std::exp(-n_p + md * std::log(n_p) - std::lgamma(md + 1.0));
        } else {
            weight = (m == 0) ? 1.0 : 0.0;
        }
        sum += weight * std::polar(1.0, next - prev);
        prev = next;
    }
    return {pulse.alpha * sum, MeanFieldMethod::photon_sum, cutoff, poisson_tail(n_p, cutoff)};
}

MeanFieldResult mean_field_photon_sum(const PulseSequence &pulse, const DeformationParams &def,
                                      std::size_t photon_cutoff) {
    return mean_field_photon_sum(pulse, photon_cutoff,
                                 [&](std::size_t n) { return predicted_loop_phase(n, pulse, def); });
}

MeanFieldResult mean_field_brute_force(const PulseSequence &pulse, const DeformationParams &def,
                                       const FockSpec &spec) {
    const double n_p = std::norm(pulse.alpha);
    const std::size_t cutoff = photon_cutoff_for(n_p);
    if (cutoff + 1 > kBruteForcePhotonLimit) {
        throw OracleInfeasibleError("brute-force mean field needs photon blocks up to " +
                                    std::to_string(cutoff + 1) + " (limit " +
                                    std::to_string(kBruteForcePhotonLimit) + ")");
    }
    if (pulse.cycles < 1) throw DomainError("cycles >= 1");
    LoopEvaluator loop(spec, def, pulse.lambda1, pulse.lambda2);
    const double leak = loop.leakage(cutoff + 1);
    if (!(leak <= kLeakageTolerance)) {
        const auto d = loop.required_dim(cutoff + 1);
        throw TruncationError("brute-force mean field leaks out of the interior; need dim_per_mode >= " +
                                  std::to_string(d),
                              d);
    }

    std::vector<ComplexVector> evolved;
    for (std::size_t n = 0; n <= cutoff + 1; ++n) {
        ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(spec.total_dim()));
        v(0) = 1.0;
        for (std::int64_t c = 0; c < pulse.cycles; ++c) v = loop.apply(n, v);
        evolved.push_back(std::move(v));
    }
    std::complex<double> sum = 0.0;
    for (std::size_t m = 0; m <= cutoff; ++m) {
        const double md = static_cast<double>(m);
        const double weight = n_p > 0.0 ? std::exp(-n_p + md * std::log(n_p) - std::lgamma(md + 1.0))
                                        : (m == 0 ? 1.0 : 0.0);
        sum += weight * evolved[m].dot(evolved[m + 1]);  // conjugates the first argument
    }
    return {pulse.alpha * sum, MeanFieldMethod::photon_sum_brute_force, cutoff, poisson_tail(n_p, cutoff)};
}

}  // namespace ncprobe
