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

#include "ncprobe/fock.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ncprobe/errors.hpp"

namespace ncprobe {

namespace {

constexpr double kHermitianRelTol = 1e-12;
const std::complex<double> kI{0.0, 1.0};

void require_same_spec(const OperatorMatrix &a, const OperatorMatrix &b) {
    if (!(a.spec() == b.spec())) {
        throw DimensionError("operators live on different Fock specs");
    }
}

ComplexMatrix single_mode_annihilation(std::size_t d) {
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    for (std::size_t n = 1; n < d; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FockSpec

FockSpec::FockSpec(std::size_t dim_per_mode, std::size_t modes, std::size_t interior_margin)
    : dim_(dim_per_mode), modes_(modes), margin_(interior_margin), total_(0) {
    if (modes != 1 && modes != 2) throw DomainError("FockSpec: modes must be 1 or 2");
    if (dim_per_mode < 2) throw DomainError("FockSpec: dim_per_mode must be >= 2");
    if (interior_margin + 2 > dim_per_mode) throw DomainError("FockSpec: interior margin must be <= D - 2");
    total_ = modes == 1 ? dim_ : dim_ * dim_;
}

std::size_t FockSpec::occupation(std::size_t index, std::size_t mode) const {
    if (modes_ == 1) return index;
    return mode == 0 ? index / dim_ : index % dim_;
}

bool FockSpec::is_interior(std::size_t index) const {
    const std::size_t limit = dim_ - margin_;
    for (std::size_t m = 0; m < modes_; ++m) {
        if (occupation(index, m) >= limit) return false;
    }
    return true;
}

std::vector<Eigen::Index> FockSpec::interior_indices() const {
    std::vector<Eigen::Index> out;
    for (std::size_t i = 0; i < total_; ++i) {
        if (is_interior(i)) out.push_back(static_cast<Eigen::Index>(i));
    }
    return out;
}

std::size_t FockSpec::basis_index(std::size_t n0, std::size_t n1) const {
    if (n0 >= dim_ || n1 >= dim_ || (modes_ == 1 && n1 != 0)) {
        throw DomainError("basis_index: occupation out of range");
    }
    return modes_ == 1 ? n0 : n0 * dim_ + n1;
}

// ---------------------------------------------------------------------------
// OperatorMatrix

OperatorMatrix::OperatorMatrix(ComplexMatrix data, FockSpec spec, bool hermitian_hint)
    : data_(std::move(data)), spec_(spec), hermitian_(hermitian_hint) {
    const auto n = static_cast<Eigen::Index>(spec_.total_dim());
    if (data_.rows() != n || data_.cols() != n) {
        throw DimensionError("OperatorMatrix: matrix dimension does not match the Fock spec");
    }
    if (hermitian_) {
        const double scale = data_.cwiseAbs().maxCoeff();
        if (hermiticity_defect() > kHermitianRelTol * scale) {
            throw DomainError("OperatorMatrix: hermitian hint set on a non-Hermitian matrix");
        }
    }
}

OperatorMatrix OperatorMatrix::identity(const FockSpec &spec) {
    const auto n = static_cast<Eigen::Index>(spec.total_dim());
    return OperatorMatrix(ComplexMatrix::Identity(n, n), spec, true);
}

OperatorMatrix OperatorMatrix::zero(const FockSpec &spec) {
    const auto n = static_cast<Eigen::Index>(spec.total_dim());
    return OperatorMatrix(ComplexMatrix::Zero(n, n), spec, true);
}

OperatorMatrix OperatorMatrix::adjoint() const { return OperatorMatrix(data_.adjoint(), spec_, hermitian_); }

double OperatorMatrix::hermiticity_defect() const {
    if (data_.size() == 0) return 0.0;
    return (data_ - data_.adjoint()).cwiseAbs().maxCoeff();
}

double OperatorMatrix::unitarity_defect() const {
    const ComplexMatrix g = data_.adjoint() * data_;
    return (g - ComplexMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

double OperatorMatrix::interior_deviation_from_scalar(std::complex<double> value) const {
    const auto idx = spec_.interior_indices();
    double worst = 0.0;
    for (Eigen::Index j : idx) {
        for (Eigen::Index i : idx) {
            const std::complex<double> target = (i == j) ? value : 0.0;
            worst = std::max(worst, std::abs(data_(i, j) - target));
        }
    }
    return worst;
}

OperatorMatrix operator+(const OperatorMatrix &a, const OperatorMatrix &b) {
    require_same_spec(a, b);
    return OperatorMatrix(a.data_ + b.data_, a.spec_, a.hermitian_ && b.hermitian_);
}

OperatorMatrix operator-(const OperatorMatrix &a, const OperatorMatrix &b) {
    require_same_spec(a, b);
    return OperatorMatrix(a.data_ - b.data_, a.spec_, a.hermitian_ && b.hermitian_);
}

OperatorMatrix operator*(const OperatorMatrix &a, const OperatorMatrix &b) {
    require_same_spec(a, b);
    return OperatorMatrix(a.data_ * b.data_, a.spec_, false);
}

OperatorMatrix operator*(double s, const OperatorMatrix &a) {
    return OperatorMatrix(s * a.data_, a.spec_, a.hermitian_);
}

OperatorMatrix operator*(std::complex<double> s, const OperatorMatrix &a) {
    return OperatorMatrix(s * a.data_, a.spec_, a.hermitian_ && s.imag() == 0.0);
}

// ---------------------------------------------------------------------------
// Constructions

OperatorMatrix ladder(const FockSpec &spec, std::size_t mode) {
    if (mode >= spec.modes()) throw DomainError("ladder: mode index out of range");
    const ComplexMatrix a = single_mode_annihilation(spec.dim_per_mode());
    if (spec.modes() == 1) return OperatorMatrix(a, spec);
    const auto d = static_cast<Eigen::Index>(spec.dim_per_mode());
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    return OperatorMatrix(mode == 0 ? kron(a, id) : kron(id, a), spec);
}

CanonicalQuadratures canonical_quadratures(const FockSpec &spec) {
    if (spec.modes() != 2) throw DomainError("canonical_quadratures: two modes required");
    const double r = 1.0 / std::sqrt(2.0);
    auto quadratures = [&](std::size_t mode) {
        const ComplexMatrix a = ladder(spec, mode).data();
        const ComplexMatrix ad = a.adjoint();
        OperatorMatrix x(r * (a + ad), spec, true);
        OperatorMatrix p(r * kI * (ad - a), spec, true);
        return std::pair{std::move(x), std::move(p)};
    };
    auto [x1, p1] = quadratures(0);
    auto [x2, p2] = quadratures(1);
    return {std::move(x1), std::move(x2), std::move(p1), std::move(p2)};
}

DeformedQuadratures deformed_quadratures(const FockSpec &spec, const DeformationParams &def) {
    const auto c = canonical_quadratures(spec);
    const double ht = def.theta / 2.0;
    const double ho = def.omega / 2.0;
    return {c.x1 - ht * c.p2, c.x2 + ht * c.p1, c.p1 + ho * c.x2, c.p2 - ho * c.x1, def};
}

OperatorMatrix commutator(const OperatorMatrix &a, const OperatorMatrix &b) {
    require_same_spec(a, b);
    return OperatorMatrix(a.data() * b.data() - b.data() * a.data(), a.spec());
}

// ---------------------------------------------------------------------------
// Exponentials

HermitianSpectrum::HermitianSpectrum(const OperatorMatrix &generator) : spec_(generator.spec()) {
    if (!generator.hermitian_hint()) {
        throw DomainError("exponential requires a generator flagged Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(generator.data());
    if (solver.info() != Eigen::Success) {
        throw DomainError("eigendecomposition of the generator failed");
    }
    values_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
}

ComplexVector HermitianSpectrum::phases(double scale) const {
    ComplexVector out(values_.size());
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
        out(k) = std::polar(1.0, scale * values_(k));
    }
    return out;
}

OperatorMatrix HermitianSpectrum::exponential(double scale) const {
    ComplexMatrix u = vectors_ * phases(scale).asDiagonal() * vectors_.adjoint();
    return OperatorMatrix(std::move(u), spec_);
}

ComplexMatrix HermitianSpectrum::apply(double scale, const ComplexMatrix &block) const {
    return vectors_ * (phases(scale).asDiagonal() * (vectors_.adjoint() * block));
}

OperatorMatrix unitary_from_generator(const OperatorMatrix &generator, double scale) {
    if (scale == 0.0) return OperatorMatrix::identity(generator.spec());
    return HermitianSpectrum(generator).exponential(scale);
}

// ---------------------------------------------------------------------------
// Commutator audit

double CommutatorResiduals::max() const { return std::max({xy, pxpy, xpx, ypy, xpy, ypx}); }

std::array<std::pair<const char *, double>, 6> CommutatorResiduals::named() const {
    return {{{"XY", xy}, {"PXPY", pxpy}, {"XPX", xpx}, {"YPY", ypy}, {"XPY", xpy}, {"YPX", ypx}}};
}

CommutatorResiduals commutator_residuals(const DeformedQuadratures &q) {
    const double theta = q.def.theta;
    const double omega = q.def.omega;
    const std::complex<double> diag = kI * (1.0 + theta * omega / 4.0);
    CommutatorResiduals r;
    r.xy = commutator(q.x, q.y).interior_deviation_from_scalar(kI * theta);
    r.pxpy = commutator(q.px, q.py).interior_deviation_from_scalar(kI * omega);
    r.xpx = commutator(q.x, q.px).interior_deviation_from_scalar(diag);
    r.ypy = commutator(q.y, q.py).interior_deviation_from_scalar(diag);
    r.xpy = commutator(q.x, q.py).interior_deviation_from_scalar(0.0);
    r.ypx = commutator(q.y, q.px).interior_deviation_from_scalar(0.0);
    return r;
}

CommutatorResiduals commutator_residuals(const FockSpec &spec, const DeformationParams &def) {
    return commutator_residuals(deformed_quadratures(spec, def));
}

// ---------------------------------------------------------------------------
// Text dump

void write_operator_text(std::ostream &out, const OperatorMatrix &op) {
    const auto &s = op.spec();
    out << "ncprobe-operator " << s.dim_per_mode() << ' ' << s.modes() << ' ' << s.interior_margin() << ' '
        << (op.hermitian_hint() ? 1 : 0) << '\n';
    out << std::setprecision(17);
    for (Eigen::Index i = 0; i < op.dim(); ++i) {
        for (Eigen::Index j = 0; j < op.dim(); ++j) {
            if (j) out << ' ';
            out << op(i, j).real() << ' ' << op(i, j).imag();
        }
        out << '\n';
    }
}

OperatorMatrix read_operator_text(std::istream &in) {
    std::string tag;
    std::size_t dim = 0, modes = 0, margin = 0;
    int hermitian = 0;
    if (!(in >> tag >> dim >> modes >> margin >> hermitian) || tag != "ncprobe-operator") {
        throw DimensionError("read_operator_text: bad header");
    }
    FockSpec spec(dim, modes, margin);
    const auto n = static_cast<Eigen::Index>(spec.total_dim());
    ComplexMatrix data(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            double re = 0.0, im = 0.0;
            if (!(in >> re >> im)) throw DimensionError("read_operator_text: truncated data");
            data(i, j) = {re, im};
        }
    }
    return OperatorMatrix(std::move(data), spec, hermitian != 0);
}

}  // namespace ncprobe
