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

// Dense operator algebra on truncated Fock spaces of one or two bosonic modes.
//
// Basis ordering for two modes is |n1, n2> -> n1 * D + n2 (mode 0 is the most
// significant digit). A basis state is "interior" when every occupation is
// below D - k, with k the interior margin; algebraic identities that truncation
// breaks at the top of the ladder are only claimed on the interior.

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "ncprobe/units.hpp"

namespace ncprobe {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

class FockSpec {
  public:
    FockSpec(std::size_t dim_per_mode, std::size_t modes, std::size_t interior_margin = 2);

    std::size_t dim_per_mode() const { return dim_; }
    std::size_t modes() const { return modes_; }
    std::size_t interior_margin() const { return margin_; }
    std::size_t total_dim() const { return total_; }

    /// Occupation of `mode` in basis state `index`.
    std::size_t occupation(std::size_t index, std::size_t mode) const;
    bool is_interior(std::size_t index) const;
    std::vector<Eigen::Index> interior_indices() const;
    std::size_t basis_index(std::size_t n0, std::size_t n1 = 0) const;

    FockSpec with_margin(std::size_t margin) const { return FockSpec(dim_, modes_, margin); }

    bool operator==(const FockSpec &) const = default;

  private:
    std::size_t dim_;
    std::size_t modes_;
    std::size_t margin_;
    std::size_t total_;
};

class OperatorMatrix {
  public:
    /// Throws DimensionError on a shape mismatch and DomainError when
    /// `hermitian_hint` is set on a matrix that is not Hermitian.
    OperatorMatrix(ComplexMatrix data, FockSpec spec, bool hermitian_hint = false);

    static OperatorMatrix identity(const FockSpec &spec);
    static OperatorMatrix zero(const FockSpec &spec);

    const ComplexMatrix &data() const { return data_; }
    const FockSpec &spec() const { return spec_; }
    bool hermitian_hint() const { return hermitian_; }
    Eigen::Index dim() const { return data_.rows(); }

    std::complex<double> operator()(Eigen::Index row, Eigen::Index col) const { return data_(row, col); }

    OperatorMatrix adjoint() const;
    /// max |M - M^dagger|
    double hermiticity_defect() const;
    /// max |M^dagger M - I|
    double unitarity_defect() const;
    /// max over interior (i, j) of |M_ij - value * delta_ij|
    double interior_deviation_from_scalar(std::complex<double> value) const;

    friend OperatorMatrix operator+(const OperatorMatrix &a, const OperatorMatrix &b);
    friend OperatorMatrix operator-(const OperatorMatrix &a, const OperatorMatrix &b);
    friend OperatorMatrix operator*(const OperatorMatrix &a, const OperatorMatrix &b);
    friend OperatorMatrix operator*(double s, const OperatorMatrix &a);
    friend OperatorMatrix operator*(std::complex<double> s, const OperatorMatrix &a);

  private:
    ComplexMatrix data_;
    FockSpec spec_;
    bool hermitian_;
};

struct CanonicalQuadratures {
    OperatorMatrix x1, x2, p1, p2;
};

/// Position and momentum quadratures of the noncommutative oscillator,
/// realised by a linear Bopp shift of two canonical modes:
///
///   X  = x1 - (theta/2) p2      PX = p1 + (omega/2) x2
///   Y  = x2 + (theta/2) p1      PY = p2 - (omega/2) x1
///
/// which gives [X, Y] = i theta, [PX, PY] = i omega and
/// [X, PX] = [Y, PY] = i (1 + theta omega / 4).
struct DeformedQuadratures {
    OperatorMatrix x, y, px, py;
    DeformationParams def;
};

/// Annihilation operator of `mode`.
OperatorMatrix ladder(const FockSpec &spec, std::size_t mode);

/// x = (a + a^dagger) / sqrt 2, p = i (a^dagger - a) / sqrt 2 for both modes.
CanonicalQuadratures canonical_quadratures(const FockSpec &spec);

DeformedQuadratures deformed_quadratures(const FockSpec &spec, const DeformationParams &def);

/// AB - BA.
OperatorMatrix commutator(const OperatorMatrix &a, const OperatorMatrix &b);

/// Eigendecomposition H = V diag(w) V^dagger of a Hermitian generator; evaluates
/// exp(i s H) for any real s without refactoring.
class HermitianSpectrum {
  public:
    explicit HermitianSpectrum(const OperatorMatrix &generator);

    /// exp(i * scale * H)
    OperatorMatrix exponential(double scale) const;
    /// exp(i * scale * H) * block
    ComplexMatrix apply(double scale, const ComplexMatrix &block) const;
    /// diag(exp(i * scale * w))
    ComplexVector phases(double scale) const;

    const Eigen::VectorXd &eigenvalues() const { return values_; }
    const ComplexMatrix &eigenvectors() const { return vectors_; }
    const FockSpec &spec() const { return spec_; }

  private:
    FockSpec spec_;
    Eigen::VectorXd values_;
    ComplexMatrix vectors_;
};

/// exp(i * scale * H). H must carry the Hermitian hint; a non-Hermitian
/// generator is rejected with DomainError.
OperatorMatrix unitary_from_generator(const OperatorMatrix &generator, double scale);

/// Largest interior deviation of each commutator from its deformed value.
struct CommutatorResiduals {
    double xy = 0.0;
    double pxpy = 0.0;
    double xpx = 0.0;
    double ypy = 0.0;
    double xpy = 0.0;
    double ypx = 0.0;

    double max() const;
    std::array<std::pair<const char *, double>, 6> named() const;
};

CommutatorResiduals commutator_residuals(const FockSpec &spec, const DeformationParams &def);
CommutatorResiduals commutator_residuals(const DeformedQuadratures &q);

/// Debug dump. Header line "ncprobe-operator <dim> <modes> <margin> <hermitian>"
/// followed by one row per line of "re im" pairs. Not a stable format.
void write_operator_text(std::ostream &out, const OperatorMatrix &op);
OperatorMatrix read_operator_text(std::istream &in);

}  // namespace ncprobe
