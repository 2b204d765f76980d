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

#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "ncprobe/errors.hpp"
#include "ncprobe/fock.hpp"

namespace ncprobe {
namespace {

const std::complex<double> kI{0.0, 1.0};

double max_abs(const ComplexMatrix &m) { return m.cwiseAbs().maxCoeff(); }

// exp(i s H) by its Taylor series, independent of the eigensolver.
ComplexMatrix taylor_exp(const ComplexMatrix &h, double s) {
    ComplexMatrix term = ComplexMatrix::Identity(h.rows(), h.cols());
    ComplexMatrix sum = term;
    for (int k = 1; k < 80; ++k) {
        term = term * h * (kI * s / static_cast<double>(k));
        sum += term;
    }
    return sum;
}

TEST(FockSpec, Invariants) {
    const FockSpec s(8, 2, 3);
    EXPECT_EQ(s.total_dim(), 64u);
    EXPECT_EQ(s.basis_index(2, 5), 21u);
    EXPECT_EQ(s.occupation(21, 0), 2u);
    EXPECT_EQ(s.occupation(21, 1), 5u);
    EXPECT_TRUE(s.is_interior(s.basis_index(4, 4)));
    EXPECT_FALSE(s.is_interior(s.basis_index(5, 0)));
    EXPECT_EQ(s.interior_indices().size(), 25u);
    EXPECT_THROW(FockSpec(8, 3), DomainError);
    EXPECT_THROW(FockSpec(8, 2, 7), DomainError);
    EXPECT_THROW(FockSpec(1, 1, 0), DomainError);
}

TEST(OperatorMatrix, ShapeAndHermiticityChecks) {
    const FockSpec s(4, 1);
    EXPECT_THROW(OperatorMatrix(ComplexMatrix::Zero(3, 3), s), DimensionError);
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 1) = 1.0;
    EXPECT_THROW(OperatorMatrix(m, s, true), DomainError);
    EXPECT_NO_THROW(OperatorMatrix(m, s, false));
}

TEST(Ladder, TwoLevelMatrix) {
    const auto a = ladder(FockSpec(2, 1, 0), 0);
    ComplexMatrix expected(2, 2);
    expected << 0.0, 1.0, 0.0, 0.0;
    EXPECT_EQ(max_abs(a.data() - expected), 0.0);
}

TEST(Ladder, NumberOperatorDiagonal) {
    const FockSpec s(7, 1);
    const auto a = ladder(s, 0);
    const auto n = a.adjoint() * a;
    for (Eigen::Index i = 0; i < 7; ++i) {
        for (Eigen::Index j = 0; j < 7; ++j) {
            EXPECT_NEAR(std::abs(n(i, j) - (i == j ? double(i) : 0.0)), 0.0, 1e-14);
        }
    }
}

TEST(Ladder, TruncationCorner) {
    const std::size_t d = 9;
    const FockSpec s(d, 1, 1);
    const auto a = ladder(s, 0);
    const auto c = commutator(a, a.adjoint());
    for (std::size_t i = 0; i + 1 < d; ++i) EXPECT_NEAR(std::abs(c(i, i) - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(c(d - 1, d - 1) - (1.0 - double(d))), 0.0, 1e-13);
    EXPECT_LE(c.interior_deviation_from_scalar(1.0), 1e-14);
}

TEST(Ladder, ModeOutOfRange) { EXPECT_THROW(ladder(FockSpec(4, 1), 1), DomainError); }

TEST(Ladder, SecondModeActsOnSecondIndex) {
    const FockSpec s(5, 2);
    const auto a2 = ladder(s, 1);
    EXPECT_NEAR(std::abs(a2(s.basis_index(3, 1), s.basis_index(3, 2)) - std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_EQ(std::abs(a2(s.basis_index(2, 1), s.basis_index(3, 2))), 0.0);
}

TEST(Canonical, GroundStateVariance) {
    const FockSpec s(8, 2);
    const auto q = canonical_quadratures(s);
    const auto x2 = q.x1 * q.x1;
    EXPECT_NEAR(std::abs(x2(0, 0) - 0.5), 0.0, 1e-15);
}

TEST(Canonical, DifferentModesCommuteExactly) {
    const auto q = canonical_quadratures(FockSpec(8, 2));
    EXPECT_EQ(max_abs(commutator(q.x1, q.x2).data()), 0.0);
    EXPECT_EQ(max_abs(commutator(q.p1, q.p2).data()), 0.0);
}

TEST(Canonical, InteriorCommutator) {
    const auto q = canonical_quadratures(FockSpec(12, 2));
    EXPECT_LE(commutator(q.x1, q.p1).interior_deviation_from_scalar(kI), 1e-14);
    EXPECT_LE(commutator(q.x2, q.p2).interior_deviation_from_scalar(kI), 1e-14);
}

TEST(Canonical, Hermitian) {
    const auto q = canonical_quadratures(FockSpec(10, 2));
    for (const auto *m : {&q.x1, &q.x2, &q.p1, &q.p2}) EXPECT_LE(m->hermiticity_defect(), 1e-14);
}

TEST(Deformed, UndeformedLimit) {
    const FockSpec s(8, 2);
    const auto c = canonical_quadratures(s);
    const auto d = deformed_quadratures(s, {0.0, 0.0});
    EXPECT_EQ(max_abs(d.x.data() - c.x1.data()), 0.0);
    EXPECT_EQ(max_abs(d.y.data() - c.x2.data()), 0.0);
    EXPECT_EQ(max_abs(d.px.data() - c.p1.data()), 0.0);
    EXPECT_EQ(max_abs(d.py.data() - c.p2.data()), 0.0);
}

TEST(Deformed, ThetaOnly) {
    const auto d = deformed_quadratures(FockSpec(12, 2), {1.0, 0.0});
    EXPECT_LE(commutator(d.x, d.y).interior_deviation_from_scalar(kI), 1e-12);
    EXPECT_LE(commutator(d.px, d.py).interior_deviation_from_scalar(0.0), 1e-12);
    EXPECT_LE(commutator(d.x, d.px).interior_deviation_from_scalar(kI), 1e-12);
}

TEST(Deformed, MixedCommutatorFactor) {
    const auto d = deformed_quadratures(FockSpec(12, 2), {1.0, 0.4});
    EXPECT_LE(commutator(d.x, d.px).interior_deviation_from_scalar(1.1 * kI), 1e-12);
    EXPECT_LE(commutator(d.y, d.py).interior_deviation_from_scalar(1.1 * kI), 1e-12);
    EXPECT_LE(commutator(d.px, d.py).interior_deviation_from_scalar(0.4 * kI), 1e-12);
}

TEST(Deformed, AllHermitian) {
    const auto d = deformed_quadratures(FockSpec(10, 2), {0.3, 0.2});
    for (const auto *m : {&d.x, &d.y, &d.px, &d.py}) EXPECT_LE(m->hermiticity_defect(), 1e-14);
}

TEST(Deformed, NeedsTwoModes) { EXPECT_THROW(deformed_quadratures(FockSpec(8, 1), {1.0, 1.0}), DomainError); }

TEST(Commutator, Algebra) {
    const auto d = deformed_quadratures(FockSpec(8, 2), {0.5, 0.7});
    EXPECT_EQ(max_abs(commutator(d.x, d.x).data()), 0.0);
    EXPECT_LE(max_abs(commutator(d.x, d.py).data() + commutator(d.py, d.x).data()), 1e-15);
}

TEST(Commutator, SpecMismatch) {
    const auto a = ladder(FockSpec(8, 1), 0);
    const auto b = ladder(FockSpec(6, 1), 0);
    EXPECT_THROW(commutator(a, b), DimensionError);
}

TEST(Unitary, ZeroScaleIsIdentity) {
    const auto d = deformed_quadratures(FockSpec(6, 2), {1.0, 1.0});
    EXPECT_EQ(max_abs(unitary_from_generator(d.x, 0.0).data() - ComplexMatrix::Identity(36, 36)), 0.0);
}

TEST(Unitary, IntegerSpectrumPeriodic) {
    const FockSpec s(10, 1);
    const auto a = ladder(s, 0);
    OperatorMatrix n(( a.adjoint() * a).data(), s, true);
    const auto u = unitary_from_generator(n, 2.0 * std::numbers::pi);
    EXPECT_LE(max_abs(u.data() - ComplexMatrix::Identity(10, 10)), 1e-12);
}

TEST(Unitary, InversePair) {
    const auto q = canonical_quadratures(FockSpec(12, 2));
    const auto u = unitary_from_generator(q.x1, 0.3) * unitary_from_generator(q.x1, -0.3);
    EXPECT_LE(max_abs(u.data() - ComplexMatrix::Identity(144, 144)), 1e-11);
}

TEST(Unitary, MatchesTaylorSeries) {
    const auto d = deformed_quadratures(FockSpec(6, 2), {0.8, 0.3});
    for (double s : {0.05, 0.4, 1.3}) {
        const auto u = unitary_from_generator(d.px, s);
        EXPECT_LE(max_abs(u.data() - taylor_exp(d.px.data(), s)), 1e-12) << s;
        EXPECT_LE(u.unitarity_defect(), 1e-11);
    }
}

TEST(Unitary, RejectsNonHermitian) {
    const auto a = ladder(FockSpec(6, 1), 0);
    EXPECT_THROW(unitary_from_generator(a, 0.1), DomainError);
}

TEST(Residuals, Undeformed) {
    const auto r = commutator_residuals(FockSpec(16, 2, 2), {0.0, 0.0});
    EXPECT_LE(r.max(), 1e-13);
}

TEST(Residuals, Deformed) {
    EXPECT_LE(commutator_residuals(FockSpec(16, 2, 2), {0.3, 0.2}).max(), 1e-12);
}

TEST(Residuals, NoMarginExposesCorner) {
    const std::size_t d = 16;
    const auto r = commutator_residuals(FockSpec(d, 2, 0), {0.3, 0.2});
    // [X, PX] picks up i (1 - D) (1 + eps) in the top corner, so the deviation is about D.
    EXPECT_GT(r.xpx, 0.5 * double(d));
    EXPECT_LT(r.xpx, 2.0 * double(d));
}

TEST(Residuals, NamedOrder) {
    const auto named = commutator_residuals(FockSpec(8, 2), {0.1, 0.1}).named();
    EXPECT_STREQ(named[0].first, "XY");
    EXPECT_STREQ(named[5].first, "YPX");
}

TEST(OperatorText, RoundTrip) {
    const auto d = deformed_quadratures(FockSpec(4, 2, 1), {0.3, 0.2});
    const auto u = unitary_from_generator(d.y, 0.7);
    std::stringstream buf;
    write_operator_text(buf, u);
    const auto back = read_operator_text(buf);
    EXPECT_TRUE(back.spec() == u.spec());
    EXPECT_EQ(max_abs(back.data() - u.data()), 0.0);
}

TEST(OperatorText, BadHeader) {
    std::stringstream buf("not-an-operator 4 2 1 0\n");
    EXPECT_THROW(read_operator_text(buf), Error);
}

}  // namespace
}  // namespace ncprobe
