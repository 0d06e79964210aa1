// Copyright 2026 The mebasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mebasis/entangled.hpp"
#include "oracles.hpp"

using namespace mebasis;

namespace {

ComplexMatrix pauliX() {
    ComplexMatrix s(2, 2);
    s << 0.0, 1.0, 1.0, 0.0;
    return s;
}

ComplexMatrix pauliZ() {
    ComplexMatrix s(2, 2);
    s << 1.0, 0.0, 0.0, -1.0;
    return s;
}

// Omega built independently: sum_a e_a (x) e_a / sqrt(d) via oracle kron.
ComplexVector omegaOracle(int d) {
    ComplexVector acc = ComplexVector::Zero(d * d);
    for (int a = 0; a < d; ++a) {
        ComplexMatrix e = ComplexMatrix::Zero(d, 1);
        e(a, 0) = 1.0;
        acc += oracle::kron(e, e).col(0);
    }
    return acc / std::sqrt(static_cast<double>(d));
}

bool sameUpToPhase(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    const Complex overlap = (a.adjoint() * b).trace();
    if (std::abs(overlap) < tol)
        return false;
    const Complex phase = overlap / std::abs(overlap);
    return (b - phase * a).norm() < tol;
}

} // namespace

TEST(Omega, MatchesIndependentConstruction) {
    for (int d = 1; d <= 6; ++d) {
        EXPECT_LT((omega(d).amplitudes() - omegaOracle(d)).norm(), 1e-15);
        EXPECT_NEAR(normOf(omega(d)), 1.0, 1e-15);
    }
}

TEST(Omega, InvariantUnderUTensorUbar) {
    std::mt19937_64 rng(31);
    for (int d = 2; d <= 5; ++d) {
        const ComplexMatrix u = haarUnitary(d, rng);
        const ComplexVector w = oracle::kron(u, u.conjugate()) * omega(d).amplitudes();
        EXPECT_LT((w - omega(d).amplitudes()).norm(), 1e-12);
    }
}

TEST(OperatorCorrespondence, RoundTripIsExact) {
    std::mt19937_64 rng(2);
    for (int d = 1; d <= 6; ++d) {
        const ComplexMatrix x = gaussianMatrix(d, d, rng);
        EXPECT_LT((operatorFromVector(vectorFromOperator(x)) - x).norm(), 1e-14 * (1.0 + x.norm()));
        const StateVector v = randomUnitState(d, d, rng);
        const StateVector back = vectorFromOperator(operatorFromVector(v));
        EXPECT_LT((back.amplitudes() - v.amplitudes()).norm(), 1e-15);
    }
}

TEST(OperatorCorrespondence, MatchesTensorActionOnOmega) {
    std::mt19937_64 rng(12);
    for (int d = 2; d <= 5; ++d) {
        const ComplexMatrix x = gaussianMatrix(d, d, rng);
        const ComplexVector expected = oracle::kron(x, ComplexMatrix::Identity(d, d)) * omegaOracle(d);
        EXPECT_LT((vectorFromOperator(x).amplitudes() - expected).norm(), 1e-13);
    }
}

TEST(OperatorCorrespondence, RejectsNonSquareFactors) {
    EXPECT_THROW(operatorFromVector(StateVector(2, 3, ComplexVector::Zero(6))), std::invalid_argument);
    EXPECT_THROW(vectorFromOperator(ComplexMatrix::Zero(2, 3), 2), std::invalid_argument);
}

TEST(InnerProductLaw, OneOverD) {
    std::mt19937_64 rng(13);
    for (int d = 2; d <= 6; ++d)
        for (int trial = 0; trial < 20; ++trial) {
            const ComplexMatrix x = gaussianMatrix(d, d, rng), y = gaussianMatrix(d, d, rng);
            const Complex lhs = inner(vectorFromOperator(x), vectorFromOperator(y));
            const Complex rhs = (x.adjoint() * y).trace() / static_cast<double>(d);
            EXPECT_LT(std::abs(lhs - rhs), 1e-12 * (1.0 + std::abs(rhs)));
        }
}

TEST(TransposeIdentity, MovesOperatorAcross) {
    std::mt19937_64 rng(14);
    for (int d = 2; d <= 6; ++d) {
        const ComplexMatrix x = gaussianMatrix(d, d, rng);
        const ComplexVector lhs = oracle::kron(x, ComplexMatrix::Identity(d, d)) * omegaOracle(d);
        const ComplexVector rhs = oracle::kron(ComplexMatrix::Identity(d, d), x.transpose()) * omegaOracle(d);
        EXPECT_LT((lhs - rhs).norm(), 1e-13);
    }
}

TEST(ReducedDensity, MatchesDefiningProperty) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector v = randomUnitState(2, 3, rng);
        EXPECT_LT((reducedDensity(v, Side::Left) - oracle::reducedLeft(v.amplitudes(), 2, 3)).norm(), 1e-13);
        EXPECT_LT((reducedDensity(v, Side::Right) - oracle::reducedRight(v.amplitudes(), 2, 3)).norm(), 1e-13);
    }
}

TEST(ReducedDensity, ProductState) {
    ComplexMatrix e0 = ComplexMatrix::Zero(2, 1);
    e0(0, 0) = 1.0;
    ComplexMatrix plus = ComplexMatrix::Ones(2, 1) / std::sqrt(2.0);
    const StateVector v(2, 2, oracle::kron(e0, plus).col(0));
    EXPECT_LT((reducedDensity(v, Side::Left) - e0 * e0.adjoint()).norm(), 1e-15);
    EXPECT_LT((reducedDensity(v, Side::Right) - plus * plus.adjoint()).norm(), 1e-15);
}

TEST(ReducedDensity, OperatorFormulas) {
    // rho_left = (1/d) X X^dagger, rho_right = (1/d) X^T conj(X) for
    // psi = (X (x) 1) Omega with tr(X^dagger X) = d. The transposed forms
    // differ for generic X.
    std::mt19937_64 rng(16);
    for (int d = 2; d <= 5; ++d) {
        ComplexMatrix x = gaussianMatrix(d, d, rng);
        x *= std::sqrt(static_cast<double>(d)) / x.norm();
        const StateVector psi = vectorFromOperator(x);
        const ComplexMatrix left = x * x.adjoint() / static_cast<double>(d);
        const ComplexMatrix right = x.transpose() * x.conjugate() / static_cast<double>(d);
        EXPECT_LT((oracle::reducedLeft(psi.amplitudes(), d, d) - left).norm(), 1e-13);
        EXPECT_LT((oracle::reducedRight(psi.amplitudes(), d, d) - right).norm(), 1e-13);
        EXPECT_GT((oracle::reducedLeft(psi.amplitudes(), d, d) - left.transpose()).norm(), 1e-3);
    }
}

TEST(ReducedDensity, RejectsNonUnitInput) {
    EXPECT_THROW(reducedDensity(StateVector(2, 2, ComplexVector::Ones(4)), Side::Left), std::invalid_argument);
}

TEST(MaxEntangled, OmegaAndProduct) {
    for (int d = 2; d <= 6; ++d) {
        const MaxEntangledReport r = isMaxEntangled(omega(d));
        EXPECT_TRUE(r.ok);
        for (int k = 0; k < d; ++k)
            EXPECT_NEAR(r.schmidtCoefficients(k), 1.0 / std::sqrt(static_cast<double>(d)), 1e-14);
    }
    ComplexVector product = ComplexVector::Zero(4);
    product(0) = 1.0;
    const MaxEntangledReport r = isMaxEntangled(StateVector(2, 2, product));
    EXPECT_FALSE(r.ok);
    EXPECT_GT(r.residual, 0.5);
}

TEST(MaxEntangled, IffOperatorUnitary) {
    std::mt19937_64 rng(18);
    for (int d = 2; d <= 5; ++d) {
        const ComplexMatrix u = haarUnitary(d, rng);
        EXPECT_TRUE(isMaxEntangled(vectorFromOperator(u)).ok);
        // Both reductions then equal 1/d.
        const ComplexMatrix target = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
        EXPECT_LT((oracle::reducedLeft(vectorFromOperator(u).amplitudes(), d, d) - target).norm(), 1e-13);
        EXPECT_LT((oracle::reducedRight(vectorFromOperator(u).amplitudes(), d, d) - target).norm(), 1e-13);
        const StateVector generic = randomUnitState(d, d, rng);
        EXPECT_FALSE(isMaxEntangled(generic).ok);
    }
}

TEST(FourierBasis, DimensionTwoIsPauliGroup) {
    const UnitaryBasis b = fourierBasis(2);
    ASSERT_EQ(b.ops.size(), 4u);
    const std::vector<ComplexMatrix> expected{ComplexMatrix::Identity(2, 2), pauliX(), pauliZ(),
                                              pauliX() * pauliZ()};
    for (const auto &e : expected) {
        int hits = 0;
        for (const auto &x : b.ops)
            hits += sameUpToPhase(e, x, 1e-12) ? 1 : 0;
        EXPECT_EQ(hits, 1);
    }
}

TEST(FourierBasis, EntriesFollowShiftAndMultiplyRule) {
    // With H^j = F_d and tau(k, j) = k + j mod d: U^{ij}[(k+j) mod d, k] = w^{ik}.
    const int d = 4;
    const UnitaryBasis b = fourierBasis(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ComplexMatrix expected = ComplexMatrix::Zero(d, d);
            for (int k = 0; k < d; ++k)
                expected((k + j) % d, k) = std::polar(1.0, 2.0 * std::numbers::pi * i * k / d);
            EXPECT_LT((b.ops[i * d + j] - expected).norm(), 1e-13);
        }
}

TEST(FourierBasis, VerifiesForSmallDimensions) {
    for (int d = 1; d <= 8; ++d) {
        const BasisReport r = verifyUnitaryBasis(fourierBasis(d));
        EXPECT_TRUE(r.ok) << d;
        const EntangledBasisReport e = verifyEntangledBasis(toEntangledBasis(fourierBasis(d)));
        EXPECT_TRUE(e.ok) << d;
    }
}

TEST(ShiftMultiply, MixedHadamardsAndPermutedLatinSquare) {
    // Different Hadamard per column and a non-cyclic Latin square.
    const std::vector<HadamardMatrix> hs{fourierHadamard(4), sylvesterHadamard(2),
                                         tensorHadamard(fourierHadamard(2), fourierHadamard(2)),
                                         fourierHadamard(4)};
    const LatinSquare tau = LatinSquare::fromTable({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    const UnitaryBasis b = shiftMultiplyBasis(hs, tau);
    EXPECT_TRUE(verifyUnitaryBasis(b).ok);
    EXPECT_TRUE(verifyEntangledBasis(toEntangledBasis(b)).ok);
}

TEST(ShiftMultiply, OrderSixFromTensorHadamard) {
    const HadamardMatrix h = tensorHadamard(fourierHadamard(2), fourierHadamard(3));
    const std::vector<HadamardMatrix> hs(6, h);
    EXPECT_TRUE(verifyUnitaryBasis(shiftMultiplyBasis(hs, cyclicLatinSquare(6))).ok);
}

TEST(ShiftMultiply, RejectsMismatchedOrders) {
    const std::vector<HadamardMatrix> hs(3, fourierHadamard(2));
    EXPECT_THROW(shiftMultiplyBasis(hs, cyclicLatinSquare(3)), std::invalid_argument);
    const std::vector<HadamardMatrix> two(2, fourierHadamard(3));
    EXPECT_THROW(shiftMultiplyBasis(two, cyclicLatinSquare(3)), std::invalid_argument);
}

TEST(VerifyBasis, DuplicatedOperatorNamesPair) {
    UnitaryBasis b = fourierBasis(3);
    b.ops[1] = b.ops[0];
    const BasisReport r = verifyUnitaryBasis(b);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.worstPair, std::make_pair(0, 1));
    EXPECT_NEAR(r.maxOrthonormality, 1.0, 1e-13);
}

TEST(VerifyBasis, NonUnitaryMember) {
    UnitaryBasis b = fourierBasis(2);
    b.ops[3] *= 2.0;
    const BasisReport r = verifyUnitaryBasis(b);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.worstUnitary, 3);
}

TEST(VerifyBasis, WrongCountOrShape) {
    UnitaryBasis b = fourierBasis(2);
    b.ops.pop_back();
    EXPECT_THROW(verifyUnitaryBasis(b), std::invalid_argument);
    UnitaryBasis c = fourierBasis(2);
    c.ops[0] = ComplexMatrix::Identity(3, 3);
    EXPECT_THROW(verifyUnitaryBasis(c), std::invalid_argument);
}

TEST(Conversions, RoundTrip) {
    const UnitaryBasis b = fourierBasis(3);
    const UnitaryBasis back = toUnitaryBasis(toEntangledBasis(b));
    for (std::size_t a = 0; a < b.ops.size(); ++a)
        EXPECT_LT((back.ops[a] - b.ops[a]).norm(), 1e-14);
}

TEST(FourierBasis, LocalUnitaryImageStaysBasis) {
    // (V (x) W) Psi_a is again a maximally entangled basis.
    std::mt19937_64 rng(19);
    const int d = 3;
    const EntangledBasis b = toEntangledBasis(fourierBasis(d));
    const ComplexMatrix local = oracle::kron(haarUnitary(d, rng), haarUnitary(d, rng));
    EntangledBasis moved{d, {}};
    for (const auto &v : b.vectors)
        moved.vectors.push_back(applyOperator(local, v));
    EXPECT_TRUE(verifyEntangledBasis(moved).ok);
}
