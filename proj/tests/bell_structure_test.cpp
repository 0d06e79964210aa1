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

#include "mebasis/antilinear.hpp"
#include "mebasis/bell.hpp"
#include "mebasis/clifford.hpp"
#include "mebasis/det_criterion.hpp"
#include "mebasis/theorem5.hpp"
#include "oracles.hpp"

using namespace mebasis;

namespace {

// Each Bell vector written out: (1/sqrt 2) of 00+11, i(01+10), 01-10, i(00-11).
std::vector<ComplexVector> bellByHand() {
    const double c = 1.0 / std::sqrt(2.0);
    std::vector<ComplexVector> v(4, ComplexVector::Zero(4));
    v[0](0) = c;
    v[0](3) = c;
    v[1](1) = kI * c;
    v[1](2) = kI * c;
    v[2](1) = c;
    v[2](2) = -c;
    v[3](0) = kI * c;
    v[3](3) = -kI * c;
    return v;
}

ComplexMatrix randomSU2(std::mt19937_64 &rng) { return haarSpecialUnitary(2, rng); }

} // namespace

TEST(Theta2, ActionOnBasisVector) {
    ComplexVector e0(2);
    e0 << 1.0, 0.0;
    ComplexVector expected(2);
    expected << 0.0, -1.0;
    EXPECT_EQ(theta2().apply(e0), expected);
}

TEST(Theta2, IsAntilinear) {
    std::mt19937_64 rng(1);
    const AntilinearOp t = theta2();
    const ComplexVector v = gaussianMatrix(2, 1, rng).col(0), w = gaussianMatrix(2, 1, rng).col(0);
    const Complex lambda(0.3, -1.7);
    EXPECT_LT((t.apply(lambda * v + w) - (std::conj(lambda) * t.apply(v) + t.apply(w))).norm(), 1e-14);
}

TEST(Theta2, OrthogonalToEveryInput) {
    std::mt19937_64 rng(2);
    const AntilinearOp t = theta2();
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexVector v = gaussianMatrix(2, 1, rng).col(0);
        EXPECT_LT(std::abs(v.dot(t.apply(v))), 1e-14);
        EXPECT_NEAR(t.apply(v).norm(), v.norm(), 1e-14);
    }
}

TEST(Theta2, SquaresToMinusIdentity) {
    EXPECT_EQ(theta2().square(), -ComplexMatrix::Identity(2, 2));
    EXPECT_TRUE(theta2().isAntiunitary());
}

TEST(Antilinear, CompositionMatchesSequentialApplication) {
    std::mt19937_64 rng(3);
    const AntilinearOp a = randomAntilinear(3, rng), b = randomAntilinear(3, rng);
    const ComplexVector v = gaussianMatrix(3, 1, rng).col(0);
    EXPECT_LT((a.composeLinear(b) * v - a.apply(b.apply(v))).norm(), 1e-13);
}

TEST(Antilinear, ConjugationMatchesSequentialApplication) {
    std::mt19937_64 rng(4);
    const AntilinearOp a = randomAntilinear(3, rng);
    const ComplexMatrix u = haarUnitary(3, rng);
    const ComplexVector v = gaussianMatrix(3, 1, rng).col(0);
    EXPECT_LT((a.conjugatedBy(u).apply(v) - u * a.apply(ComplexVector(u.adjoint() * v))).norm(), 1e-13);
}

TEST(Antilinear, RandomCandidateNormalisation) {
    std::mt19937_64 rng(5);
    EXPECT_NEAR(randomAntilinear(3, rng).matrix().norm(), std::sqrt(3.0), 1e-13);
}

TEST(Antilinear, TensorActsOnProducts) {
    std::mt19937_64 rng(6);
    const AntilinearOp a = randomAntilinear(2, rng), b = randomAntilinear(3, rng);
    const ComplexMatrix phi = gaussianMatrix(2, 1, rng), psi = gaussianMatrix(3, 1, rng);
    const ComplexVector lhs = tensor(a, b).apply(ComplexVector(oracle::kron(phi, psi).col(0)));
    const ComplexVector rhs =
        oracle::kron(a.apply(ComplexVector(phi.col(0))), b.apply(ComplexVector(psi.col(0)))).col(0);
    EXPECT_LT((lhs - rhs).norm(), 1e-13);
}

TEST(ThetaN, SquareSignIsExact) {
    for (int n = 1; n <= 4; ++n) {
        const int dim = 1 << n;
        EXPECT_EQ(thetaN(n).square(), (n % 2 == 0 ? 1.0 : -1.0) * ComplexMatrix::Identity(dim, dim)) << n;
    }
}

TEST(ThetaN, TwoFixesBellVectors) {
    for (const ComplexVector &v : bellByHand())
        EXPECT_LT((thetaN(2).apply(v) - v).norm(), 1e-15);
}

TEST(ThetaN, OddOrderIsOrthogonalToInput) {
    std::mt19937_64 rng(7);
    const AntilinearOp t = thetaN(3);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexVector v = randomUnitState(2, 4, rng).amplitudes();
        EXPECT_LT(std::abs(v.dot(t.apply(v))), 1e-14);
    }
}

TEST(Universality, HoldsInDimensionTwo) {
    const CheckReport r = checkUniversality(theta2(), 300, 11);
    EXPECT_TRUE(r.passed()) << r.maxViolation();
    EXPECT_EQ(r.trials(), 300);
    EXPECT_TRUE(r.witnesses().empty());
    EXPECT_EQ(r.verdict(), CheckReport::Verdict::NoViolationFound);
}

TEST(Universality, ExplicitResidualFormula) {
    std::mt19937_64 rng(8);
    const ComplexMatrix u = haarUnitary(2, rng);
    const ComplexMatrix a = theta2().matrix();
    const double expected = (u * a * u.adjoint().conjugate() - oracle::determinant(u) * a).norm();
    EXPECT_NEAR(universalityResidual(theta2(), u), expected, 1e-15);
    EXPECT_LT(expected, 1e-13);
}

TEST(Universality, FailsInDimensionThree) {
    std::mt19937_64 rng(9);
    for (int c = 0; c < 5; ++c) {
        const AntilinearOp cand = randomAntilinear(3, rng);
        const CheckReport r = checkUniversality(cand, 20, 100 + c, kDefaultTolerance, PhaseRule::BestFit);
        EXPECT_FALSE(r.passed());
        EXPECT_GT(r.maxViolation(), 0.1);
        ASSERT_FALSE(r.witnesses().empty());
        EXPECT_EQ(r.witnesses().front().inputs.size(), 1u);
    }
}

TEST(Universality, BestFitNeverExceedsDeterminantRule) {
    std::mt19937_64 rng(10);
    const AntilinearOp cand = randomAntilinear(3, rng);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix u = haarUnitary(3, rng);
        EXPECT_LE(universalityResidual(cand, u, PhaseRule::BestFit),
                  universalityResidual(cand, u, PhaseRule::Determinant) + 1e-12);
    }
}

TEST(Bell, BasisMatchesHandWrittenVectors) {
    const EntangledBasis b = bellBasis();
    const auto expected = bellByHand();
    for (int a = 0; a < 4; ++a)
        EXPECT_LT((b.vectors[a].amplitudes() - expected[a]).norm(), 1e-15);
    EXPECT_TRUE(verifyEntangledBasis(b).ok);
}

TEST(Bell, CoordinatesRoundTrip) {
    std::mt19937_64 rng(12);
    const ComplexMatrix u = haarUnitary(4, rng);
    EXPECT_LT((fromBellCoordinates(toBellCoordinates(u)) - u).norm(), 1e-13);
}

TEST(Bell, ConjugateIsThetaTensorTheta) {
    const PhaseAlignment a = bellConjugationPhase();
    EXPECT_LT(std::abs(a.phase - 1.0), 1e-15);
    EXPECT_LT(a.residual, 1e-15);
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const StateVector v = randomUnitState(2, 2, rng);
        const ComplexVector viaBell = bellConjugate(v).amplitudes();
        EXPECT_LT((viaBell - a.phase * thetaN(2).apply(v.amplitudes())).norm(), 1e-14);
        EXPECT_LT((viaBell - bellConjugation().apply(v.amplitudes())).norm(), 1e-14);
    }
}

TEST(Bell, ConjugateRejectsWrongDimensions) {
    EXPECT_THROW(bellConjugate(omega(3)), std::invalid_argument);
}

TEST(AlignPhase, RecoversKnownPhase) {
    std::mt19937_64 rng(14);
    const ComplexMatrix a = gaussianMatrix(3, 3, rng);
    const Complex phase = std::polar(1.0, 0.9);
    const PhaseAlignment r = alignPhase(a, phase * a);
    EXPECT_LT(std::abs(r.phase - phase), 1e-14);
    EXPECT_LT(r.residual, 1e-13);
}

TEST(Canonicalize, BellBasisIsItsOwnForm) {
    const BellCanonicalForm f = canonicalizeBellBasis(bellBasis());
    EXPECT_LT((f.u1 - ComplexMatrix::Identity(2, 2)).norm(), 1e-12);
    EXPECT_LT((f.u2 - ComplexMatrix::Identity(2, 2)).norm(), 1e-12);
    EXPECT_FALSE(f.oddPermutation);
    EXPECT_EQ(f.permutation, (std::array<int, 4>{0, 1, 2, 3}));
    for (const Complex &p : f.phases)
        EXPECT_LT(std::abs(p - 1.0), 1e-12);
}

TEST(Canonicalize, RecoversLocalUnitariesUpToJointSign) {
    std::mt19937_64 rng(15);
    const auto bell = bellByHand();
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix v = randomSU2(rng), w = randomSU2(rng);
        const ComplexMatrix local = oracle::kron(v, w);
        EntangledBasis psi{2, {}};
        for (const auto &phi : bell)
            psi.vectors.emplace_back(2, 2, local * phi);
        const BellCanonicalForm f = canonicalizeBellBasis(psi);
        EXPECT_LT(f.residual, 1e-10);
        EXPECT_FALSE(f.oddPermutation);
        // V (x) W = (-V) (x) (-W); the recovered pair matches one of them.
        const double plus = (f.u1 - v).norm() + (f.u2 - w).norm();
        const double minus = (f.u1 + v).norm() + (f.u2 + w).norm();
        EXPECT_LT(std::min(plus, minus), 1e-9);
        // Independent reconstruction check.
        const ComplexMatrix rebuiltLocal = oracle::kron(f.u1, f.u2);
        for (int a = 0; a < 4; ++a)
            EXPECT_LT((psi.vectors[a].amplitudes() - f.phases[a] * rebuiltLocal * bell[f.permutation[a]]).norm(),
                      1e-10);
    }
}

TEST(Canonicalize, HandlesPhasesAndGeneralUnitaries) {
    std::mt19937_64 rng(16);
    const auto bell = bellByHand();
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix local = oracle::kron(haarUnitary(2, rng), haarUnitary(2, rng));
        EntangledBasis psi{2, {}};
        for (const auto &phi : bell)
            psi.vectors.emplace_back(2, 2, std::polar(1.0, angle(rng)) * (local * phi));
        const BellCanonicalForm f = canonicalizeBellBasis(psi);
        EXPECT_LT(f.residual, 1e-8);
        EXPECT_TRUE(isUnitary(f.u1, 1e-10));
        EXPECT_TRUE(isUnitary(f.u2, 1e-10));
    }
}

TEST(Canonicalize, SwappedFrameNeedsOddPermutation) {
    const auto bell = bellByHand();
    EntangledBasis psi{2, {}};
    for (int a : {0, 2, 1, 3})
        psi.vectors.emplace_back(2, 2, bell[a]);
    const BellCanonicalForm f = canonicalizeBellBasis(psi);
    EXPECT_TRUE(f.oddPermutation);
    EXPECT_LT(f.residual, 1e-10);
    const ComplexMatrix local = oracle::kron(f.u1, f.u2);
    for (int a = 0; a < 4; ++a)
        EXPECT_LT((psi.vectors[a].amplitudes() - f.phases[a] * local * bell[f.permutation[a]]).norm(), 1e-10);
}

TEST(Canonicalize, RejectsNonBasis) {
    EntangledBasis psi = bellBasis();
    psi.vectors[3] = psi.vectors[2];
    EXPECT_THROW(canonicalizeBellBasis(psi), std::invalid_argument);
    EntangledBasis product = bellBasis();
    ComplexVector e = ComplexVector::Zero(4);
    e(0) = 1.0;
    product.vectors[0] = StateVector(2, 2, e);
    EXPECT_THROW(canonicalizeBellBasis(product), std::invalid_argument);
    EXPECT_THROW(canonicalizeBellBasis(toEntangledBasis(fourierBasis(3))), std::invalid_argument);
}

TEST(BellCharacterisation, BellBasisPassesAllConditions) {
    for (int c = 2; c <= 6; ++c) {
        const CheckReport r = checkTheorem5(bellBasis(), c, 100, 21);
        EXPECT_TRUE(r.passed()) << "condition " << c << ": " << r.maxViolation();
    }
}

TEST(BellCharacterisation, LocallyRotatedBellBasisPasses) {
    // Only real-linear structure matters; a local SU(2) image keeps it.
    std::mt19937_64 rng(22);
    const ComplexMatrix local = oracle::kron(randomSU2(rng), randomSU2(rng));
    EntangledBasis psi{2, {}};
    for (const auto &phi : bellByHand())
        psi.vectors.emplace_back(2, 2, local * phi);
    for (int c : {2, 4, 5, 6})
        EXPECT_TRUE(checkTheorem5(psi, c, 100, 23, 1e-9).passed()) << c;
}

TEST(BellCharacterisation, FourierThreeFails) {
    const EntangledBasis b = toEntangledBasis(fourierBasis(3));
    for (int c : {2, 4, 5, 6}) {
        const CheckReport r = checkTheorem5(b, c, 100, 24);
        EXPECT_FALSE(r.passed()) << c;
        ASSERT_FALSE(r.witnesses().empty()) << c;
        EXPECT_GT(r.maxViolation(), 0.01) << c;
    }
}

TEST(BellCharacterisation, ConditionSixIsDeterministicAndLarge) {
    const EntangledBasis b = toEntangledBasis(fourierBasis(3));
    const CheckReport r1 = checkTheorem5(b, 6, 1, 0);
    const CheckReport r2 = checkTheorem5(b, 6, 1, 999);
    EXPECT_GE(r1.maxViolation(), 1.0);
    EXPECT_EQ(r1.maxViolation(), r2.maxViolation());
    EXPECT_EQ(r1.trials(), 1);
}

TEST(BellCharacterisation, PhasedBellBasisBreaksRealStructure) {
    // A non-real relative phase on one vector breaks condition 4.
    EntangledBasis psi = bellBasis();
    psi.vectors[1] = StateVector(2, 2, std::polar(1.0, 0.7) * psi.vectors[1].amplitudes());
    EXPECT_FALSE(checkTheorem5(psi, 4, 200, 25).passed());
}

TEST(BellCharacterisation, UnknownConditionThrows) {
    EXPECT_THROW(checkTheorem5(bellBasis(), 1, 10, 0), std::invalid_argument);
    EXPECT_THROW(checkTheorem5(bellBasis(), 7, 10, 0), std::invalid_argument);
}

TEST(BellCharacterisation, ReproducibleForEqualSeeds) {
    const EntangledBasis b = toEntangledBasis(fourierBasis(3));
    for (int c = 2; c <= 5; ++c)
        EXPECT_EQ(checkTheorem5(b, c, 50, 7).maxViolation(), checkTheorem5(b, c, 50, 7).maxViolation());
}

TEST(Clifford, BuiltGeneratorsSatisfyRelations) {
    for (int n : {1, 3, 5, 7, 9}) {
        const auto rs = buildCliffordGenerators(n);
        ASSERT_EQ(static_cast<int>(rs.size()), n);
        const CliffordReport r = cliffordCheck(rs);
        EXPECT_TRUE(r.passed()) << n;
        EXPECT_EQ(r.dimension, 1 << ((n - 1) / 2));
        ASSERT_TRUE(r.predictedDimension.has_value());
        EXPECT_EQ(*r.predictedDimension, r.dimension);
        // Independent anticommutator check.
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const ComplexMatrix ac = rs[a] * rs[b] + rs[b] * rs[a];
                const ComplexMatrix target =
                    (a == b ? 2.0 : 0.0) * ComplexMatrix::Identity(r.dimension, r.dimension);
                EXPECT_LT((ac - target).norm(), 1e-13);
            }
    }
}

TEST(Clifford, PaulisAreThreeGenerators) {
    const CliffordReport r = cliffordCheck({pauli(1), pauli(2), pauli(3)});
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.dimension, 2);
}

TEST(Clifford, RepeatedGeneratorFailsAtPair) {
    const CliffordReport r = cliffordCheck({pauli(1), pauli(1)});
    EXPECT_FALSE(r.passed());
    ASSERT_FALSE(r.relations.witnesses().empty());
    EXPECT_EQ(r.relations.witnesses().front().label, "pair (0,1)");
    EXPECT_NEAR(r.relations.maxViolation(), 2.0 * std::sqrt(2.0), 1e-13);
}

TEST(Clifford, NonHermitianFlagged) {
    const CliffordReport r = cliffordCheck({kI * pauli(1)});
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.relations.witnesses().front().label, "hermiticity 0");
}

TEST(Clifford, DimensionMismatchForOddCount) {
    // Three anticommuting matrices on C^4 are reducible: relations hold but
    // the irreducible dimension prediction does not.
    std::vector<ComplexMatrix> rs;
    for (int k = 1; k <= 3; ++k)
        rs.push_back(oracle::kron(pauli(k), ComplexMatrix::Identity(2, 2)));
    const CliffordReport r = cliffordCheck(rs);
    EXPECT_TRUE(r.relations.passed());
    EXPECT_FALSE(r.dimensionMatches);
    EXPECT_FALSE(r.passed());
}

TEST(Clifford, BadInput) {
    EXPECT_THROW(buildCliffordGenerators(2), std::invalid_argument);
    EXPECT_THROW(buildCliffordGenerators(0), std::invalid_argument);
    EXPECT_THROW(cliffordCheck({pauli(1), ComplexMatrix::Identity(3, 3)}), std::invalid_argument);
}

TEST(DetCriterion, LocalAndFlip) {
    std::mt19937_64 rng(30);
    for (int trial = 0; trial < 30; ++trial) {
        const ComplexMatrix local = oracle::kron(randomSU2(rng), randomSU2(rng));
        const DetCriterionResult r = detCriterion(local);
        EXPECT_EQ(r.verdict, DetVerdict::Local);
        EXPECT_TRUE(r.consistent);
        EXPECT_LT(std::abs(r.determinant - 1.0), 1e-12);
        const ComplexMatrix flipped = local * flipOperator(2);
        const DetCriterionResult f = detCriterion(flipped);
        EXPECT_EQ(f.verdict, DetVerdict::LocalFlip);
        EXPECT_TRUE(f.consistent);
    }
}

TEST(DetCriterion, RealOrthogonalInBellCoordinates) {
    std::mt19937_64 rng(31);
    int signs[2] = {0, 0};
    for (int trial = 0; trial < 100; ++trial) {
        const RealMatrix o = haarOrthogonal(4, rng);
        const ComplexMatrix u = fromBellCoordinates(o.cast<Complex>());
        const DetCriterionResult r = detCriterion(u);
        EXPECT_TRUE(r.consistent);
        const bool positive = o.determinant() > 0.0;
        ++signs[positive ? 1 : 0];
        EXPECT_EQ(r.verdict, positive ? DetVerdict::Local : DetVerdict::LocalFlip);
    }
    EXPECT_GT(signs[0], 0);
    EXPECT_GT(signs[1], 0);
}

TEST(DetCriterion, CnotIsNotRealInBell) {
    ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    const DetCriterionResult r = detCriterion(cnot);
    EXPECT_EQ(r.verdict, DetVerdict::NotRealInBell);
    EXPECT_GT(r.maxImaginary, 0.1);
    EXPECT_TRUE(r.consistent);
}

TEST(DetCriterion, RejectsBadInput) {
    EXPECT_THROW(detCriterion(ComplexMatrix::Identity(9, 9)), std::invalid_argument);
    EXPECT_THROW(detCriterion(2.0 * ComplexMatrix::Identity(4, 4)), std::invalid_argument);
}
