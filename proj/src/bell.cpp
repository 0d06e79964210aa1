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
#include "mebasis/bell.hpp"

#include <cmath>
#include <string>

#include <Eigen/Geometry>

namespace mebasis {

ComplexMatrix pauli(int k) {
    ComplexMatrix s(2, 2);
    switch (k) {
    case 0:
        s << 1.0, 0.0, 0.0, 1.0;
        break;
    case 1:
        s << 0.0, 1.0, 1.0, 0.0;
        break;
    case 2:
        s << 0.0, -kI, kI, 0.0;
        break;
    case 3:
        s << 1.0, 0.0, 0.0, -1.0;
        break;
    default:
        throw std::invalid_argument("pauli: index must be in 0..3");
    }
    return s;
}

UnitaryBasis bellUnitaries() {
    UnitaryBasis b{2, {pauli(0)}};
    for (int k = 1; k <= 3; ++k)
        b.ops.push_back(kI * pauli(k));
    return b;
}

EntangledBasis bellBasis() { return toEntangledBasis(bellUnitaries()); }

ComplexMatrix bellFrame() {
    const EntangledBasis b = bellBasis();
    ComplexMatrix p(4, 4);
    for (int a = 0; a < 4; ++a)
        p.col(a) = b.vectors[a].amplitudes();
    return p;
}

ComplexMatrix toBellCoordinates(const ComplexMatrix &u) {
    if (u.rows() != 4 || u.cols() != 4)
        throw std::invalid_argument("toBellCoordinates: operator must act on C^2 (x) C^2");
    const ComplexMatrix p = bellFrame();
    return p.adjoint() * u * p;
}

ComplexMatrix fromBellCoordinates(const ComplexMatrix &b) {
    if (b.rows() != 4 || b.cols() != 4)
        throw std::invalid_argument("fromBellCoordinates: matrix must be 4x4");
    const ComplexMatrix p = bellFrame();
    return p * b * p.adjoint();
}

StateVector bellConjugate(const StateVector &v) {
    if (v.dimLeft() != 2 || v.dimRight() != 2)
        throw std::invalid_argument("bellConjugate: vector must live in C^2 (x) C^2");
    const EntangledBasis b = bellBasis();
    ComplexVector out = ComplexVector::Zero(4);
    for (const StateVector &phi : b.vectors)
        out += std::conj(inner(phi, v)) * phi.amplitudes();
    return StateVector(2, 2, std::move(out));
}

PhaseAlignment alignPhase(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("alignPhase: shape mismatch");
    const Complex overlap = (a.conjugate().cwiseProduct(b)).sum();
    PhaseAlignment out;
    if (std::abs(overlap) > 0.0)
        out.phase = overlap / std::abs(overlap);
    out.residual = (b - out.phase * a).norm();
    return out;
}

AntilinearOp bellConjugation() {
    // P conj(P^dagger v) = P P^T conj(v).
    const ComplexMatrix p = bellFrame();
    return AntilinearOp(p * p.transpose());
}

PhaseAlignment bellConjugationPhase() { return alignPhase(thetaN(2).matrix(), bellConjugation().matrix()); }

namespace {

/// Principal square root, with the branch cut resolved toward Im >= 0.
Complex principalRoot(Complex z) {
    Complex r = std::sqrt(z);
    if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0))
        r = -r;
    return r;
}

/// V with V (r . sigma) V^dagger = (O r) . sigma for a proper rotation O.
ComplexMatrix liftRotation(const Eigen::Matrix3d &o) {
    const Eigen::Quaterniond q(o);
    ComplexMatrix v = q.w() * pauli(0) - kI * (q.x() * pauli(1) + q.y() * pauli(2) + q.z() * pauli(3));
    const Complex lead = v(0, 0);
    if (lead.real() < 0.0 || (lead.real() == 0.0 && lead.imag() < 0.0))
        v = -v;
    return v;
}

} // namespace

BellCanonicalForm canonicalizeBellBasis(const EntangledBasis &psi, double tol) {
    if (psi.dim != 2 || psi.vectors.size() != 4)
        throw std::invalid_argument("canonicalizeBellBasis: need four vectors in C^2 (x) C^2");
    const EntangledBasisReport check = verifyEntangledBasis(psi, tol);
    if (!check.ok)
        throw std::invalid_argument("canonicalizeBellBasis: not a maximally entangled basis (gram deviation " +
                                    std::to_string(check.maxGramDeviation) + ", entanglement residual " +
                                    std::to_string(check.maxEntanglementResidual) + ")");

    const UnitaryBasis xs = toUnitaryBasis(psi);
    const ComplexMatrix &x0 = xs.ops[0];

    // Local unitaries act as X -> U1 X U2^T. Moving X_0 to the identity leaves
    // K_a = X_0^dagger X_a, traceless for a > 0, hence K_a = i chi_a (r_a . sigma).
    BellCanonicalForm out;
    out.phases[0] = 1.0;
    Eigen::Matrix3d frame; // columns r_1, r_2, r_3
    for (int a = 1; a < 4; ++a) {
        const ComplexMatrix k = x0.adjoint() * xs.ops[a];
        const Complex chi = principalRoot(k.determinant());
        out.phases[a] = chi;
        double imaginary = 0.0;
        for (int c = 0; c < 3; ++c) {
            const Complex rc = (pauli(c + 1) * k).trace() / (2.0 * kI * chi);
            frame(c, a - 1) = rc.real();
            imaginary = std::max(imaginary, std::abs(rc.imag()));
        }
        const double lengthError = std::abs(frame.col(a - 1).norm() - 1.0);
        if (imaginary > tol || lengthError > tol)
            throw std::invalid_argument("canonicalizeBellBasis: not a maximally entangled basis (frame residual " +
                                        std::to_string(std::max(imaginary, lengthError)) + ")");
    }
    if ((frame.transpose() * frame - Eigen::Matrix3d::Identity()).norm() > tol)
        throw std::invalid_argument("canonicalizeBellBasis: not a maximally entangled basis (frame not orthonormal)");

    // Rotation sending r_a to e_{pi(a)}. A left-handed frame needs an odd
    // permutation first; swapping 1 and 2 restores det = +1.
    Eigen::Matrix3d rotation = frame.transpose();
    if (frame.determinant() < 0.0) {
        out.permutation = {0, 2, 1, 3};
        out.oddPermutation = true;
        rotation.row(0).swap(rotation.row(1));
    }
    const ComplexMatrix v = liftRotation(rotation);
    out.u1 = x0 * v.adjoint();
    out.u2 = v.transpose();

    const EntangledBasis bell = bellBasis();
    const ComplexMatrix local = tensor(out.u1, out.u2);
    for (int a = 0; a < 4; ++a) {
        const ComplexVector rebuilt = out.phases[a] * (local * bell.vectors[out.permutation[a]].amplitudes());
        out.residual = std::max(out.residual, (psi.vectors[a].amplitudes() - rebuilt).norm());
    }
    if (!(out.residual < tol))
        throw std::invalid_argument("canonicalizeBellBasis: reconstruction residual " + std::to_string(out.residual) +
                                    " exceeds tolerance");
    return out;
}

} // namespace mebasis
