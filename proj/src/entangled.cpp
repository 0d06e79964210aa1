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
#include "mebasis/entangled.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mebasis {

namespace {

int squareFactor(const StateVector &v, const char *who) {
    if (v.dimLeft() != v.dimRight())
        throw std::invalid_argument(std::string(who) + ": factor dimensions must be equal");
    return v.dimLeft();
}

void requireUnit(const StateVector &v, double tol, const char *who) {
    const double dev = std::abs(normOf(v) - 1.0);
    if (dev > tol)
        throw std::invalid_argument(std::string(who) + ": input is not a unit vector (norm deviation " +
                                    std::to_string(dev) + ")");
}

} // namespace

StateVector omega(int d) {
    if (d < 1)
        throw std::invalid_argument("omega: dimension must be positive");
    ComplexVector amps = ComplexVector::Zero(d * d);
    const double c = 1.0 / std::sqrt(static_cast<double>(d));
    for (int a = 0; a < d; ++a)
        amps(a * d + a) = c;
    return StateVector(d, d, std::move(amps));
}

StateVector vectorFromOperator(const ComplexMatrix &x, int d) {
    if (d < 1 || x.rows() != d || x.cols() != d)
        throw std::invalid_argument("vectorFromOperator: operator must be " + std::to_string(d) + "x" +
                                    std::to_string(d));
    const double c = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexVector amps(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            amps(i * d + j) = x(i, j) * c;
    return StateVector(d, d, std::move(amps));
}

StateVector vectorFromOperator(const ComplexMatrix &x) {
    return vectorFromOperator(x, static_cast<int>(x.rows()));
}

ComplexMatrix operatorFromVector(const StateVector &v) {
    const int d = squareFactor(v, "operatorFromVector");
    return std::sqrt(static_cast<double>(d)) * v.asMatrix();
}

ComplexMatrix reducedDensity(const StateVector &v, Side side, double tol) {
    requireUnit(v, tol, "reducedDensity");
    const int dl = v.dimLeft(), dr = v.dimRight();
    if (side == Side::Left) {
        ComplexMatrix rho = ComplexMatrix::Zero(dl, dl);
        for (int a = 0; a < dl; ++a)
            for (int ap = 0; ap < dl; ++ap)
                for (int b = 0; b < dr; ++b)
                    rho(a, ap) += v(a, b) * std::conj(v(ap, b));
        return rho;
    }
    ComplexMatrix rho = ComplexMatrix::Zero(dr, dr);
    for (int b = 0; b < dr; ++b)
        for (int bp = 0; bp < dr; ++bp)
            for (int a = 0; a < dl; ++a)
                rho(b, bp) += v(a, b) * std::conj(v(a, bp));
    return rho;
}

MaxEntangledReport isMaxEntangled(const StateVector &v, double tol) {
    squareFactor(v, "isMaxEntangled");
    requireUnit(v, tol, "isMaxEntangled");
    const ComplexMatrix x = operatorFromVector(v);
    MaxEntangledReport report;
    report.residual = unitarityResidual(x);
    report.schmidtCoefficients = schmidt(v).coefficients;
    report.ok = report.residual < tol;
    return report;
}

EntangledBasis toEntangledBasis(const UnitaryBasis &basis) {
    EntangledBasis out{basis.dim, {}};
    out.vectors.reserve(basis.ops.size());
    for (const auto &x : basis.ops)
        out.vectors.push_back(vectorFromOperator(x, basis.dim));
    return out;
}

UnitaryBasis toUnitaryBasis(const EntangledBasis &basis) {
    UnitaryBasis out{basis.dim, {}};
    out.ops.reserve(basis.vectors.size());
    for (const auto &v : basis.vectors) {
        if (v.dimLeft() != basis.dim || v.dimRight() != basis.dim)
            throw std::invalid_argument("toUnitaryBasis: vector dimensions do not match the basis");
        out.ops.push_back(operatorFromVector(v));
    }
    return out;
}

BasisReport verifyUnitaryBasis(const UnitaryBasis &basis, double tol) {
    const int d = basis.dim;
    if (d < 1)
        throw std::invalid_argument("verifyUnitaryBasis: dimension must be positive");
    const int n = d * d;
    if (static_cast<int>(basis.ops.size()) != n)
        throw std::invalid_argument("verifyUnitaryBasis: expected " + std::to_string(n) + " operators, got " +
                                    std::to_string(basis.ops.size()));
    for (const auto &x : basis.ops)
        if (x.rows() != d || x.cols() != d)
            throw std::invalid_argument("verifyUnitaryBasis: every operator must be square of size dim");

    BasisReport report;
    for (int a = 0; a < n; ++a) {
        const double r = unitarityResidual(basis.ops[a]);
        if (r > report.maxUnitarity || report.worstUnitary < 0) {
            report.maxUnitarity = r;
            report.worstUnitary = a;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            const Complex g = (basis.ops[a].adjoint() * basis.ops[b]).trace() / static_cast<double>(d);
            const double dev = std::abs(g - (a == b ? 1.0 : 0.0));
            if (dev > report.maxOrthonormality || report.worstPair.first < 0) {
                report.maxOrthonormality = dev;
                report.worstPair = {a, b};
            }
        }
    report.ok = report.maxUnitarity < tol && report.maxOrthonormality < tol;
    return report;
}

EntangledBasisReport verifyEntangledBasis(const EntangledBasis &basis, double tol) {
    const int n = static_cast<int>(basis.vectors.size());
    if (basis.dim < 1 || n != basis.dim * basis.dim)
        throw std::invalid_argument("verifyEntangledBasis: expected dim^2 vectors");
    EntangledBasisReport report;
    for (int a = 0; a < n; ++a) {
        const StateVector &v = basis.vectors[a];
        if (v.dimLeft() != basis.dim || v.dimRight() != basis.dim)
            throw std::invalid_argument("verifyEntangledBasis: vector dimensions do not match the basis");
        for (int b = a; b < n; ++b) {
            const double dev = std::abs(inner(v, basis.vectors[b]) - (a == b ? 1.0 : 0.0));
            report.maxGramDeviation = std::max(report.maxGramDeviation, dev);
        }
        report.maxEntanglementResidual =
            std::max(report.maxEntanglementResidual, unitarityResidual(operatorFromVector(v)));
    }
    report.ok = report.maxGramDeviation < tol && report.maxEntanglementResidual < tol;
    return report;
}

UnitaryBasis shiftMultiplyBasis(std::span<const HadamardMatrix> hadamards, const LatinSquare &tau) {
    const int d = tau.order();
    if (static_cast<int>(hadamards.size()) != d)
        throw std::invalid_argument("shiftMultiplyBasis: need exactly d = " + std::to_string(d) +
                                    " Hadamard matrices, got " + std::to_string(hadamards.size()));
    for (const auto &h : hadamards)
        if (h.order() != d)
            throw std::invalid_argument("shiftMultiplyBasis: Hadamard order " + std::to_string(h.order()) +
                                        " does not match Latin square order " + std::to_string(d));

    UnitaryBasis basis{d, {}};
    basis.ops.reserve(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ComplexMatrix u = ComplexMatrix::Zero(d, d);
            for (int k = 0; k < d; ++k)
                u(tau(k, j), k) = hadamards[j](i, k);
            basis.ops.push_back(std::move(u));
        }

    const BasisReport report = verifyUnitaryBasis(basis);
    if (!report.ok)
        throw BasisVerificationError("shiftMultiplyBasis: verification failed at pair (" +
                                         std::to_string(report.worstPair.first) + "," +
                                         std::to_string(report.worstPair.second) + ")",
                                     report.worstPair);
    return basis;
}

UnitaryBasis fourierBasis(int d) {
    const std::vector<HadamardMatrix> hs(d, fourierHadamard(d));
    return shiftMultiplyBasis(hs, cyclicLatinSquare(d));
}

} // namespace mebasis
