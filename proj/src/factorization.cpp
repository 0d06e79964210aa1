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
#include "mebasis/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mebasis/entangled.hpp"

namespace mebasis {

int factorDimension(const ComplexMatrix &u) {
    if (u.rows() != u.cols())
        throw std::invalid_argument("operator on C^d (x) C^d must be square");
    const int n = static_cast<int>(u.rows());
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (d < 1 || d * d != n)
        throw std::invalid_argument("operator size " + std::to_string(n) + " is not a perfect square");
    return d;
}

ComplexMatrix reshuffle(const ComplexMatrix &u, int d) {
    if (u.rows() != d * d || u.cols() != d * d)
        throw std::invalid_argument("reshuffle: operator must be d^2 x d^2");
    ComplexMatrix r(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    r(i * d + j, k * d + l) = u(i * d + k, j * d + l);
    return r;
}

OperatorSchmidt operatorSchmidt(const ComplexMatrix &u) {
    const int d = factorDimension(u);
    const Svd dec = svd(reshuffle(u, d));
    OperatorSchmidt out;
    out.coefficients = dec.s;
    const int n = d * d;
    out.left.reserve(n);
    out.right.reserve(n);
    for (int m = 0; m < n; ++m) {
        ComplexMatrix a(d, d), b(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                a(i, j) = dec.u(i * d + j, m);
                b(i, j) = std::conj(dec.v(i * d + j, m));
            }
        out.left.push_back(std::move(a));
        out.right.push_back(std::move(b));
    }
    return out;
}

ComplexMatrix flipOperator(int d) {
    if (d < 1)
        throw std::invalid_argument("flipOperator: dimension must be positive");
    ComplexMatrix f = ComplexMatrix::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            f(b * d + a, a * d + b) = 1.0;
    return f;
}

const char *toString(FactorKind kind) {
    switch (kind) {
    case FactorKind::Local:
        return "local";
    case FactorKind::LocalFlip:
        return "localFlip";
    case FactorKind::Neither:
        break;
    }
    return "neither";
}

namespace {

struct RankOne {
    bool product = false;
    ComplexMatrix u1, u2;
    double residual = 0.0;
};

RankOne rankOneFactor(const ComplexMatrix &u, const OperatorSchmidt &os, int d, double tol) {
    const double s1 = os.coefficients(0);
    const double s2 = os.coefficients.size() > 1 ? os.coefficients(1) : 0.0;
    const double root = std::sqrt(static_cast<double>(d));

    RankOne out;
    out.u1 = root * os.left[0];
    out.u2 = (s1 / root) * os.right[0];
    for (Eigen::Index k = 0; k < out.u1.size(); ++k) {
        const Complex x = out.u1(k / d, k % d); // row-major scan
        if (std::abs(x) > tol) {
            const Complex phase = x / std::abs(x);
            out.u1 /= phase;
            out.u2 *= phase;
            break;
        }
    }
    out.residual = (u - tensor(out.u1, out.u2)).norm();
    out.product = s2 < tol * s1 && out.residual < tol;
    return out;
}

} // namespace

FactorizationResult factorLocal(const ComplexMatrix &u, double tol) {
    const int d = factorDimension(u);
    const double unitarity = unitarityResidual(u);
    if (!(unitarity < std::max(tol, kDefaultTolerance)))
        throw std::invalid_argument("factorLocal: input is not unitary (residual " + std::to_string(unitarity) + ")");

    FactorizationResult result;
    const OperatorSchmidt os = operatorSchmidt(u);
    result.schmidtCoefficients = os.coefficients;
    const RankOne direct = rankOneFactor(u, os, d, tol);
    if (direct.product) {
        result.kind = FactorKind::Local;
        result.factors = std::make_pair(direct.u1, direct.u2);
        result.residual = direct.residual;
        return result;
    }
    const ComplexMatrix f = flipOperator(d);
    // U = (U1 (x) U2) F  iff  U F = U1 (x) U2.
    const ComplexMatrix uf = u * f;
    const RankOne flipped = rankOneFactor(uf, operatorSchmidt(uf), d, tol);
    if (flipped.product) {
        result.kind = FactorKind::LocalFlip;
        result.factors = std::make_pair(flipped.u1, flipped.u2);
        result.residual = (u - tensor(flipped.u1, flipped.u2) * f).norm();
        return result;
    }
    result.kind = FactorKind::Neither;
    result.residual = std::min(direct.residual, flipped.residual);
    return result;
}

CheckReport checkPreservesMaxEntangled(const ComplexMatrix &u, int trials, std::uint64_t seed, double tol) {
    const int d = factorDimension(u);
    CheckReport report("preserves-max-entangled", tol);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const ComplexMatrix v = haarUnitary(d, rng);
        const StateVector image = applyOperator(u, vectorFromOperator(v, d));
        const double violation = unitarityResidual(operatorFromVector(image));
        report.record(t, violation, "V", {v});
    }
    report.setTrials(trials);
    return report;
}

} // namespace mebasis
