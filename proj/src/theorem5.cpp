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
#include "mebasis/theorem5.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "mebasis/factorization.hpp"

namespace mebasis {

namespace {

ComplexMatrix frameOf(const EntangledBasis &basis) {
    const int n = basis.dim * basis.dim;
    ComplexMatrix p(n, n);
    for (int a = 0; a < n; ++a)
        p.col(a) = basis.vectors[a].amplitudes();
    return p;
}

CheckReport realLocalMatrixElements(const EntangledBasis &basis, int trials, std::mt19937_64 &rng, double tol) {
    CheckReport report("theorem5-condition-2", tol);
    const int d = basis.dim;
    const ComplexMatrix p = frameOf(basis);
    for (int t = 0; t < trials; ++t) {
        const ComplexMatrix u1 = haarSpecialUnitary(d, rng);
        const ComplexMatrix u2 = haarSpecialUnitary(d, rng);
        const ComplexMatrix elements = p.adjoint() * tensor(u1, u2) * p;
        report.record(t, elements.imag().cwiseAbs().maxCoeff(), "U1,U2", {u1, u2});
    }
    return report;
}

CheckReport realOrthogonalFactorizes(const EntangledBasis &basis, int trials, std::mt19937_64 &rng, double tol) {
    const int n = basis.dim * basis.dim;
    const ComplexMatrix p = frameOf(basis);
    std::vector<std::pair<int, ComplexMatrix>> nonFactorizable;
    for (int t = 0; t < trials; ++t) {
        RealMatrix o = haarOrthogonal(n, rng);
        if (o.determinant() < 0.0)
            o.col(0) = -o.col(0);
        const ComplexMatrix u = p * o.cast<Complex>() * p.adjoint();
        if (factorLocal(u).kind == FactorKind::Neither)
            nonFactorizable.emplace_back(t, u);
    }
    // The violation is the failure fraction; each failing sample is a witness.
    CheckReport report("theorem5-condition-3", tol);
    const double fraction = trials > 0 ? static_cast<double>(nonFactorizable.size()) / trials : 0.0;
    if (nonFactorizable.empty())
        report.record(-1, fraction, "non-factorizable fraction");
    for (auto &[t, u] : nonFactorizable)
        report.record(t, fraction, "U", {std::move(u)});
    return report;
}

CheckReport realCoefficientsOfEntangled(const EntangledBasis &basis, int trials, std::mt19937_64 &rng,
                                        double tol) {
    CheckReport report("theorem5-condition-4", tol);
    const int d = basis.dim;
    const int n = d * d;
    const ComplexMatrix p = frameOf(basis);
    for (int t = 0; t < trials; ++t) {
        const ComplexMatrix v = haarUnitary(d, rng);
        const ComplexVector phi = tensor(v, ComplexMatrix::Identity(d, d)) * omega(d).amplitudes();
        const ComplexVector c = p.adjoint() * phi;
        double worst = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                worst = std::max(worst, std::abs((c(a) * std::conj(c(b))).imag()));
        report.record(t, worst, "V", {v});
    }
    return report;
}

CheckReport realCombinationsUnitary(const UnitaryBasis &xs, int trials, std::mt19937_64 &rng, double tol) {
    CheckReport report("theorem5-condition-5", tol);
    const int d = xs.dim;
    const int n = d * d;
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int t = 0; t < trials; ++t) {
        RealVector a(n);
        for (int k = 0; k < n; ++k)
            a(k) = normal(rng);
        a.normalize();
        ComplexMatrix sum = ComplexMatrix::Zero(d, d);
        for (int k = 0; k < n; ++k)
            sum += a(k) * xs.ops[k];
        const ComplexMatrix coefficients = a.cast<Complex>();
        report.record(t, unitarityResidual(sum), "a", {coefficients});
    }
    return report;
}

CheckReport anticommutators(const UnitaryBasis &xs, double tol) {
    CheckReport report("theorem5-condition-6", tol);
    const int d = xs.dim;
    const int n = d * d;
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    int pairIndex = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b, ++pairIndex) {
            const ComplexMatrix ac = xs.ops[a].adjoint() * xs.ops[b] + xs.ops[b].adjoint() * xs.ops[a];
            const double violation = (ac - (a == b ? 2.0 : 0.0) * id).norm();
            report.record(pairIndex, violation, "pair (" + std::to_string(a) + "," + std::to_string(b) + ")",
                          {xs.ops[a], xs.ops[b]});
        }
    return report;
}

} // namespace

CheckReport checkTheorem5(const EntangledBasis &basis, int condition, int trials, std::uint64_t seed, double tol) {
    if (condition < 2 || condition > 6)
        throw std::invalid_argument("checkTheorem5: unknown condition " + std::to_string(condition) +
                                    " (expected 2..6)");
    if (trials < 0)
        throw std::invalid_argument("checkTheorem5: trials must be nonnegative");
    const UnitaryBasis xs = toUnitaryBasis(basis);
    verifyUnitaryBasis(xs); // shape checks; throws on a wrong count

    std::mt19937_64 rng(seed);
    CheckReport report;
    switch (condition) {
    case 2:
        report = realLocalMatrixElements(basis, trials, rng, tol);
        break;
    case 3:
        report = realOrthogonalFactorizes(basis, trials, rng, tol);
        break;
    case 4:
        report = realCoefficientsOfEntangled(basis, trials, rng, tol);
        break;
    case 5:
        report = realCombinationsUnitary(xs, trials, rng, tol);
        break;
    default:
        report = anticommutators(xs, tol);
        trials = 1; // exact over all pairs, no sampling
        break;
    }
    report.setTrials(trials);
    return report;
}

} // namespace mebasis
