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
#include "mebasis/antilinear.hpp"

#include <cmath>

namespace mebasis {

AntilinearOp::AntilinearOp(ComplexMatrix a) : a_(std::move(a)) {
    if (a_.rows() == 0 || a_.rows() != a_.cols())
        throw std::invalid_argument("AntilinearOp: matrix must be square and nonempty");
}

ComplexVector AntilinearOp::apply(const ComplexVector &v) const {
    if (v.size() != a_.cols())
        throw std::invalid_argument("AntilinearOp::apply: dimension mismatch");
    return a_ * v.conjugate();
}

StateVector AntilinearOp::apply(const StateVector &v) const {
    return StateVector(v.dimLeft(), v.dimRight(), apply(v.amplitudes()));
}

ComplexMatrix AntilinearOp::composeLinear(const AntilinearOp &other) const {
    if (other.dim() != dim())
        throw std::invalid_argument("AntilinearOp::composeLinear: dimension mismatch");
    return a_ * other.a_.conjugate();
}

AntilinearOp AntilinearOp::conjugatedBy(const ComplexMatrix &u) const {
    if (u.rows() != a_.rows() || u.cols() != a_.cols())
        throw std::invalid_argument("AntilinearOp::conjugatedBy: dimension mismatch");
    return AntilinearOp(u * a_ * u.transpose());
}

AntilinearOp tensor(const AntilinearOp &a, const AntilinearOp &b) {
    return AntilinearOp(tensor(a.matrix(), b.matrix()));
}

AntilinearOp theta2(Complex lambda) {
    ComplexMatrix a(2, 2);
    a << 0.0, 1.0, -1.0, 0.0;
    return AntilinearOp(lambda * a);
}

AntilinearOp thetaN(int n) {
    if (n < 1)
        throw std::invalid_argument("thetaN: number of factors must be positive");
    return AntilinearOp(tensorPower(theta2().matrix(), n));
}

AntilinearOp randomAntilinear(int d, std::mt19937_64 &rng) {
    ComplexMatrix a = gaussianMatrix(d, d, rng);
    a *= std::sqrt(static_cast<double>(d)) / a.norm();
    return AntilinearOp(std::move(a));
}

double universalityResidual(const AntilinearOp &theta, const ComplexMatrix &u, PhaseRule rule) {
    const ComplexMatrix &a = theta.matrix();
    const ComplexMatrix b = theta.conjugatedBy(u).matrix();
    Complex phase;
    if (rule == PhaseRule::Determinant) {
        phase = u.determinant();
    } else {
        const Complex overlap = (a.adjoint() * b).trace();
        phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
    }
    return (b - phase * a).norm();
}

CheckReport checkUniversality(const AntilinearOp &theta, int trials, std::uint64_t seed, double tol,
                              PhaseRule rule) {
    CheckReport report(rule == PhaseRule::Determinant ? "universality" : "universality-best-phase", tol);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const ComplexMatrix u = haarUnitary(theta.dim(), rng);
        report.record(t, universalityResidual(theta, u, rule), "U", {u});
    }
    report.setTrials(trials);
    return report;
}

} // namespace mebasis
