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
#pragma once

#include <cstdint>

#include "mebasis/check_report.hpp"
#include "mebasis/linalg.hpp"

namespace mebasis {

/// Conjugate-linear operator v -> A conj(v), conjugation taken in the
/// computational basis.
class AntilinearOp {
  public:
    explicit AntilinearOp(ComplexMatrix a);

    const ComplexMatrix &matrix() const { return a_; }
    int dim() const { return static_cast<int>(a_.rows()); }

    ComplexVector apply(const ComplexVector &v) const;
    StateVector apply(const StateVector &v) const;

    /// (this o other) is linear with matrix A1 conj(A2).
    ComplexMatrix composeLinear(const AntilinearOp &other) const;
    ComplexMatrix square() const { return composeLinear(*this); }

    /// U Theta U^dagger, which has matrix U A U^T.
    AntilinearOp conjugatedBy(const ComplexMatrix &u) const;

    bool isAntiunitary(double tol = kDefaultTolerance) const { return isUnitary(a_, tol); }

  private:
    ComplexMatrix a_;
};

/// Theta_1 (x) Theta_2, defined on product vectors and extended antilinearly.
AntilinearOp tensor(const AntilinearOp &a, const AntilinearOp &b);

/// Theta(a, b) = lambda (conj b, -conj a) on C^2.
AntilinearOp theta2(Complex lambda = 1.0);

/// theta2(1) tensored n times, acting on (C^2)^{(x) n}.
AntilinearOp thetaN(int n);

/// Standard complex Gaussian matrix scaled to Frobenius norm sqrt(d).
AntilinearOp randomAntilinear(int d, std::mt19937_64 &rng);

/// Which phase omega(U) the covariance test U Theta U^dagger = omega Theta
/// is measured against.
enum class PhaseRule {
    Determinant, // omega(U) = det U
    BestFit,     // the unimodular omega minimising the residual
};

/// || U A U^T - omega(U) A ||_F.
double universalityResidual(const AntilinearOp &theta, const ComplexMatrix &u,
                            PhaseRule rule = PhaseRule::Determinant);

/// Samples Haar unitaries U and records the universality residual of each.
CheckReport checkUniversality(const AntilinearOp &theta, int trials, std::uint64_t seed,
                              double tol = kDefaultTolerance, PhaseRule rule = PhaseRule::Determinant);

} // namespace mebasis
