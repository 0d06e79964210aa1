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

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mebasis {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Absolute tolerance used by every checker unless overridden.
inline constexpr double kDefaultTolerance = 1e-10;

inline constexpr Complex kI{0.0, 1.0};

/// Raised when a numerical routine fails to produce a result it promised,
/// e.g. an SVD that does not converge.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Vector in C^{d1} (x) C^{d2}. Amplitude (a, b) lives at index a * d2 + b.
class StateVector {
  public:
    StateVector(int dimLeft, int dimRight, ComplexVector amplitudes);

    int dimLeft() const { return dimLeft_; }
    int dimRight() const { return dimRight_; }
    const ComplexVector &amplitudes() const { return amplitudes_; }
    Complex operator()(int a, int b) const { return amplitudes_(a * dimRight_ + b); }

    /// Amplitudes reshaped to a dimLeft x dimRight matrix.
    ComplexMatrix asMatrix() const;

  private:
    int dimLeft_;
    int dimRight_;
    ComplexVector amplitudes_;
};

double normOf(const StateVector &v);
Complex inner(const StateVector &a, const StateVector &b);

/// Kronecker product, (A (x) B)[i*rB + k, j*cB + l] = A[i,j] * B[k,l].
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix tensorPower(const ComplexMatrix &a, int n);

/// Applies a linear operator on C^{d1 d2} to a state, keeping the split.
StateVector applyOperator(const ComplexMatrix &op, const StateVector &v);

struct Svd {
    ComplexMatrix u;
    RealVector s; // nonincreasing
    ComplexMatrix v;
};

/// Full SVD, A = U diag(s) V^dagger. Throws NumericalError on failure.
Svd svd(const ComplexMatrix &a);

struct SchmidtDecomposition {
    RealVector coefficients;
    // Columns are the Schmidt vectors; there are coefficients.size() of each.
    ComplexMatrix leftBasis;
    ComplexMatrix rightBasis;
};

/// Throws std::invalid_argument("degenerate input") for the zero vector.
SchmidtDecomposition schmidt(const StateVector &v);

ComplexMatrix haarUnitary(int d, std::mt19937_64 &rng);
ComplexMatrix haarUnitary(int d, std::uint64_t seed);
ComplexMatrix haarSpecialUnitary(int d, std::mt19937_64 &rng);
ComplexMatrix haarSpecialUnitary(int d, std::uint64_t seed);
/// Haar-distributed real orthogonal matrix, det = +/-1 with equal weight.
RealMatrix haarOrthogonal(int d, std::mt19937_64 &rng);

/// Entrywise standard complex Gaussian (real and imaginary parts N(0,1)).
ComplexMatrix gaussianMatrix(int rows, int cols, std::mt19937_64 &rng);
/// Uniformly distributed unit vector in C^{d1 d2}.
StateVector randomUnitState(int dimLeft, int dimRight, std::mt19937_64 &rng);

double unitarityResidual(const ComplexMatrix &u);
bool isUnitary(const ComplexMatrix &u, double tol = kDefaultTolerance);
double maxAbs(const ComplexMatrix &m);

} // namespace mebasis
