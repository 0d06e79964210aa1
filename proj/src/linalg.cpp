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
#include "mebasis/linalg.hpp"

#include <cmath>

namespace mebasis {

StateVector::StateVector(int dimLeft, int dimRight, ComplexVector amplitudes)
    : dimLeft_(dimLeft), dimRight_(dimRight), amplitudes_(std::move(amplitudes)) {
    if (dimLeft < 1 || dimRight < 1)
        throw std::invalid_argument("StateVector: factor dimensions must be positive");
    if (amplitudes_.size() != static_cast<Eigen::Index>(dimLeft) * dimRight)
        throw std::invalid_argument("StateVector: amplitude length must equal dimLeft * dimRight");
}

ComplexMatrix StateVector::asMatrix() const {
    ComplexMatrix m(dimLeft_, dimRight_);
    for (int a = 0; a < dimLeft_; ++a)
        for (int b = 0; b < dimRight_; ++b)
            m(a, b) = amplitudes_(a * dimRight_ + b);
    return m;
}

double normOf(const StateVector &v) { return v.amplitudes().norm(); }

Complex inner(const StateVector &a, const StateVector &b) {
    if (a.dimLeft() != b.dimLeft() || a.dimRight() != b.dimRight())
        throw std::invalid_argument("inner: factor dimensions differ");
    return a.amplitudes().dot(b.amplitudes()); // conjugate-linear in a
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    const Eigen::Index rb = b.rows(), cb = b.cols();
    ComplexMatrix out(a.rows() * rb, a.cols() * cb);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

ComplexMatrix tensorPower(const ComplexMatrix &a, int n) {
    if (n < 1)
        throw std::invalid_argument("tensorPower: exponent must be positive");
    ComplexMatrix out = a;
    for (int k = 1; k < n; ++k)
        out = tensor(out, a);
    return out;
}

StateVector applyOperator(const ComplexMatrix &op, const StateVector &v) {
    if (op.rows() != op.cols() || op.cols() != v.amplitudes().size())
        throw std::invalid_argument("applyOperator: operator does not match the state dimension");
    return StateVector(v.dimLeft(), v.dimRight(), op * v.amplitudes());
}

Svd svd(const ComplexMatrix &a) {
    Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (solver.info() != Eigen::Success)
        throw NumericalError("svd: decomposition did not converge");
    // JacobiSVD already sorts singular values in decreasing order.
    return Svd{solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

SchmidtDecomposition schmidt(const StateVector &v) {
    if (normOf(v) == 0.0)
        throw std::invalid_argument("schmidt: degenerate input");
    Svd dec = svd(v.asMatrix());
    const Eigen::Index r = dec.s.size();
    // M = U S V^dagger, so v = sum_i s_i u_i (x) conj(v_i).
    return SchmidtDecomposition{dec.s, dec.u.leftCols(r), dec.v.leftCols(r).conjugate()};
}

ComplexMatrix gaussianMatrix(int rows, int cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    // Fill row-major so the draw order matches the row-major file convention.
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    return m;
}

ComplexMatrix haarUnitary(int d, std::mt19937_64 &rng) {
    if (d < 1)
        throw std::invalid_argument("haarUnitary: dimension must be positive");
    const ComplexMatrix z = gaussianMatrix(d, d, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix &r = qr.matrixQR();
    for (int k = 0; k < d; ++k) {
        const Complex rkk = r(k, k);
        const double mod = std::abs(rkk);
        q.col(k) *= mod > 0.0 ? rkk / mod : Complex(1.0);
    }
    return q;
}

ComplexMatrix haarUnitary(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return haarUnitary(d, rng);
}

ComplexMatrix haarSpecialUnitary(int d, std::mt19937_64 &rng) {
    ComplexMatrix u = haarUnitary(d, rng);
    const Complex det = u.determinant();
    const Complex root = std::polar(1.0, std::arg(det) / d);
    return u / root;
}

ComplexMatrix haarSpecialUnitary(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return haarSpecialUnitary(d, rng);
}

RealMatrix haarOrthogonal(int d, std::mt19937_64 &rng) {
    if (d < 1)
        throw std::invalid_argument("haarOrthogonal: dimension must be positive");
    std::normal_distribution<double> normal(0.0, 1.0);
    RealMatrix z(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            z(i, j) = normal(rng);
    Eigen::HouseholderQR<RealMatrix> qr(z);
    RealMatrix q = qr.householderQ();
    for (int k = 0; k < d; ++k)
        if (qr.matrixQR()(k, k) < 0.0)
            q.col(k) = -q.col(k);
    return q;
}

StateVector randomUnitState(int dimLeft, int dimRight, std::mt19937_64 &rng) {
    ComplexVector amps = gaussianMatrix(dimLeft * dimRight, 1, rng).col(0);
    amps.normalize();
    return StateVector(dimLeft, dimRight, std::move(amps));
}

double unitarityResidual(const ComplexMatrix &u) {
    if (u.rows() != u.cols())
        throw std::invalid_argument("unitarityResidual: matrix is not square");
    return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

bool isUnitary(const ComplexMatrix &u, double tol) {
    return u.rows() == u.cols() && unitarityResidual(u) < tol;
}

double maxAbs(const ComplexMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

} // namespace mebasis
