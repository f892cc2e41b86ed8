// Copyright 2026 The anyonc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANYONC_LINALG_HPP
#define ANYONC_LINALG_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace anyonc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

// Thin, checked layer over Eigen for the dim-2/4/6 matrices the compiler
// manipulates. The runtime dimension guards exist because a silent 4-vs-6
// mix-up in the two-qubit code paths is the most likely bug class here.

template <typename DerivedA, typename DerivedB>
Matrix mat_mul(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("dimension mismatch");
    }
    return a * b;
}

template <typename Derived>
Matrix adjoint(const Eigen::MatrixBase<Derived>& a) {
    return a.adjoint();
}

template <typename Derived>
Complex trace(const Eigen::MatrixBase<Derived>& a) {
    return a.trace();
}

// Kronecker product with the row-major block convention
// out[(i*bd + k), (j*bd + l)] = a[i,j] * b[k,l].
template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    const Eigen::Index n = a.rows() * b.rows();
    const Eigen::Index m = a.cols() * b.cols();
    if ((n != 4 && n != 6) || n != m) {
        throw std::invalid_argument("unsupported result dimension");
    }
    Matrix out(n, m);
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

template <typename DerivedA, typename DerivedB>
Matrix direct_sum(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    const Eigen::Index n = a.rows() + b.rows();
    if ((n != 4 && n != 6) || n != a.cols() + b.cols()) {
        throw std::invalid_argument("unsupported result dimension");
    }
    Matrix out = Matrix::Zero(n, n);
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

// Determinant via LU with partial pivoting.
Complex determinant(const Matrix& a);

// Singular values in descending order, computed from the Hermitian
// eigenproblem of a^dagger a and clamped at zero.
std::vector<double> singular_values(const Matrix& a);

double frobenius_distance(const Matrix& a, const Matrix& b);

}  // namespace anyonc

#endif
