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

#include "anyonc/metrics.hpp"

#include <cmath>
#include <numbers>

namespace anyonc {

namespace {

void require_dim(const Matrix& a, Eigen::Index n) {
    if (a.rows() != n || a.cols() != n) {
        throw std::invalid_argument("dimension mismatch");
    }
}

}  // namespace

const Matrix& bell_transform() {
    static const Matrix q = [] {
        const Complex i(0.0, 1.0);
        Matrix m(4, 4);
        m << 1, 0, 0, i,
            0, i, 1, 0,
            0, i, -1, 0,
            1, 0, 0, -i;
        return Matrix(m / std::sqrt(2.0));
    }();
    return q;
}

double phase_distance(const Matrix& u0, const Matrix& u) {
    require_dim(u0, 2);
    require_dim(u, 2);
    const double overlap = std::abs((u0 * u.adjoint()).trace());
    return std::sqrt(std::max(0.0, 1.0 - overlap / 2.0));
}

Matrix bell_conjugate(const Matrix& u) {
    require_dim(u, 4);
    const Matrix& q = bell_transform();
    return q.adjoint() * u * q;
}

LocalInvariants makhlin_invariants(const Matrix& u) {
    require_dim(u, 4);
    const Complex det = determinant(u);
    if (std::abs(det) <= 1e-12) {
        throw std::runtime_error("invariants undefined");
    }
    const Matrix ub = bell_conjugate(u);
    const Matrix m = ub.transpose() * ub;
    const Complex tr2 = m.trace() * m.trace();
    const Complex g12 = tr2 / (16.0 * det);
    const Complex g3 = (tr2 - (m * m).trace()) / (4.0 * det);
    const bool unitary = (u.adjoint() * u - Matrix::Identity(4, 4)).norm() < 1e-9;
    if (unitary && std::abs(g3.imag()) >= 1e-9) {
        throw std::logic_error("nonreal third invariant for unitary input");
    }
    return {g12.real(), g12.imag(), g3.real()};
}

double cnot_class_distance(const Matrix& a) {
    const LocalInvariants g = makhlin_invariants(a);
    const double d1 = g.g1;
    const double d2 = g.g2;
    const double d3 = g.g3 - 1.0;
    return d1 * d1 + d2 * d2 + d3 * d3;
}

double unitarity_measure(const Matrix& a) {
    require_dim(a, 4);
    const Matrix x = a.adjoint() * a - Matrix::Identity(4, 4);
    double sum = 0.0;
    for (double s : singular_values(x)) {
        sum += s;
    }
    return sum;
}

std::pair<Matrix, Matrix> computational_block(const Matrix& b) {
    require_dim(b, 6);
    return {b.topLeftCorner(4, 4), b.bottomRightCorner(2, 2)};
}

Matrix gate_h() {
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    return h / std::sqrt(2.0);
}

Matrix gate_t() {
    Matrix t = Matrix::Identity(2, 2);
    t(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
    return t;
}

Matrix gate_cnot() {
    Matrix c = Matrix::Zero(4, 4);
    c(0, 0) = 1;
    c(1, 1) = 1;
    c(2, 3) = 1;
    c(3, 2) = 1;
    return c;
}

Matrix gate_swap() {
    Matrix s = Matrix::Zero(4, 4);
    s(0, 0) = 1;
    s(1, 2) = 1;
    s(2, 1) = 1;
    s(3, 3) = 1;
    return s;
}

Matrix gate_cz() {
    Matrix c = Matrix::Identity(4, 4);
    c(3, 3) = -1;
    return c;
}

}  // namespace anyonc
