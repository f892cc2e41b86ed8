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

#include "anyonc/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace anyonc {

Complex determinant(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("dimension mismatch");
    }
    return Eigen::PartialPivLU<Matrix>(a).determinant();
}

std::vector<double> singular_values(const Matrix& a) {
    Matrix gram = a.adjoint() * a;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(gram);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver did not converge");
    }
    std::vector<double> values;
    values.reserve(static_cast<size_t>(gram.rows()));
    for (Eigen::Index i = 0; i < gram.rows(); i++) {
        values.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()[i])));
    }
    std::sort(values.begin(), values.end(), std::greater<double>());
    return values;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("dimension mismatch");
    }
    return (a - b).norm();
}

}  // namespace anyonc
