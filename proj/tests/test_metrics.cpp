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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "anyonc/anyon_model.hpp"
#include "anyonc/linalg.hpp"
#include "anyonc/metrics.hpp"
#include "anyonc/rng.hpp"

using namespace anyonc;

namespace {

Matrix random_su2(SplitMix64& rng) {
    const Complex a(2.0 * rng.u01() - 1.0, 2.0 * rng.u01() - 1.0);
    const Complex b(2.0 * rng.u01() - 1.0, 2.0 * rng.u01() - 1.0);
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    Matrix u(2, 2);
    u << a / n, b / n, -std::conj(b) / n, std::conj(a) / n;
    return u;
}

// Invariants recomputed from the definition, without going through the
// library's bell_conjugate/trace/determinant helpers.
LocalInvariants oracle_invariants(const Matrix& u) {
    const Complex i(0.0, 1.0);
    Matrix q(4, 4);
    q << 1, 0, 0, i,
        0, i, 1, 0,
        0, i, -1, 0,
        1, 0, 0, -i;
    q /= std::sqrt(2.0);
    const Matrix ub = q.adjoint() * u * q;
    const Matrix m = ub.transpose() * ub;
    Complex tr(0.0, 0.0);
    Complex tr_m2(0.0, 0.0);
    for (Eigen::Index r = 0; r < 4; r++) {
        tr += m(r, r);
        for (Eigen::Index c = 0; c < 4; c++) {
            tr_m2 += m(r, c) * m(c, r);
        }
    }
    const Complex det = u.determinant();
    const Complex g12 = tr * tr / (16.0 * det);
    const Complex g3 = (tr * tr - tr_m2) / (4.0 * det);
    return {g12.real(), g12.imag(), g3.real()};
}

bool invariants_near(const LocalInvariants& a, double g1, double g2, double g3,
                     double tol) {
    return std::abs(a.g1 - g1) <= tol && std::abs(a.g2 - g2) <= tol &&
           std::abs(a.g3 - g3) <= tol;
}

Matrix pauli_x() {
    Matrix x = Matrix::Zero(2, 2);
    x(0, 1) = 1;
    x(1, 0) = 1;
    return x;
}

Matrix pauli_z() {
    Matrix z = Matrix::Identity(2, 2);
    z(1, 1) = -1;
    return z;
}

}  // namespace

TEST_CASE("phase distance basics") {
    const Matrix h = gate_h();
    // The metric is a square root of a cancellation residue, so its numerical
    // floor near zero is sqrt(ulp) ~ 1.5e-8, not 0.
    CHECK(phase_distance(h, h) < 1e-7);
    CHECK(phase_distance(std::polar(1.0, 0.83) * h, h) < 1e-7);
    CHECK(phase_distance(pauli_x(), pauli_z()) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_WITH_AS(phase_distance(gate_cnot(), gate_cnot()),
                         "dimension mismatch", std::invalid_argument);
}

TEST_CASE("phase distance symmetry and left invariance") {
    SplitMix64 rng(21);
    for (int i = 0; i < 200; i++) {
        const Matrix a = random_su2(rng);
        const Matrix b = random_su2(rng);
        const Matrix u = random_su2(rng);
        const double d = phase_distance(a, b);
        CHECK(std::abs(d - phase_distance(b, a)) < 1e-12);
        CHECK(std::abs(d - phase_distance(u * a, u * b)) < 1e-12);
        CHECK(d >= 0.0);
        CHECK(d <= 1.0 + 1e-12);
    }
}

TEST_CASE("bell transform is unitary and fixes the identity") {
    const Matrix& q = bell_transform();
    CHECK((q.adjoint() * q - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((bell_conjugate(Matrix::Identity(4, 4)) - Matrix::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() < 1e-15);
    SplitMix64 rng(22);
    for (int i = 0; i < 20; i++) {
        Matrix m(4, 4);
        for (Eigen::Index r = 0; r < 4; r++) {
            for (Eigen::Index c = 0; c < 4; c++) {
                m(r, c) = Complex(2.0 * rng.u01() - 1.0, 2.0 * rng.u01() - 1.0);
            }
        }
        CHECK(std::abs(bell_conjugate(m).norm() - m.norm()) < 1e-12);
    }
}

TEST_CASE("Makhlin invariants of the named gates") {
    CHECK(invariants_near(makhlin_invariants(gate_cnot()), 0.0, 0.0, 1.0, 1e-12));
    CHECK(invariants_near(makhlin_invariants(Matrix::Identity(4, 4)), 1.0, 0.0, 3.0, 1e-12));
    CHECK(invariants_near(makhlin_invariants(gate_swap()), -1.0, 0.0, -3.0, 1e-12));
    // CZ sits in the CNOT class.
    CHECK(invariants_near(makhlin_invariants(gate_cz()), 0.0, 0.0, 1.0, 1e-12));
    CHECK(cnot_class_distance(gate_cnot()) < 1e-24);
    CHECK(cnot_class_distance(gate_cz()) < 1e-24);
    CHECK(cnot_class_distance(Matrix::Identity(4, 4)) ==
          doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("Makhlin invariants agree with the definition on random input") {
    SplitMix64 rng(23);
    for (int i = 0; i < 100; i++) {
        Matrix m(4, 4);
        for (Eigen::Index r = 0; r < 4; r++) {
            for (Eigen::Index c = 0; c < 4; c++) {
                m(r, c) = Complex(2.0 * rng.u01() - 1.0, 2.0 * rng.u01() - 1.0);
            }
        }
        if (std::abs(m.determinant()) <= 1e-6) {
            continue;
        }
        const LocalInvariants got = makhlin_invariants(m);
        const LocalInvariants want = oracle_invariants(m);
        CHECK(invariants_near(got, want.g1, want.g2, want.g3, 1e-9));
    }
}

TEST_CASE("invariants survive one-qubit conjugation") {
    SplitMix64 rng(24);
    const Matrix cnot = gate_cnot();
    for (int i = 0; i < 1000; i++) {
        const Matrix u = kron(random_su2(rng), random_su2(rng)) * cnot *
                         kron(random_su2(rng), random_su2(rng));
        CHECK(invariants_near(makhlin_invariants(u), 0.0, 0.0, 1.0, 1e-9));
        CHECK(cnot_class_distance(u) < 1e-9);
    }
}

TEST_CASE("invariants undefined on singular input") {
    CHECK_THROWS_WITH_AS(makhlin_invariants(Matrix::Zero(4, 4)),
                         "invariants undefined", std::runtime_error);
    CHECK_THROWS_WITH_AS(makhlin_invariants(Matrix::Identity(2, 2)),
                         "dimension mismatch", std::invalid_argument);
}

TEST_CASE("unitarity measure") {
    CHECK(unitarity_measure(gate_cnot()) < 1e-10);
    CHECK(unitarity_measure(gate_swap() * gate_cz()) < 1e-10);
    // a^dagger a - I = 3 I, so the nuclear norm is exactly 12.
    CHECK(unitarity_measure(2.0 * Matrix::Identity(4, 4)) ==
          doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("computational block split and round trip") {
    const auto [c0, n0] = computational_block(Matrix::Identity(6, 6));
    CHECK(c0 == Matrix::Identity(4, 4));
    CHECK(n0 == Matrix::Identity(2, 2));

    SplitMix64 rng(25);
    Matrix c(4, 4), n(2, 2);
    for (Eigen::Index r = 0; r < 4; r++) {
        for (Eigen::Index k = 0; k < 4; k++) {
            c(r, k) = Complex(rng.u01(), rng.u01());
        }
    }
    for (Eigen::Index r = 0; r < 2; r++) {
        for (Eigen::Index k = 0; k < 2; k++) {
            n(r, k) = Complex(rng.u01(), rng.u01());
        }
    }
    const auto [c1, n1] = computational_block(direct_sum(c, n));
    CHECK(c1 == c);
    CHECK(n1 == n);
    CHECK_THROWS_WITH_AS(computational_block(Matrix::Identity(4, 4)),
                         "dimension mismatch", std::invalid_argument);
}

TEST_CASE("middle-exchange block against curated class distances") {
    {
        const GeneratorSet g2 = two_qubit_generators(AnyonParams(2.031));
        const auto [block, rest] = computational_block(g2.matrix('G'));
        CHECK(cnot_class_distance(block) == doctest::Approx(6.184e-13).epsilon(1e-3));
        CHECK(std::abs(unitarity_measure(block) - 0.09758) < 1e-4);
        // The discarded leakage is what the unitarity measure detects.
        CHECK(unitarity_measure(block) > 0.01);
        CHECK(rest.rows() == 2);
    }
    {
        const GeneratorSet g2 = two_qubit_generators(AnyonParams(2.063));
        const auto [block, rest] = computational_block(g2.matrix('G'));
        CHECK(cnot_class_distance(block) == doctest::Approx(1.808e-10).epsilon(1e-3));
        CHECK(std::abs(unitarity_measure(block) - 0.19955) < 1e-4);
    }
}
