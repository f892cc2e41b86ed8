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
#include <numbers>

#include "anyonc/anyon_model.hpp"
#include "anyonc/metrics.hpp"
#include "anyonc/rng.hpp"
#include "anyonc/ska.hpp"

using namespace anyonc;

namespace {

constexpr double kPi = std::numbers::pi;

bool mat_near(const Matrix& a, const Matrix& b, double tol) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           (a - b).cwiseAbs().maxCoeff() <= tol;
}

Matrix random_su2(SplitMix64& rng) {
    const Complex a(2.0 * rng.u01() - 1.0, 2.0 * rng.u01() - 1.0);
    const Complex b(2.0 * rng.u01() - 1.0, 2.0 * rng.u01() - 1.0);
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    Matrix u(2, 2);
    u << a / n, b / n, -std::conj(b) / n, std::conj(a) / n;
    return u;
}

Matrix z_rotation(double theta) {
    Matrix u = Matrix::Zero(2, 2);
    u(0, 0) = std::polar(1.0, -theta / 2.0);
    u(1, 1) = std::polar(1.0, theta / 2.0);
    return u;
}

Matrix commutator(const Matrix& v, const Matrix& w) {
    return v * w * v.adjoint() * w.adjoint();
}

}  // namespace

TEST_CASE("project_su2 strips determinant phase") {
    CHECK(mat_near(project_su2(Matrix::Identity(2, 2)), Matrix::Identity(2, 2), 1e-15));

    SplitMix64 rng(41);
    const GeneratorSet g = one_qubit_generators(AnyonParams(2.3));
    for (int i = 0; i < 40; i++) {
        Braidword w;
        for (int j = 0; j < 12; j++) {
            w.push_back(g.alphabet[rng.next_below(4)]);
        }
        const Matrix u = evaluate(w, g);
        const Matrix s = project_su2(u);
        CHECK(std::abs(s.determinant() - Complex(1.0, 0.0)) < 1e-12);
        // Projection only moves the global phase; the metric floors at
        // sqrt(ulp) ~ 1.5e-8 near zero.
        CHECK(phase_distance(s, u) < 1e-7);
    }
    CHECK_THROWS_WITH_AS(project_su2(Matrix::Zero(2, 2)), "near-singular input",
                         std::runtime_error);
}

TEST_CASE("axis_angle conventions") {
    const AxisAngle at_id = axis_angle(Matrix::Identity(2, 2));
    CHECK(at_id.angle == 0.0);
    CHECK(at_id.axis == Eigen::Vector3d::UnitZ());

    const AxisAngle z = axis_angle(z_rotation(0.8));
    CHECK(z.angle == doctest::Approx(0.8).epsilon(1e-12));
    CHECK((z.axis - Eigen::Vector3d::UnitZ()).norm() < 1e-12);

    // -i X is the x-rotation by pi.
    Matrix x(2, 2);
    x << 0, Complex(0, -1), Complex(0, -1), 0;
    const AxisAngle ax = axis_angle(x);
    CHECK(ax.angle == doctest::Approx(kPi).epsilon(1e-12));
    CHECK((ax.axis - Eigen::Vector3d::UnitX()).norm() < 1e-9);

    CHECK_THROWS_WITH_AS(axis_angle(2.0 * Matrix::Identity(2, 2)), "det != 1",
                         std::invalid_argument);
}

TEST_CASE("axis_angle round trips through from_axis_angle") {
    SplitMix64 rng(42);
    for (int i = 0; i < 200; i++) {
        const Matrix u = project_su2(random_su2(rng));
        const AxisAngle aa = axis_angle(u);
        CHECK(aa.angle >= 0.0);
        CHECK(aa.angle <= kPi + 1e-12);
        CHECK(std::abs(aa.axis.norm() - 1.0) < 1e-12);
        const Matrix back = from_axis_angle(aa.axis, aa.angle);
        // The fold can flip the SU(2) sign; both lifts project to the same
        // rotation, which is what phase_distance sees.
        CHECK((mat_near(back, u, 1e-10) || mat_near(back, Matrix(-u), 1e-10)));
        CHECK(phase_distance(back, u) < 1e-7);
    }
}

TEST_CASE("gc_decompose balanced commutator") {
    const auto [v0, w0] = gc_decompose(Matrix::Identity(2, 2));
    CHECK(mat_near(commutator(v0, w0), Matrix::Identity(2, 2), 1e-10));

    const Matrix small = z_rotation(0.1);
    const auto [v1, w1] = gc_decompose(small);
    CHECK((commutator(v1, w1) - small).norm() < 1e-10);
    // Balanced: both factors rotate by the same amount.
    CHECK(axis_angle(project_su2(v1)).angle ==
          doctest::Approx(axis_angle(project_su2(w1)).angle).epsilon(1e-9));

    SplitMix64 rng(43);
    for (int i = 0; i < 1000; i++) {
        const double theta = 0.3 * rng.u01();
        const Eigen::Vector3d axis =
            Eigen::Vector3d(2.0 * rng.u01() - 1.0, 2.0 * rng.u01() - 1.0,
                            2.0 * rng.u01() - 1.0)
                .normalized();
        const Matrix delta = from_axis_angle(axis, theta);
        const auto [v, w] = gc_decompose(delta);
        CHECK((commutator(v, w) - delta).norm() < 1e-10);
    }

    CHECK_THROWS_WITH_AS(gc_decompose(from_axis_angle(Eigen::Vector3d::UnitX(), 2.0)),
                         "commutator angle overflow", std::runtime_error);
}

TEST_CASE("solovay_kitaev level zero is the base approximation") {
    const GeneratorSet g = one_qubit_generators(AnyonParams(2.063));
    const BaseApproximator base = [&g](const Matrix& target) {
        SearchConfig cfg;
        cfg.length = 20;
        cfg.tolerance = 1e-8;
        cfg.max_sweeps = 200;
        cfg.seed = 5;
        cfg.objective = SearchObjective::one_qubit(target);
        const SearchResult r = mc_search(g, cfg);
        return std::make_pair(r.best_word, evaluate(r.best_word, g));
    };
    const SkaTrace t = solovay_kitaev(gate_t(), 0, base);
    REQUIRE(t.levels.size() == 1);
    CHECK(t.levels[0].level == 0);
    CHECK(t.levels[0].word_length == 20);
    CHECK(t.levels[0].word.size() == 20);
    CHECK(t.levels[0].distance ==
          doctest::Approx(phase_distance(gate_t(), t.levels[0].matrix)).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(solovay_kitaev(gate_t(), -1, base), "negative level",
                         std::invalid_argument);
}

TEST_CASE("a perfect base collapses level one to the target") {
    // Base that returns the exact target with a dummy word: the correction
    // braid at level 1 is then the commutator of the identity split.
    const BaseApproximator exact = [](const Matrix& target) {
        return std::make_pair(Braidword("A"), Matrix(project_su2(target)));
    };
    SplitMix64 rng(44);
    for (int i = 0; i < 10; i++) {
        const Matrix target = random_su2(rng);
        const SkaTrace t = solovay_kitaev(target, 1, exact);
        REQUIRE(t.levels.size() == 2);
        // sqrt(ulp) floor of the phase metric, not an algorithmic residue.
        CHECK(t.levels[0].distance < 1e-7);
        CHECK(t.levels[1].distance < 1e-7);
        CHECK(t.levels[1].word_length == 5);
    }
}

TEST_CASE("words track matrices and grow as 5^n L0") {
    const GeneratorSet g = one_qubit_generators(AnyonParams(2.063));
    SearchConfig base_cfg;
    base_cfg.length = 20;
    base_cfg.tolerance = 1e-8;
    base_cfg.max_sweeps = 150;
    base_cfg.seed = 9;
    const SkaTrace t = mc_enhanced_ska(gate_h(), 2, g, base_cfg);
    REQUIRE(t.levels.size() == 3);
    for (const SkaLevel& lvl : t.levels) {
        const size_t want_len =
            static_cast<size_t>(std::pow(5.0, lvl.level)) * 20u;
        CHECK(lvl.word_length == want_len);
        CHECK(lvl.word.size() == want_len);
        CHECK(mat_near(evaluate(lvl.word, g), lvl.matrix, 1e-9));
        CHECK(lvl.distance ==
              doctest::Approx(phase_distance(gate_h(), lvl.matrix)).epsilon(1e-9));
    }
}

TEST_CASE("mc_enhanced_ska is reproducible and does not regress") {
    const GeneratorSet g = one_qubit_generators(AnyonParams(2.063));
    SearchConfig base_cfg;
    base_cfg.length = 20;
    base_cfg.tolerance = 1e-8;
    base_cfg.max_sweeps = 150;
    base_cfg.seed = 11;
    const SkaTrace a = mc_enhanced_ska(gate_t(), 2, g, base_cfg);
    const SkaTrace b = mc_enhanced_ska(gate_t(), 2, g, base_cfg);
    REQUIRE(a.levels.size() == b.levels.size());
    for (size_t i = 0; i < a.levels.size(); i++) {
        CHECK(a.levels[i].word == b.levels[i].word);
        CHECK(a.levels[i].distance == b.levels[i].distance);
    }
    // The recursion plateaus when the base is already at numerical range,
    // but must never move away from the target.
    for (size_t i = 1; i < a.levels.size(); i++) {
        CHECK(a.levels[i].distance <= a.levels[i - 1].distance + 1e-12);
    }

    const GeneratorSet g2 = two_qubit_generators(AnyonParams(2.063));
    CHECK_THROWS_WITH_AS(mc_enhanced_ska(gate_t(), 1, g2, base_cfg),
                         "one-qubit generator set required", std::invalid_argument);
}
