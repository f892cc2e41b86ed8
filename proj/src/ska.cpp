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

#include "anyonc/ska.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

#include "anyonc/anyon_model.hpp"
#include "anyonc/metrics.hpp"
#include "anyonc/rng.hpp"

namespace anyonc {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

void require_2x2(const Matrix& m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw std::invalid_argument("dimension mismatch");
    }
}

Complex det2(const Matrix& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

}  // namespace

Matrix project_su2(const Matrix& u) {
    require_2x2(u);
    const Complex det = det2(u);
    if (std::abs(det) <= 1e-12) {
        throw std::runtime_error("near-singular input");
    }
    return u / std::sqrt(det);
}

AxisAngle axis_angle(const Matrix& u) {
    require_2x2(u);
    if (std::abs(det2(u) - Complex(1.0, 0.0)) > 1e-10) {
        throw std::invalid_argument("det != 1");
    }
    Matrix v = u;
    if (v.trace().real() < 0.0) {
        v = -v;
    }
    const double cos_half = std::clamp(v.trace().real() / 2.0, -1.0, 1.0);
    const double angle = 2.0 * std::acos(cos_half);
    const double sin_half = std::sqrt(std::max(0.0, 1.0 - cos_half * cos_half));
    if (sin_half < 1e-12) {
        return {Eigen::Vector3d(0.0, 0.0, 1.0), angle};
    }
    Eigen::Vector3d axis(-(v(0, 1) + v(1, 0)).imag(), -(v(0, 1) - v(1, 0)).real(),
                         -(v(0, 0) - v(1, 1)).imag());
    axis /= 2.0 * sin_half;
    axis.normalize();
    return {axis, angle};
}

Matrix from_axis_angle(const Eigen::Vector3d& axis, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    Matrix r(2, 2);
    const Complex i(0.0, 1.0);
    r(0, 0) = c - i * s * axis.z();
    r(0, 1) = -s * axis.y() - i * s * axis.x();
    r(1, 0) = s * axis.y() - i * s * axis.x();
    r(1, 1) = c + i * s * axis.z();
    return r;
}

std::pair<Matrix, Matrix> gc_decompose(const Matrix& delta) {
    require_2x2(delta);
    // Regime check on the unfolded input: a negative real trace means the
    // rotation angle exceeds pi, which is far outside the shrinking-angle
    // regime the recursion guarantees.
    const double cos_half = delta.trace().real() / 2.0;
    if (cos_half < std::cos(kHalfPi / 2.0) - 1e-12) {
        throw std::runtime_error("commutator angle overflow");
    }
    const AxisAngle target = axis_angle(delta);
    const double rhs = std::sin(target.angle / 2.0);

    // 2 s^2 sqrt(1 - s^4) is increasing on [0, 2^(-1/4)] and reaches 1 at the
    // right endpoint, so the bracket always contains the root.
    double lo = 0.0;
    double hi = std::pow(2.0, -0.25);
    for (int iter = 0; iter < 200; iter++) {
        const double mid = (lo + hi) / 2.0;
        const double lhs = 2.0 * mid * mid * std::sqrt(std::max(0.0, 1.0 - std::pow(mid, 4)));
        if (lhs < rhs) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double phi = 2.0 * std::asin((lo + hi) / 2.0);

    const Matrix v0 = from_axis_angle(Eigen::Vector3d::UnitX(), phi);
    const Matrix w0 = from_axis_angle(Eigen::Vector3d::UnitY(), phi);
    const Matrix commutator = v0 * w0 * v0.adjoint() * w0.adjoint();
    const AxisAngle raw = axis_angle(commutator);

    Matrix s = Matrix::Identity(2, 2);
    const double dot = std::clamp(raw.axis.dot(target.axis), -1.0, 1.0);
    if (dot < 1.0 - 1e-15) {
        Eigen::Vector3d pivot = raw.axis.cross(target.axis);
        if (pivot.norm() < 1e-12) {
            // Antiparallel axes: any direction perpendicular to raw.axis works.
            pivot = raw.axis.cross(std::abs(raw.axis.x()) < 0.9 ? Eigen::Vector3d::UnitX()
                                                                : Eigen::Vector3d::UnitY());
        }
        pivot.normalize();
        s = from_axis_angle(pivot, std::acos(dot));
    }
    return {s * v0 * s.adjoint(), s * w0 * s.adjoint()};
}

namespace {

std::pair<Braidword, Matrix> sk_approx(const Matrix& target, int n,
                                       const BaseApproximator& base) {
    if (n == 0) {
        return base(project_su2(target));
    }
    auto [w_prev, u_prev] = sk_approx(target, n - 1, base);
    Matrix delta = project_su2(target) * project_su2(u_prev).adjoint();
    // Both SU(2) lifts of a PSU(2) correction are valid; only the positive-
    // trace one has an angle inside gc_decompose's regime.
    if (delta.trace().real() < 0.0) {
        delta = -delta;
    }
    auto [v, w] = gc_decompose(delta);
    auto [wv, mv] = sk_approx(v, n - 1, base);
    auto [ww, mw] = sk_approx(w, n - 1, base);
    Matrix u = mv * mw * mv.adjoint() * mw.adjoint() * u_prev;
    Braidword word = w_prev + word_inverse(ww) + word_inverse(wv) + ww + wv;
    return {std::move(word), std::move(u)};
}

}  // namespace

SkaTrace solovay_kitaev(const Matrix& target, int n, const BaseApproximator& base) {
    require_2x2(target);
    if (n < 0) {
        throw std::invalid_argument("negative level");
    }
    const Matrix t = project_su2(target);
    SkaTrace trace;

    auto [w_prev, u_prev] = base(t);
    trace.levels.push_back(
        {0, u_prev, w_prev, w_prev.size(), phase_distance(target, u_prev)});

    for (int k = 1; k <= n; k++) {
        Matrix delta = t * project_su2(u_prev).adjoint();
        if (delta.trace().real() < 0.0) {
            delta = -delta;
        }
        auto [v, w] = gc_decompose(delta);
        auto [wv, mv] = sk_approx(v, k - 1, base);
        auto [ww, mw] = sk_approx(w, k - 1, base);
        u_prev = mv * mw * mv.adjoint() * mw.adjoint() * u_prev;
        w_prev = w_prev + word_inverse(ww) + word_inverse(wv) + ww + wv;
        trace.levels.push_back(
            {k, u_prev, w_prev, w_prev.size(), phase_distance(target, u_prev)});
    }
    return trace;
}

SkaTrace mc_enhanced_ska(const Matrix& target, int n, const GeneratorSet& g,
                         const SearchConfig& base_cfg) {
    if (g.arity != 1) {
        throw std::invalid_argument("one-qubit generator set required");
    }
    std::map<std::array<long long, 8>, std::pair<Braidword, Matrix>> memo;
    std::uint64_t counter = 0;
    const std::uint64_t master = base_cfg.seed;

    BaseApproximator base = [&](const Matrix& t) -> std::pair<Braidword, Matrix> {
        std::array<long long, 8> key{};
        int slot = 0;
        for (Eigen::Index r = 0; r < 2; r++) {
            for (Eigen::Index c = 0; c < 2; c++) {
                key[static_cast<size_t>(slot++)] = std::llround(t(r, c).real() * 1e12);
                key[static_cast<size_t>(slot++)] = std::llround(t(r, c).imag() * 1e12);
            }
        }
        auto it = memo.find(key);
        if (it != memo.end()) {
            return it->second;
        }
        SearchConfig cfg = base_cfg;
        cfg.objective = SearchObjective::one_qubit(t);
        std::optional<SearchResult> best;
        for (int restart = 0; restart < 3; restart++) {
            cfg.seed = substream_seed(master, counter++);
            SearchResult res = mc_search(g, cfg);
            if (!best.has_value() || res.best_score < best->best_score) {
                best = std::move(res);
            }
        }
        std::pair<Braidword, Matrix> out{best->best_word, evaluate(best->best_word, g)};
        memo.emplace(key, out);
        return out;
    };

    return solovay_kitaev(target, n, base);
}

}  // namespace anyonc
