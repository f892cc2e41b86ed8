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

#include "anyonc/anyon_model.hpp"

#include <cmath>
#include <numbers>

namespace anyonc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDenominatorFloor = 1e-12;

double cot(double x) {
    return std::cos(x) / std::sin(x);
}

double guarded(double value, double denominator) {
    if (std::abs(denominator) < kDenominatorFloor) {
        throw std::domain_error("degenerate alpha");
    }
    return value / denominator;
}

// B_{x-1}^{x sigma} = sqrt(2) / (-1 + cot(pi x / 4))
double bubble_step_down(double x) {
    return guarded(std::sqrt(2.0), -1.0 + cot(kPi * x / 4.0));
}

// B_x^{x psi} = sqrt(2) cos(pi x / 2) / (1 - sin(pi x / 2))
double bubble_self_psi(double x) {
    return guarded(std::sqrt(2.0) * std::cos(kPi * x / 2.0), 1.0 - std::sin(kPi * x / 2.0));
}

}  // namespace

AnyonParams::AnyonParams(double alpha) : alpha(alpha), q(std::polar(1.0, kPi / 4.0)) {
    if (!(alpha > 2.0 && alpha < 3.0)) {
        throw std::invalid_argument("alpha outside (2,3)");
    }
}

Complex q_pow(double x) {
    return std::polar(1.0, kPi * x / 4.0);
}

std::vector<AnyonLabel> fuse(const AnyonLabel& a, const AnyonLabel& b) {
    using K = AnyonKind;
    if (a.kind == K::Vacuum) {
        return {b};
    }
    if (b.kind == K::Vacuum) {
        return {a};
    }
    auto pair_is = [&](K x, K y) {
        return (a.kind == x && b.kind == y) || (a.kind == y && b.kind == x);
    };
    if (a.kind == K::Sigma && b.kind == K::Sigma) {
        return {AnyonLabel::vacuum(), AnyonLabel::psi()};
    }
    if (pair_is(K::Sigma, K::Psi)) {
        return {AnyonLabel::sigma(), AnyonLabel::s32()};
    }
    if (pair_is(K::Sigma, K::S32)) {
        return {AnyonLabel::p2()};
    }
    if (a.kind == K::Psi && b.kind == K::Psi) {
        return {AnyonLabel::vacuum(), AnyonLabel::p2()};
    }
    if (pair_is(K::Neglecton, K::Sigma)) {
        const double x = (a.kind == K::Neglecton) ? a.index : b.index;
        return {AnyonLabel::neglecton(x + 1.0), AnyonLabel::neglecton(x - 1.0)};
    }
    if (pair_is(K::Neglecton, K::Psi)) {
        const double x = (a.kind == K::Neglecton) ? a.index : b.index;
        return {AnyonLabel::neglecton(x + 2.0), AnyonLabel::neglecton(x), AnyonLabel::neglecton(x - 2.0)};
    }
    throw std::invalid_argument("unknown fusion channel");
}

EbmCoefficients ebm_coefficients(const AnyonParams& p) {
    return {
        guarded(std::sqrt(2.0), -1.0 + cot(kPi * (p.alpha + 1.0) / 4.0)),
        guarded(std::sqrt(2.0), -1.0 + cot(kPi * p.alpha / 4.0)),
    };
}

int GeneratorSet::index_of(char letter) const {
    const size_t pos = alphabet.find(letter);
    if (pos == std::string::npos) {
        throw std::invalid_argument("unknown letter");
    }
    return static_cast<int>(pos);
}

const Matrix& GeneratorSet::matrix(char letter) const {
    return mats[static_cast<size_t>(index_of(letter))];
}

char GeneratorSet::inverse_of(char letter) const {
    return alphabet[static_cast<size_t>(index_of(letter) ^ 2)];
}

GeneratorSet one_qubit_generators(const AnyonParams& p) {
    const double a = p.alpha;
    Matrix gen_a = Matrix::Zero(2, 2);
    gen_a(0, 0) = q_pow(3.0 + a);
    gen_a(1, 1) = q_pow(3.0 - a);

    // The off-diagonal ratio sqrt(B+)/sqrt(B-) takes principal roots of two
    // negative reals, so it is real and positive on (2,3).
    const EbmCoefficients c = ebm_coefficients(p);
    const Complex off =
        q_pow(-1.0) * std::sqrt(Complex(c.b_alpha_plus_1)) / std::sqrt(Complex(c.b_alpha_minus_1));
    Matrix gen_b(2, 2);
    gen_b(0, 0) = (1.0 + q_pow(2.0)) / (1.0 - q_pow(2.0 * a));
    gen_b(0, 1) = off;
    gen_b(1, 0) = off;
    gen_b(1, 1) = (1.0 + q_pow(2.0)) / (1.0 - q_pow(-2.0 * a));
    gen_b *= q_pow(0.5);

    const Matrix eye = Matrix::Identity(2, 2);
    if ((gen_a.adjoint() * gen_a - eye).norm() > 1e-8 ||
        (gen_b.adjoint() * gen_b - eye).norm() > 1e-8) {
        throw std::runtime_error("model construction failure");
    }

    GeneratorSet g;
    g.arity = 1;
    g.alphabet = "ABCD";
    g.mats = {gen_a, gen_b, gen_a.adjoint(), gen_b.adjoint()};
    return g;
}

double bubble_pop(const AnyonLabel& d, const AnyonLabel& a, const AnyonLabel& b) {
    using K = AnyonKind;
    const double sqrt2 = std::sqrt(2.0);
    // Family indices are matched with slack: offsets like (alpha+1)+1 and
    // alpha+2 can differ by one ulp when the sum crosses a power of two.
    auto near = [](double x, double y) { return std::abs(x - y) < 1e-9; };

    if (a.kind == K::Neglecton && b.kind == K::Vacuum && d.kind == K::Neglecton &&
        near(d.index, a.index)) {
        return 1.0;
    }
    if (a.kind == K::Neglecton && b.kind == K::Sigma && d.kind == K::Neglecton) {
        if (near(d.index, a.index + 1.0)) {
            return 1.0;
        }
        if (near(d.index, a.index - 1.0)) {
            return bubble_step_down(a.index);
        }
    }
    if (a.kind == K::Neglecton && b.kind == K::Psi && d.kind == K::Neglecton) {
        if (near(d.index, a.index + 2.0)) {
            return 1.0;
        }
        if (near(d.index, a.index)) {
            return bubble_self_psi(a.index);
        }
        if (near(d.index, a.index - 2.0)) {
            // B_x^{(x+2) psi} = 2 cot(pi x / 4) with x the outcome index
            return 2.0 * cot(kPi * d.index / 4.0);
        }
    }
    if (a.kind == K::Neglecton && b.kind == K::S32 && d.kind == K::Neglecton) {
        if (near(d.index, a.index + 1.0)) {
            return guarded(sqrt2, 1.0 - std::tan(kPi * a.index / 4.0));
        }
        if (near(d.index, a.index - 1.0)) {
            return guarded(2.0 + 2.0 * std::tan(kPi * a.index / 4.0),
                           -1.0 + cot(kPi * a.index / 4.0));
        }
    }
    if (a.kind == K::Sigma && b.kind == K::Sigma) {
        if (d.kind == K::Vacuum) {
            return -sqrt2;
        }
        if (d.kind == K::Psi) {
            return 1.0;
        }
    }
    if (a.kind == K::Psi && b.kind == K::Sigma) {
        if (d.kind == K::Sigma) {
            return -1.0 / sqrt2;
        }
        if (d.kind == K::S32) {
            return 1.0;
        }
    }
    if (a.kind == K::Sigma && b.kind == K::Psi) {
        if (d.kind == K::Sigma) {
            return -sqrt2;
        }
        if (d.kind == K::S32) {
            return 1.0;
        }
    }
    throw std::invalid_argument("unknown bubble-pop coefficient");
}

namespace {

// Raw F-matrix of the (alpha + sign) tower, before normalization:
//   1 / (sqrt(2) (t - 1)) * [ q (t + q^2),  -(t - 1) ]
//                           [ t - q^2,       q (t - 1) ]
// with t = q^{2 (alpha + sign)}. Rows are the sigma-sigma channels (I, psi);
// columns are the tower's neighbor labels (a+1, a-1) for a = alpha + sign.
Matrix2 raw_f(const AnyonParams& p, double sign) {
    const Complex t = q_pow(2.0 * (p.alpha + sign));
    const Complex q = q_pow(1.0);
    const Complex q2 = q_pow(2.0);
    Matrix2 f;
    f << q * (t + q2), -(t - 1.0),
        t - q2, q * (t - 1.0);
    return f / (std::sqrt(2.0) * (t - 1.0));
}

// Entry-wise normalization
//   F~(n, m) = sqrt(B_a^{a n}) sqrt(B_n^{ss}) / (sqrt(B_a^{m s}) sqrt(B_m^{a s})) * F(n, m)
// with a = alpha + sign and principal complex square roots (several of the
// bubble scalars are negative).
Matrix2 normalized_f(const AnyonParams& p, double sign) {
    const double a = p.alpha + sign;
    const AnyonLabel la = AnyonLabel::neglecton(a);
    const AnyonLabel sigma = AnyonLabel::sigma();

    auto csqrt = [](double x) { return std::sqrt(Complex(x)); };

    const Complex row[2] = {
        csqrt(bubble_pop(la, la, AnyonLabel::vacuum())) *
            csqrt(bubble_pop(AnyonLabel::vacuum(), sigma, sigma)),
        csqrt(bubble_pop(la, la, AnyonLabel::psi())) *
            csqrt(bubble_pop(AnyonLabel::psi(), sigma, sigma)),
    };
    const double m[2] = {a + 1.0, a - 1.0};
    Complex col[2];
    for (int j = 0; j < 2; j++) {
        col[j] = csqrt(bubble_pop(la, AnyonLabel::neglecton(m[j]), sigma)) *
                 csqrt(bubble_pop(AnyonLabel::neglecton(m[j]), la, sigma));
    }

    Matrix2 f = raw_f(p, sign);
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            f(i, j) *= row[i] / col[j];
        }
    }
    return f;
}

struct TwoQubitEbms {
    Matrix a, b, e, f;
};

TwoQubitEbms build_two_qubit(const AnyonParams& p) {
    const GeneratorSet one = one_qubit_generators(p);
    const Matrix& a1 = one.mats[0];
    const Matrix& b1 = one.mats[1];
    const Matrix eye = Matrix::Identity(2, 2);
    const Matrix half_twist = q_pow(0.5) * eye;

    TwoQubitEbms out;
    out.a = direct_sum(kron(a1, eye), a1);
    out.b = direct_sum(kron(b1, eye), half_twist);
    out.f = direct_sum(kron(eye, b1), half_twist);

    const BraidingSymbols s = braiding_symbols(p);
    Matrix2 r = Matrix2::Zero();
    r(0, 0) = s.r_I;
    r(1, 1) = s.r_psi;
    // Mixing blocks: conjugate the channel eigenvalues back into the tower
    // bases. Column order of f_plus is (alpha+2, alpha) = (|NC1>, |00>);
    // of f_minus, (alpha, alpha-2) = (|11>, |NC2>).
    const Matrix2 mix_plus = s.f_plus.inverse() * r * s.f_plus;
    const Matrix2 mix_minus = s.f_minus.inverse() * r * s.f_minus;

    out.e = Matrix::Zero(6, 6);
    out.e(1, 1) = s.r_psi;
    out.e(2, 2) = s.r_psi;
    out.e(4, 4) = mix_plus(0, 0);
    out.e(4, 0) = mix_plus(0, 1);
    out.e(0, 4) = mix_plus(1, 0);
    out.e(0, 0) = mix_plus(1, 1);
    out.e(3, 3) = mix_minus(0, 0);
    out.e(3, 5) = mix_minus(0, 1);
    out.e(5, 3) = mix_minus(1, 0);
    out.e(5, 5) = mix_minus(1, 1);
    return out;
}

double j4_defect_of(const TwoQubitEbms& t, const AnyonParams& p) {
    const Matrix j4 = t.e * t.b * t.a * t.b * t.e;
    Matrix nc = Matrix::Zero(2, 2);
    nc(0, 0) = q_pow(1.0 - p.alpha);
    nc(1, 1) = q_pow(1.0 + p.alpha);
    const Matrix a1 = one_qubit_generators(p).mats[0];
    const Matrix expected = direct_sum(kron(Matrix::Identity(2, 2), a1), nc);
    return frobenius_distance(j4, expected);
}

}  // namespace

BraidingSymbols braiding_symbols(const AnyonParams& p) {
    BraidingSymbols s;
    s.r_I = q_pow(2.5);
    s.r_psi = q_pow(0.5);
    s.f_plus = normalized_f(p, 1.0);
    s.f_minus = normalized_f(p, -1.0);
    return s;
}

GeneratorSet two_qubit_generators(const AnyonParams& p) {
    const TwoQubitEbms t = build_two_qubit(p);
    if (j4_defect_of(t, p) > 1e-9) {
        throw std::runtime_error("braiding symbol convention failure");
    }
    GeneratorSet g;
    g.arity = 2;
    g.alphabet = "ABCDEFGH";
    g.mats = {
        t.a,
        t.b,
        Eigen::PartialPivLU<Matrix>(t.a).inverse(),
        Eigen::PartialPivLU<Matrix>(t.b).inverse(),
        t.e,
        t.f,
        Eigen::PartialPivLU<Matrix>(t.e).inverse(),
        Eigen::PartialPivLU<Matrix>(t.f).inverse(),
    };
    return g;
}

double j4_defect(const AnyonParams& p) {
    return j4_defect_of(build_two_qubit(p), p);
}

}  // namespace anyonc
