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

#ifndef ANYONC_SKA_HPP
#define ANYONC_SKA_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "anyonc/linalg.hpp"
#include "anyonc/search.hpp"

namespace anyonc {

/// Rotation carrier for the group-commutator geometry: a unit axis and an
/// angle folded into [0, pi] (the sign lives in the axis).
struct AxisAngle {
    Eigen::Vector3d axis;
    double angle;
};

/// One recursion level of a Solovay-Kitaev trace.
struct SkaLevel {
    int level;
    Matrix matrix;
    Braidword word;
    std::size_t word_length;
    double distance;
};

/// Full per-level history of one Solovay-Kitaev run. Level n's word has
/// length 5^n * L0 exactly; no cancellation is performed.
struct SkaTrace {
    std::vector<SkaLevel> levels;
};

/// Maps an SU(2) target to a (word, matrix) approximation.
using BaseApproximator = std::function<std::pair<Braidword, Matrix>(const Matrix&)>;

/// Rescales a 2x2 matrix to unit determinant via the principal square root.
/// The distance functional is phase-blind, so the residual +-1 ambiguity is
/// harmless and left unnormalized. Throws "near-singular input" when
/// |det| <= 1e-12.
Matrix project_su2(const Matrix& u);

/// Decomposes u in SU(2) as cos(theta/2) I - i sin(theta/2) (n . sigma).
/// Requires det(u) = 1 within 1e-10. Inputs with negative real trace are
/// folded to -u first so the angle lands in [0, pi]; near the identity the
/// axis is fixed to z by convention.
AxisAngle axis_angle(const Matrix& u);

/// Inverse of axis_angle: builds the SU(2) rotation by `angle` about `axis`.
Matrix from_axis_angle(const Eigen::Vector3d& axis, double angle);

/// Balanced group-commutator split: returns (v, w) with v w v^-1 w^-1 = delta
/// within 1e-10 Frobenius. The common rotation amount phi solves
/// sin(theta/2) = 2 sin^2(phi/2) sqrt(1 - sin^4(phi/2)) by bisection; v and w
/// start as phi-rotations about x and y and are conjugated so the commutator
/// axis matches delta's. Requires the rotation angle of delta (unfolded) to
/// stay below pi/2; otherwise throws "commutator angle overflow".
std::pair<Matrix, Matrix> gc_decompose(const Matrix& delta);

/// Solovay-Kitaev recursion: level 0 delegates to `base`; level n improves
/// the level n-1 approximation through a group-commutator correction. The
/// trace records every level's matrix, word, and distance to `target`.
SkaTrace solovay_kitaev(const Matrix& target, int n, const BaseApproximator& base);

/// solovay_kitaev driven by a memoized Monte Carlo base approximator: each
/// base miss runs mc_search three times on consecutive substreams of
/// base_cfg.seed and keeps the best word. The memo key is the target matrix
/// rounded to 1e-12 per entry, so recurring sub-targets are solved once and
/// the whole trace is reproducible from the one master seed.
SkaTrace mc_enhanced_ska(const Matrix& target, int n, const GeneratorSet& g,
                         const SearchConfig& base_cfg);

}  // namespace anyonc

#endif  // ANYONC_SKA_HPP
