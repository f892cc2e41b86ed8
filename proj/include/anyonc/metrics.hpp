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

#ifndef ANYONC_METRICS_HPP
#define ANYONC_METRICS_HPP

#include <utility>

#include "anyonc/linalg.hpp"

namespace anyonc {

// Fidelity functionals used to rank braidwords against target gates.

// Makhlin's local invariants (g1, g2, g3): complete invariants of two-qubit
// gates under pre/post one-qubit unitaries.
struct LocalInvariants {
    double g1;
    double g2;
    double g3;
};

// The fixed Bell-basis change
//   Q = 1/sqrt(2) [ 1 0 0 i; 0 i 1 0; 0 i -1 0; 1 0 0 -i ].
const Matrix& bell_transform();

// Global phase-invariant distance sqrt(max(0, 1 - |Tr(u0 u^dagger)| / 2)).
// Deliberately defined for 2x2 inputs only; the denominator is the one-qubit
// dimension and a silent generalization would be wrong.
double phase_distance(const Matrix& u0, const Matrix& u);

// U_B = Q^dagger u Q.
Matrix bell_conjugate(const Matrix& u);

// g1 = Re{tr^2(m) / (16 det u)}, g2 = Im{...}, g3 = (tr^2(m) - tr(m^2)) / (4 det u)
// with m = U_B^T U_B. Throws "invariants undefined" when |det u| <= 1e-12.
// g3 is returned as its real part; for unitary input the imaginary residue
// is checked to be below 1e-9 (for leaky computational blocks it is not
// checked, matching the use of the invariants on near-unitary blocks).
LocalInvariants makhlin_invariants(const Matrix& u);

// Squared invariant-space distance to the CNOT class, target (0, 0, 1).
double cnot_class_distance(const Matrix& a);

// Nuclear norm of a^dagger a - I (sum of singular values): zero exactly for
// unitary a, and a leakage gauge for computational blocks.
double unitarity_measure(const Matrix& a);

// Split a six-dimensional braidword matrix in the frozen basis order into
// (computational 4x4 block, non-computational 2x2 block). The off-diagonal
// leakage blocks are discarded; unitarity_measure of the first component is
// how that leakage is detected.
std::pair<Matrix, Matrix> computational_block(const Matrix& b);

// Standard gate targets.
Matrix gate_h();
Matrix gate_t();
Matrix gate_cnot();
Matrix gate_swap();
Matrix gate_cz();

}  // namespace anyonc

#endif
