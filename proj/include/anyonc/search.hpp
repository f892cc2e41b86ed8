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

#ifndef ANYONC_SEARCH_HPP
#define ANYONC_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anyonc/anyon_model.hpp"
#include "anyonc/linalg.hpp"

namespace anyonc {

// A braidword is the plain uppercase letter string over a GeneratorSet's
// alphabet, exactly as serialized in result tables ("BADD..."). The arity
// travels with the GeneratorSet.
using Braidword = std::string;

enum class ObjectiveKind {
    OneQubit,   // phase distance to a fixed 2x2 target
    CnotClass,  // invariant distance of the computational block to [CNOT],
                // with a hard unitarity cap as pre-filter
};

struct SearchObjective {
    ObjectiveKind kind = ObjectiveKind::OneQubit;
    Matrix target;       // OneQubit only
    double du_cap = 0.0; // CnotClass only

    static SearchObjective one_qubit(const Matrix& target);
    static SearchObjective cnot_class(double du_cap);
};

struct SearchConfig {
    int length = 1;           // L
    double tolerance = 1e-2;  // D, the early-exit accuracy
    int max_sweeps = 2000;    // NUM
    std::uint64_t seed = 0;
    SearchObjective objective;
};

struct SearchResult {
    Braidword best_word;
    double best_score = 0.0;
    std::optional<double> d_u;  // unitarity measure of the winner (CnotClass only)
    std::uint64_t evaluations = 0;
    int sweeps_used = 0;
    std::uint64_t seed = 0;
};

// Word evaluation with the first letter applied first:
// "m1 m2 ... mn" evaluates to M(mn) ... M(m2) M(m1). Empty word -> identity.
Matrix evaluate(const Braidword& w, const GeneratorSet& g);

// Reversed letter order with each letter mapped through its inverse
// (A<->C, B<->D, E<->G, F<->H), so evaluate(word_inverse(w)) inverts
// evaluate(w) exactly, letter by letter.
Braidword word_inverse(const Braidword& w);

// Exact minimizer over all length-L words with no adjacent inverse pair
// (those reduce to shorter words, which a length sweep covers anyway).
// Ties break to the lexicographically smallest word, so the result is unique
// and parallel partitions reduce to the identical winner as a serial scan.
// Under the CnotClass objective, candidates over the unitarity cap never
// enter the ranking; if nothing survives the cap this throws
// "infeasible under unitarity cap".
SearchResult brute_force(const GeneratorSet& g, const SearchConfig& cfg, int threads = 1);

// Acceptance rule for a proposed move from score d to d': with
// delta = |d' - d|, p = exp(-delta / t) where t = 10^floor(log10 delta) is
// the order of magnitude of the gap (so delta/t is in [1, 10) and p is
// scale-free in (e^-10, e^-1]). A zero gap accepts with p = 1. Read
// literally as exp(-(d - d')/t) the exponent would be positive exactly when
// the move worsens the score, inverting its role as a stochastic filter;
// the magnitude form is the working interpretation.
double acceptance_probability(double d, double d_prime);

// Seeded position-sweep local search: start from a random length-L word;
// each sweep visits positions left to right, trying the alternative letters
// in alphabet order. An improvement is accepted and the scan advances to
// the next position; a worsening candidate is accepted with
// acceptance_probability while the scan keeps trying the remaining letters.
// Terminates as soon as the best score seen drops below cfg.tolerance, or
// after cfg.max_sweeps full sweeps. Deterministic given (seed, cfg, g).
// If sweep_best is non-null, the best-so-far score after each completed
// sweep is appended to it.
SearchResult mc_search(const GeneratorSet& g, const SearchConfig& cfg,
                       std::vector<double>* sweep_best = nullptr);

}  // namespace anyonc

#endif
