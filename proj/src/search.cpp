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

#include "anyonc/search.hpp"

#include <cmath>
#include <limits>
#include <thread>

#include "anyonc/metrics.hpp"
#include "anyonc/rng.hpp"

namespace anyonc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Scored {
    double score;
    double du;  // NaN for one-qubit objectives
};

Scored score_matrix(const Matrix& u, const SearchObjective& obj) {
    if (obj.kind == ObjectiveKind::OneQubit) {
        return {phase_distance(u, obj.target), std::numeric_limits<double>::quiet_NaN()};
    }
    auto [a, m] = computational_block(u);
    const double du = unitarity_measure(a);
    if (du > obj.du_cap) {
        return {kInf, du};
    }
    return {cnot_class_distance(a), du};
}

char letter_at(const GeneratorSet& g, int index) {
    return g.alphabet[static_cast<size_t>(index)];
}

}  // namespace

SearchObjective SearchObjective::one_qubit(const Matrix& target) {
    SearchObjective obj;
    obj.kind = ObjectiveKind::OneQubit;
    obj.target = target;
    return obj;
}

SearchObjective SearchObjective::cnot_class(double du_cap) {
    SearchObjective obj;
    obj.kind = ObjectiveKind::CnotClass;
    obj.du_cap = du_cap;
    return obj;
}

Matrix evaluate(const Braidword& w, const GeneratorSet& g) {
    Matrix u = Matrix::Identity(g.dim(), g.dim());
    for (char c : w) {
        u = g.matrix(c) * u;
    }
    return u;
}

Braidword word_inverse(const Braidword& w) {
    Braidword inv;
    inv.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const int index = *it - 'A';
        if (index < 0 || index >= 8) {
            throw std::invalid_argument("unknown letter");
        }
        inv.push_back(static_cast<char>('A' + (index ^ 2)));
    }
    return inv;
}

namespace {

// Depth-first enumeration over one stratum (fixed first letter) in strict
// lexicographic order, with prefix products carried on a stack.
struct BfWorker {
    const GeneratorSet& g;
    const SearchObjective& obj;
    int length;

    std::string word;
    std::vector<Matrix> prefix;  // prefix[i] = evaluate(word[0..i))
    double best_score = kInf;
    std::string best_word;
    double best_du = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t evaluations = 0;

    BfWorker(const GeneratorSet& g, const SearchObjective& obj, int length)
        : g(g), obj(obj), length(length) {
        word.assign(static_cast<size_t>(length), '?');
        prefix.assign(static_cast<size_t>(length) + 1, Matrix());
        prefix[0] = Matrix::Identity(g.dim(), g.dim());
    }

    void consider(const Matrix& u) {
        const Scored s = score_matrix(u, obj);
        evaluations++;
        if (s.score == kInf) {
            return;  // over the unitarity cap; never ranked
        }
        if (s.score < best_score || (s.score == best_score && word < best_word)) {
            best_score = s.score;
            best_word = word;
            best_du = s.du;
        }
    }

    void dfs(int depth) {
        if (depth == length) {
            consider(prefix[static_cast<size_t>(depth)]);
            return;
        }
        const int k = static_cast<int>(g.alphabet.size());
        for (int i = 0; i < k; i++) {
            if (depth > 0 && letter_at(g, i ^ 2) == word[static_cast<size_t>(depth) - 1]) {
                continue;  // adjacent inverse pair; reduces to a shorter word
            }
            word[static_cast<size_t>(depth)] = letter_at(g, i);
            prefix[static_cast<size_t>(depth) + 1] =
                g.mats[static_cast<size_t>(i)] * prefix[static_cast<size_t>(depth)];
            dfs(depth + 1);
        }
    }
};

void merge_into(SearchResult& acc, std::optional<double>& acc_du, const BfWorker& w) {
    acc.evaluations += w.evaluations;
    if (w.best_word.empty() && w.best_score == kInf) {
        return;
    }
    if (acc.best_word.empty() && acc.best_score == kInf) {
        acc.best_score = w.best_score;
        acc.best_word = w.best_word;
        acc_du = w.best_du;
        return;
    }
    if (w.best_score < acc.best_score ||
        (w.best_score == acc.best_score && w.best_word < acc.best_word)) {
        acc.best_score = w.best_score;
        acc.best_word = w.best_word;
        acc_du = w.best_du;
    }
}

}  // namespace

SearchResult brute_force(const GeneratorSet& g, const SearchConfig& cfg, int threads) {
    if (cfg.length < 0) {
        throw std::invalid_argument("negative word length");
    }
    if (threads < 1) {
        threads = 1;
    }

    SearchResult result;
    result.best_score = kInf;
    result.seed = cfg.seed;
    std::optional<double> du;

    if (cfg.length == 0) {
        BfWorker w(g, cfg.objective, 0);
        w.dfs(0);
        merge_into(result, du, w);
    } else {
        const int k = static_cast<int>(g.alphabet.size());
        std::vector<BfWorker> workers;
        workers.reserve(static_cast<size_t>(k));
        for (int i = 0; i < k; i++) {
            workers.emplace_back(g, cfg.objective, cfg.length);
        }
        auto run_stratum = [&](int i) {
            BfWorker& w = workers[static_cast<size_t>(i)];
            w.word[0] = letter_at(g, i);
            w.prefix[1] = g.mats[static_cast<size_t>(i)];
            w.dfs(1);
        };
        if (threads == 1) {
            for (int i = 0; i < k; i++) {
                run_stratum(i);
            }
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; t++) {
                pool.emplace_back([&, t] {
                    for (int i = t; i < k; i += threads) {
                        run_stratum(i);
                    }
                });
            }
            for (auto& th : pool) {
                th.join();
            }
        }
        // Strata merge in fixed order, so the reduction is identical to the
        // serial scan regardless of the thread schedule.
        for (const BfWorker& w : workers) {
            merge_into(result, du, w);
        }
    }

    if (result.best_score == kInf) {
        throw std::runtime_error("infeasible under unitarity cap");
    }
    if (cfg.objective.kind == ObjectiveKind::CnotClass) {
        result.d_u = du;
    }
    return result;
}

double acceptance_probability(double d, double d_prime) {
    const double delta = std::abs(d_prime - d);
    if (delta == 0.0 || std::isnan(delta)) {
        return 1.0;  // equal scores; NaN occurs only for two infinite scores
    }
    if (std::isinf(delta)) {
        return 0.0;  // finite score never trades for an infinitely worse one
    }
    // The 1e-12 nudge keeps gaps sitting an ulp below a power of ten (e.g.
    // 0.6 - 0.5) in their intended decade.
    const double t = std::pow(10.0, std::floor(std::log10(delta) + 1e-12));
    return std::min(1.0, std::exp(-delta / t));
}

SearchResult mc_search(const GeneratorSet& g, const SearchConfig& cfg,
                       std::vector<double>* sweep_best) {
    if (cfg.length < 1) {
        throw std::invalid_argument("word length must be positive");
    }
    if (!(cfg.tolerance > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (cfg.max_sweeps < 1) {
        throw std::invalid_argument("sweep budget must be positive");
    }

    SplitMix64 rng(cfg.seed);
    const int k = static_cast<int>(g.alphabet.size());
    const size_t length = static_cast<size_t>(cfg.length);
    const Eigen::Index dim = g.dim();

    std::string word(length, '?');
    for (size_t i = 0; i < length; i++) {
        word[i] = letter_at(g, static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k))));
    }

    SearchResult result;
    result.seed = cfg.seed;

    double d = score_matrix(evaluate(word, g), cfg.objective).score;
    result.evaluations = 1;
    double best_score = d;
    std::string best_word = word;
    int completed_sweeps = 0;

    auto finish = [&]() {
        result.best_word = best_word;
        result.best_score = best_score;
        result.sweeps_used = completed_sweeps;
        if (cfg.objective.kind == ObjectiveKind::CnotClass) {
            result.d_u = score_matrix(evaluate(best_word, g), cfg.objective).du;
        }
        return result;
    };

    if (best_score < cfg.tolerance) {
        return finish();
    }

    // suffix[i] = product of the letters after position i-1, in application
    // order; candidate matrices are then two products instead of L.
    std::vector<Matrix> suffix(length + 1);
    for (int sweep = 1; sweep <= cfg.max_sweeps; sweep++) {
        suffix[length] = Matrix::Identity(dim, dim);
        for (size_t i = length; i-- > 0;) {
            suffix[i] = suffix[i + 1] * g.matrix(word[i]);
        }
        Matrix prefix = Matrix::Identity(dim, dim);
        for (size_t pos = 0; pos < length; pos++) {
            for (int i = 0; i < k; i++) {
                const char cand = letter_at(g, i);
                if (cand == word[pos]) {
                    continue;
                }
                const Matrix u = suffix[pos + 1] * (g.mats[static_cast<size_t>(i)] * prefix);
                const double d_prime = score_matrix(u, cfg.objective).score;
                result.evaluations++;
                if (d_prime < best_score) {
                    best_score = d_prime;
                    best_word = word;
                    best_word[pos] = cand;
                }
                if (d_prime < d) {
                    word[pos] = cand;
                    d = d_prime;
                    break;  // accepted improvement; advance to the next position
                }
                if (rng.u01() < acceptance_probability(d, d_prime)) {
                    word[pos] = cand;
                    d = d_prime;
                }
            }
            prefix = g.matrix(word[pos]) * prefix;
            if (best_score < cfg.tolerance) {
                return finish();
            }
        }
        completed_sweeps = sweep;
        if (sweep_best != nullptr) {
            sweep_best->push_back(best_score);
        }
    }
    return finish();
}

}  // namespace anyonc
