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

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "anyonc/anyon_model.hpp"
#include "anyonc/linalg.hpp"
#include "anyonc/metrics.hpp"
#include "anyonc/rng.hpp"
#include "anyonc/search.hpp"
#include "anyonc/ska.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace anyonc;

constexpr const char* kVersion = "0.1.0";

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string iso_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(row);
    }
    return rows;
}

Matrix target_matrix(const std::string& name) {
    if (name == "H") {
        return gate_h();
    }
    if (name == "T") {
        return gate_t();
    }
    throw std::invalid_argument("unknown target");
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error("cannot write output file");
    }
    f << content;
    if (!f.good()) {
        throw std::runtime_error("cannot write output file");
    }
}

void write_manifest(const std::string& out, const std::string& command, const json& config) {
    json m;
    m["command"] = command;
    m["config"] = config;
    m["version"] = kVersion;
    m["timestamp"] = iso_timestamp();
    write_text_file(out + ".manifest.json", m.dump(2) + "\n");
}

void emit(const std::string& out, const std::string& content, const std::string& command,
          const json& config) {
    if (out.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    write_text_file(out, content);
    write_manifest(out, command, config);
}

double snap_to_grid(double alpha) { return std::round(alpha * 1000.0) / 1000.0; }

std::vector<double> expand_alphas(bool has_alpha, double alpha, bool has_start, double start,
                                  bool has_end, double end, bool has_step, double step,
                                  bool grid) {
    std::vector<double> out;
    if (has_alpha) {
        out.push_back(grid ? snap_to_grid(alpha) : alpha);
        return out;
    }
    if (!has_start || !has_end || !has_step) {
        throw std::invalid_argument("malformed alpha range");
    }
    if (!(step > 0.0) || end < start - 1e-12) {
        throw std::invalid_argument("malformed alpha range");
    }
    const long long count = static_cast<long long>(std::floor((end - start) / step + 1e-9)) + 1;
    if (count < 1 || count > 1000000) {
        throw std::invalid_argument("malformed alpha range");
    }
    out.reserve(static_cast<size_t>(count));
    for (long long i = 0; i < count; i++) {
        const double a = start + static_cast<double>(i) * step;
        out.push_back(grid ? snap_to_grid(a) : a);
    }
    return out;
}

int effective_threads(int flag_value) {
    if (const char* env = std::getenv("ANYON_THREADS")) {
        char* tail = nullptr;
        const long v = std::strtol(env, &tail, 10);
        if (tail != env && *tail == '\0' && v >= 1) {
            return static_cast<int>(v);
        }
    }
    return flag_value >= 1 ? flag_value : 1;
}

struct GridCell {
    double alpha;
    int length;
};

// Runs one compute per cell on a small worker pool. Rows land at their cell
// index, so output order never depends on the schedule. Completed rows are
// appended to the partial file as they finish; `done` carries rows recovered
// from an earlier interrupted run.
std::vector<std::string> run_cells(const std::vector<GridCell>& cells, int threads,
                                   const std::map<std::string, std::string>& done,
                                   const std::string& partial_path,
                                   const std::function<std::string(const GridCell&)>& compute) {
    std::vector<std::string> rows(cells.size());
    std::vector<char> needs(cells.size(), 1);
    for (size_t i = 0; i < cells.size(); i++) {
        const std::string key = fmt17(cells[i].alpha) + "," + std::to_string(cells[i].length);
        auto it = done.find(key);
        if (it != done.end()) {
            rows[i] = it->second;
            needs[i] = 0;
        }
    }

    std::ofstream partial;
    if (!partial_path.empty()) {
        partial.open(partial_path, std::ios::binary | std::ios::app);
        if (!partial) {
            throw std::runtime_error("cannot write output file");
        }
    }

    std::mutex io_mutex;
    std::atomic<size_t> next{0};
    std::exception_ptr failure;

    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
            if (!needs[i]) {
                continue;
            }
            try {
                std::string row = compute(cells[i]);
                std::lock_guard<std::mutex> lock(io_mutex);
                if (partial.is_open()) {
                    partial << row << "\n";
                    partial.flush();
                }
                rows[i] = std::move(row);
            } catch (...) {
                std::lock_guard<std::mutex> lock(io_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(cells.size());
                return;
            }
        }
    };

    if (threads <= 1 || cells.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const int n = std::min<int>(threads, static_cast<int>(cells.size()));
        for (int t = 0; t < n; t++) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

std::map<std::string, std::string> load_partial(const std::string& path, int key_fields) {
    std::map<std::string, std::string> done;
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        return done;
    }
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) {
            continue;
        }
        size_t pos = 0;
        int commas = 0;
        while (commas < key_fields && pos != std::string::npos) {
            pos = line.find(',', pos == 0 && commas == 0 ? 0 : pos + 1);
            commas++;
        }
        if (pos == std::string::npos) {
            continue;
        }
        done[line.substr(0, pos)] = line;
    }
    return done;
}

// ---------------------------------------------------------------------------

int run_ebm(double alpha, int arity, const std::string& out) {
    const AnyonParams p(alpha);
    const GeneratorSet g = arity == 1 ? one_qubit_generators(p) : two_qubit_generators(p);
    json j;
    j["alpha"] = alpha;
    j["arity"] = arity;
    json letters;
    for (size_t i = 0; i < g.alphabet.size(); i++) {
        letters[std::string(1, g.alphabet[i])] = matrix_json(g.mats[i]);
    }
    j["letters"] = letters;
    if (arity == 2) {
        j["j4_defect"] = j4_defect(p);
    }
    json config;
    config["alpha"] = alpha;
    config["arity"] = arity;
    emit(out, j.dump(2) + "\n", "ebm", config);
    return 0;
}

int run_sweep(const std::string& target, const std::vector<double>& alphas,
              std::vector<int> lengths, const std::string& out, int threads) {
    const Matrix tmat = target_matrix(target);
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    if (lengths.empty()) {
        throw std::invalid_argument("no lengths given");
    }
    for (int len : lengths) {
        if (len < 0) {
            throw std::invalid_argument("negative word length");
        }
        if (len > 13) {
            std::fprintf(stderr, "warning: one-qubit brute force above L = 13 is hours-scale\n");
        }
    }

    std::vector<GridCell> cells;
    for (double a : alphas) {
        for (int len : lengths) {
            cells.push_back({a, len});
        }
    }
    std::sort(cells.begin(), cells.end(), [](const GridCell& x, const GridCell& y) {
        return x.alpha != y.alpha ? x.alpha < y.alpha : x.length < y.length;
    });

    const std::string partial_path = out.empty() ? "" : out + ".partial";
    const auto done = partial_path.empty() ? std::map<std::string, std::string>{}
                                           : load_partial(partial_path, 2);
    const int cell_threads = cells.size() > 1 ? 1 : threads;
    const int pool_threads = cells.size() > 1 ? threads : 1;

    auto compute = [&](const GridCell& cell) -> std::string {
        const AnyonParams p(cell.alpha);
        const GeneratorSet g = one_qubit_generators(p);
        SearchConfig cfg;
        cfg.length = cell.length;
        cfg.objective = SearchObjective::one_qubit(tmat);
        const SearchResult r = brute_force(g, cfg, cell_threads);
        return fmt17(cell.alpha) + "," + std::to_string(cell.length) + "," + target + "," +
               fmt17(r.best_score) + "," + r.best_word;
    };

    const std::vector<std::string> rows = run_cells(cells, pool_threads, done, partial_path, compute);

    std::string csv = "alpha,length,target,best_d,best_word\n";
    for (const std::string& row : rows) {
        csv += row + "\n";
    }
    json config;
    config["target"] = target;
    config["alphas"] = alphas;
    config["lengths"] = lengths;
    config["threads"] = threads;
    emit(out, csv, "sweep", config);
    if (!partial_path.empty()) {
        std::error_code ec;
        std::filesystem::remove(partial_path, ec);
    }
    return 0;
}

int run_mc(const std::string& target, double alpha, int length, int num, double tol,
           std::uint64_t seed, int runs, const std::string& out) {
    if (runs < 1) {
        throw std::invalid_argument("runs must be positive");
    }
    const Matrix tmat = target_matrix(target);
    const AnyonParams p(alpha);
    const GeneratorSet g = one_qubit_generators(p);

    std::string csv = "alpha,length,target,seed,run,sweeps_used,best_d,best_word\n";
    double min_d = std::numeric_limits<double>::infinity();
    std::string min_word;
    for (int run = 1; run <= runs; run++) {
        SearchConfig cfg;
        cfg.length = length;
        cfg.tolerance = tol;
        cfg.max_sweeps = num;
        cfg.seed = substream_seed(seed, static_cast<std::uint64_t>(run - 1));
        cfg.objective = SearchObjective::one_qubit(tmat);
        const SearchResult r = mc_search(g, cfg);
        if (r.best_score < min_d) {
            min_d = r.best_score;
            min_word = r.best_word;
        }
        csv += fmt17(alpha) + "," + std::to_string(length) + "," + target + "," +
               std::to_string(cfg.seed) + "," + std::to_string(run) + "," +
               std::to_string(r.sweeps_used) + "," + fmt17(r.best_score) + "," + r.best_word +
               "\n";
    }
    csv += fmt17(alpha) + "," + std::to_string(length) + "," + target + "," +
           std::to_string(seed) + ",min,," + fmt17(min_d) + "," + min_word + "\n";

    json config;
    config["target"] = target;
    config["alpha"] = alpha;
    config["length"] = length;
    config["num"] = num;
    config["tol"] = tol;
    config["seed"] = seed;
    config["runs"] = runs;
    emit(out, csv, "mc", config);
    return 0;
}

int run_ska(const std::string& target, double alpha, int level, int length, int num, double tol,
            std::uint64_t seed, const std::string& out) {
    if (level < 0 || level > 4) {
        throw std::invalid_argument("level outside [0, 4]");
    }
    const AnyonParams p(alpha);
    const GeneratorSet g = one_qubit_generators(p);
    SearchConfig cfg;
    cfg.length = length;
    cfg.tolerance = tol;
    cfg.max_sweeps = num;
    cfg.seed = seed;
    const SkaTrace trace = mc_enhanced_ska(target_matrix(target), level, g, cfg);

    json j;
    j["target"] = target;
    j["alpha"] = alpha;
    j["level"] = level;
    j["base_length"] = length;
    j["num"] = num;
    j["tol"] = tol;
    j["seed"] = seed;
    json levels = json::array();
    for (const SkaLevel& lv : trace.levels) {
        json rec;
        rec["n"] = lv.level;
        rec["d"] = lv.distance;
        rec["word_length"] = lv.word_length;
        levels.push_back(rec);
    }
    j["levels"] = levels;

    json config;
    config["target"] = target;
    config["alpha"] = alpha;
    config["level"] = level;
    config["base_length"] = length;
    config["num"] = num;
    config["tol"] = tol;
    config["seed"] = seed;
    emit(out, j.dump(2) + "\n", "ska", config);
    return 0;
}

int run_cnot(const std::vector<double>& alphas, std::vector<int> lengths,
             const std::string& method, double du_cap, int num, double tol, std::uint64_t seed,
             const std::string& out, int threads) {
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    if (lengths.empty()) {
        throw std::invalid_argument("no lengths given");
    }
    for (int len : lengths) {
        if (len < 0) {
            throw std::invalid_argument("negative word length");
        }
        if (method == "bf" && len > 7) {
            throw std::invalid_argument("length above brute-force guard");
        }
    }

    std::vector<GridCell> cells;
    for (double a : alphas) {
        for (int len : lengths) {
            cells.push_back({a, len});
        }
    }
    std::sort(cells.begin(), cells.end(), [](const GridCell& x, const GridCell& y) {
        return x.alpha != y.alpha ? x.alpha < y.alpha : x.length < y.length;
    });

    const std::string partial_path = out.empty() ? "" : out + ".partial";
    const auto done = partial_path.empty() ? std::map<std::string, std::string>{}
                                           : load_partial(partial_path, 2);
    const int cell_threads = cells.size() > 1 ? 1 : threads;
    const int pool_threads = cells.size() > 1 ? threads : 1;

    auto compute = [&](const GridCell& cell) -> std::string {
        const AnyonParams p(cell.alpha);
        const GeneratorSet g = two_qubit_generators(p);
        SearchConfig cfg;
        cfg.length = cell.length;
        cfg.objective = SearchObjective::cnot_class(du_cap);
        std::string d_cnot, d_u, word, flag;
        // Outside the feasibility window the mixing letters are capped out and
        // the best surviving words are local gates at d_cnot = 5; any
        // threshold inside the 1e-10 .. 5 cliff separates the regimes.
        auto classify = [](double best) {
            return best < 1e-10 ? "low_error" : best >= 1e-6 ? "infeasible" : "";
        };
        if (method == "bf") {
            try {
                const SearchResult r = brute_force(g, cfg, cell_threads);
                d_cnot = fmt17(r.best_score);
                d_u = fmt17(r.d_u.value_or(0.0));
                word = r.best_word;
                flag = classify(r.best_score);
            } catch (const std::runtime_error& e) {
                if (std::string(e.what()) != "infeasible under unitarity cap") {
                    throw;
                }
                flag = "infeasible";
            }
        } else {
            cfg.tolerance = tol;
            cfg.max_sweeps = num;
            const size_t idx = static_cast<size_t>(&cell - cells.data());
            cfg.seed = substream_seed(seed, static_cast<std::uint64_t>(idx));
            const SearchResult r = mc_search(g, cfg);
            if (std::isinf(r.best_score)) {
                flag = "infeasible";
            } else {
                d_cnot = fmt17(r.best_score);
                d_u = fmt17(r.d_u.value_or(0.0));
                word = r.best_word;
                flag = classify(r.best_score);
            }
        }
        return fmt17(cell.alpha) + "," + std::to_string(cell.length) + "," + fmt17(du_cap) + "," +
               d_cnot + "," + d_u + "," + word + "," + flag;
    };

    const std::vector<std::string> rows = run_cells(cells, pool_threads, done, partial_path, compute);

    std::string csv = "alpha,length,du_cap,d_cnot,d_u,word,flag\n";
    for (const std::string& row : rows) {
        csv += row + "\n";
    }
    json config;
    config["alphas"] = alphas;
    config["lengths"] = lengths;
    config["method"] = method;
    config["du_cap"] = du_cap;
    config["num"] = num;
    config["tol"] = tol;
    config["seed"] = seed;
    config["threads"] = threads;
    emit(out, csv, "cnot", config);
    if (!partial_path.empty()) {
        std::error_code ec;
        std::filesystem::remove(partial_path, ec);
    }
    return 0;
}

struct ConventionCheck {
    double value_frozen;
    double value_reversed;
    bool ok_frozen;
    bool ok_reversed;
};

int run_verify(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "error: cannot open fixture file\n");
        return 1;
    }
    json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: fixture file parse error: %s\n", e.what());
        return 1;
    }

    const json fixtures = j.value("fixtures", json::array());
    if (fixtures.empty()) {
        std::printf("verified 0 fixtures (warning: empty fixture list)\n");
        return 0;
    }

    int binding = 0;
    bool all_frozen = true;
    bool all_reversed = true;
    try {
        for (const json& fx : fixtures) {
            const std::string table = fx.at("table").get<std::string>();
            const double alpha = fx.at("alpha").get<double>();
            const std::string target = fx.at("target").get<std::string>();
            const std::string word = fx.at("word").get<std::string>();
            const bool informational = fx.value("informational", false);
            const std::string reversed(word.rbegin(), word.rend());
            const AnyonParams p(alpha);

            bool ok_frozen = true;
            bool ok_reversed = true;
            std::string detail;
            if (table == "I") {
                const GeneratorSet g = one_qubit_generators(p);
                const Matrix tm = target_matrix(target);
                const double expected = fx.at("expected_d").get<double>();
                const double tol = fx.at("tolerance").get<double>();
                const double d_f = phase_distance(tm, evaluate(word, g));
                const double d_r = phase_distance(tm, evaluate(reversed, g));
                ok_frozen = std::abs(d_f - expected) <= tol;
                ok_reversed = std::abs(d_r - expected) <= tol;
                detail = "d_frozen=" + fmt17(d_f) + " d_reversed=" + fmt17(d_r) +
                         " expected=" + fmt17(expected);
            } else if (table == "III") {
                const GeneratorSet g = two_qubit_generators(p);
                const double e_cnot = fx.at("expected_d_cnot").get<double>();
                const double e_u = fx.at("expected_d_u").get<double>();
                const double tol_cnot = fx.at("tolerance_d_cnot").get<double>();
                const double tol_u = fx.at("tolerance_d_u").get<double>();
                auto eval_pair = [&](const std::string& w) {
                    const Matrix u = evaluate(w, g);
                    const auto [a, nc] = computational_block(u);
                    (void)nc;
                    return std::pair<double, double>{cnot_class_distance(a),
                                                     unitarity_measure(a)};
                };
                const auto [cf, uf] = eval_pair(word);
                const auto [cr, ur] = eval_pair(reversed);
                ok_frozen = std::abs(cf - e_cnot) <= tol_cnot && std::abs(uf - e_u) <= tol_u;
                ok_reversed = std::abs(cr - e_cnot) <= tol_cnot && std::abs(ur - e_u) <= tol_u;
                detail = "d_cnot_frozen=" + fmt17(cf) + " d_u_frozen=" + fmt17(uf) +
                         " d_cnot_reversed=" + fmt17(cr) + " d_u_reversed=" + fmt17(ur);
            } else {
                std::fprintf(stderr, "error: unknown fixture table\n");
                return 1;
            }

            const char* matched = ok_frozen && ok_reversed ? "either"
                                  : ok_frozen              ? "frozen"
                                  : ok_reversed            ? "reversed"
                                                           : "none";
            std::printf("table %s alpha %s target %s%s: %s matched=%s\n", table.c_str(),
                        fmt17(alpha).c_str(), target.c_str(),
                        informational ? " (informational)" : "", detail.c_str(), matched);
            if (!informational) {
                binding++;
                all_frozen = all_frozen && ok_frozen;
                all_reversed = all_reversed && ok_reversed;
            }
        }
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "error: fixture file parse error: %s\n", e.what());
        return 1;
    }

    const char* convention = all_frozen && all_reversed ? "either"
                             : all_frozen               ? "frozen"
                             : all_reversed             ? "reversed"
                                                        : "none";
    std::printf("verified %zu fixtures (%d binding): convention=%s\n",
                static_cast<size_t>(fixtures.size()), binding, convention);
    return (all_frozen || all_reversed) ? 0 : 2;
}

int run_word_eval(const std::string& word, double alpha, int arity, const std::string& target) {
    const AnyonParams p(alpha);
    if (arity == 1) {
        const GeneratorSet g = one_qubit_generators(p);
        const double d = phase_distance(target_matrix(target), evaluate(word, g));
        std::printf("d=%s\n", fmt17(d).c_str());
    } else {
        const GeneratorSet g = two_qubit_generators(p);
        const Matrix u = evaluate(word, g);
        const auto [a, nc] = computational_block(u);
        (void)nc;
        std::printf("d_cnot=%s d_u=%s\n", fmt17(cnot_class_distance(a)).c_str(),
                    fmt17(unitarity_measure(a)).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anyonc: braidword compiler for a non-semisimple Ising anyon model"};
    app.set_version_flag("--version", std::string("anyonc ") + kVersion);
    app.require_subcommand(1);

    // ebm
    auto* ebm = app.add_subcommand("ebm", "Export elementary braiding matrices as JSON");
    double ebm_alpha = 2.5;
    int ebm_arity = 1;
    std::string ebm_out;
    ebm->add_option("--alpha", ebm_alpha, "Neglecton weight, in (2, 3)")->required();
    ebm->add_option("--arity", ebm_arity, "1 or 2 strands acted on")
        ->check(CLI::IsMember({1, 2}));
    ebm->add_option("--out", ebm_out, "Output path (stdout when omitted)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Brute-force minimum d over an alpha x L grid");
    std::string sweep_target;
    double sweep_alpha = 0.0, sweep_start = 0.0, sweep_end = 0.0, sweep_step = 0.0;
    std::vector<int> sweep_lengths;
    std::string sweep_out;
    int sweep_threads = 1;
    bool sweep_grid = false;
    sweep->add_option("--target", sweep_target, "H or T")
        ->required()
        ->check(CLI::IsMember({"H", "T"}));
    sweep->add_option("--alpha", sweep_alpha, "Single alpha value");
    sweep->add_option("--alpha-start", sweep_start, "Range start");
    sweep->add_option("--alpha-end", sweep_end, "Range end (inclusive)");
    sweep->add_option("--alpha-step", sweep_step, "Range step");
    sweep->add_option("--lengths,--length", sweep_lengths, "Word lengths")
        ->required()
        ->delimiter(',');
    sweep->add_option("--out", sweep_out, "Output CSV path (stdout when omitted)");
    sweep->add_option("--threads", sweep_threads, "Worker threads");
    sweep->add_flag("--grid", sweep_grid, "Snap alpha values to the 1/1000 grid");

    // mc
    auto* mc = app.add_subcommand("mc", "Monte Carlo local search for a one-qubit target");
    std::string mc_target;
    double mc_alpha = 0.0, mc_tol = 1e-8;
    int mc_length = 0, mc_num = 2000, mc_runs = 1;
    std::uint64_t mc_seed = 1;
    std::string mc_out;
    mc->add_option("--target", mc_target, "H or T")->required()->check(CLI::IsMember({"H", "T"}));
    mc->add_option("--alpha", mc_alpha, "Neglecton weight")->required();
    mc->add_option("--length", mc_length, "Word length")->required();
    mc->add_option("--num", mc_num, "Sweep budget per run");
    mc->add_option("--tol", mc_tol, "Early-stop tolerance on d");
    mc->add_option("--seed", mc_seed, "Master seed");
    mc->add_option("--runs", mc_runs, "Independent runs (substream seeds)");
    mc->add_option("--out", mc_out, "Output CSV path (stdout when omitted)");

    // ska
    auto* ska = app.add_subcommand("ska", "Monte-Carlo-enhanced Solovay-Kitaev recursion");
    std::string ska_target;
    double ska_alpha = 0.0, ska_tol = 1e-8;
    int ska_level = 3, ska_length = 40, ska_num = 500;
    std::uint64_t ska_seed = 1;
    std::string ska_out;
    ska->add_option("--target", ska_target, "H or T")
        ->required()
        ->check(CLI::IsMember({"H", "T"}));
    ska->add_option("--alpha", ska_alpha, "Neglecton weight")->required();
    ska->add_option("--level", ska_level, "Recursion depth (at most 4)");
    ska->add_option("--length", ska_length, "Base word length L0");
    ska->add_option("--num", ska_num, "Sweep budget per base search");
    ska->add_option("--tol", ska_tol, "Early-stop tolerance per base search");
    ska->add_option("--seed", ska_seed, "Master seed");
    ska->add_option("--out", ska_out, "Output JSON path (stdout when omitted)");

    // cnot
    auto* cnot = app.add_subcommand("cnot", "Two-qubit CNOT-class search under a unitarity cap");
    double cnot_alpha = 0.0, cnot_start = 0.0, cnot_end = 0.0, cnot_step = 0.0;
    std::vector<int> cnot_lengths{1};
    std::string cnot_method = "bf";
    double cnot_cap = 0.2, cnot_tol = 1e-8;
    int cnot_num = 2000, cnot_threads = 1;
    std::uint64_t cnot_seed = 1;
    std::string cnot_out;
    bool cnot_grid = false;
    cnot->add_option("--alpha", cnot_alpha, "Single alpha value");
    cnot->add_option("--alpha-start", cnot_start, "Range start");
    cnot->add_option("--alpha-end", cnot_end, "Range end (inclusive)");
    cnot->add_option("--alpha-step", cnot_step, "Range step");
    cnot->add_option("--lengths,--length", cnot_lengths, "Word lengths")->delimiter(',');
    cnot->add_option("--method", cnot_method, "bf or mc")->check(CLI::IsMember({"bf", "mc"}));
    cnot->add_option("--du-cap", cnot_cap, "Unitarity cap on the computational block");
    cnot->add_option("--num", cnot_num, "Sweep budget per run (mc only)");
    cnot->add_option("--tol", cnot_tol, "Early-stop tolerance (mc only)");
    cnot->add_option("--seed", cnot_seed, "Master seed (mc only)");
    cnot->add_option("--out", cnot_out, "Output CSV path (stdout when omitted)");
    cnot->add_option("--threads", cnot_threads, "Worker threads");
    cnot->add_flag("--grid", cnot_grid, "Snap alpha values to the 1/1000 grid");

    // verify
    auto* verify = app.add_subcommand("verify", "Check shipped fixture words and distances");
    std::string verify_path;
    verify->add_option("--fixtures", verify_path, "Fixture JSON path")->required();

    // word-eval
    auto* weval = app.add_subcommand("word-eval", "Evaluate one braidword's distance");
    std::string we_word, we_target = "H";
    double we_alpha = 0.0;
    int we_arity = 1;
    weval->add_option("--word", we_word, "Braidword letters")->required();
    weval->add_option("--alpha", we_alpha, "Neglecton weight")->required();
    weval->add_option("--arity", we_arity, "1 or 2 strands")->check(CLI::IsMember({1, 2}));
    weval->add_option("--target", we_target, "H or T (arity 1 only)")
        ->check(CLI::IsMember({"H", "T"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (ebm->parsed()) {
            return run_ebm(ebm_alpha, ebm_arity, ebm_out);
        }
        if (sweep->parsed()) {
            const auto alphas = expand_alphas(
                sweep->count("--alpha") > 0, sweep_alpha, sweep->count("--alpha-start") > 0,
                sweep_start, sweep->count("--alpha-end") > 0, sweep_end,
                sweep->count("--alpha-step") > 0, sweep_step, sweep_grid);
            return run_sweep(sweep_target, alphas, sweep_lengths, sweep_out,
                             effective_threads(sweep_threads));
        }
        if (mc->parsed()) {
            return run_mc(mc_target, mc_alpha, mc_length, mc_num, mc_tol, mc_seed, mc_runs,
                          mc_out);
        }
        if (ska->parsed()) {
            return run_ska(ska_target, ska_alpha, ska_level, ska_length, ska_num, ska_tol,
                           ska_seed, ska_out);
        }
        if (cnot->parsed()) {
            const auto alphas = expand_alphas(
                cnot->count("--alpha") > 0, cnot_alpha, cnot->count("--alpha-start") > 0,
                cnot_start, cnot->count("--alpha-end") > 0, cnot_end,
                cnot->count("--alpha-step") > 0, cnot_step, cnot_grid);
            return run_cnot(alphas, cnot_lengths, cnot_method, cnot_cap, cnot_num, cnot_tol,
                            cnot_seed, cnot_out, effective_threads(cnot_threads));
        }
        if (verify->parsed()) {
            return run_verify(verify_path);
        }
        if (weval->parsed()) {
            return run_word_eval(we_word, we_alpha, we_arity, we_target);
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 1;
}
