// Acceptance suite: one criterion per invocation, one [PASS]/[FAIL] line per
// criterion (plus indented detail lines). Exit 0 on pass, 1 on fail.
//
//   acceptance_tests <1..8 | slow-137>
//
//  1  17-cycle pinned verification values
//  2  cycle-family verdicts around the 17-cycle
//  3  4-cycle range-definition sensitivity
//  4  published counter-example edge lists verify
//  5  desk-scale search reproduction
//  6  beam-width sensitivity
//  7  lazy-NMCS reliability
//  8  property suites (no timing dependence)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iterator>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "refute/conjecture.hpp"
#include "refute/invariants.hpp"
#include "refute/search.hpp"
#include "refute/spectral.hpp"

using namespace refute;
using testutil::load_graph;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void detail(const std::string& line) { std::printf("  - %s\n", line.c_str()); }

bool verdict(int criterion, bool ok, const std::string& summary) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
                summary.c_str());
    return ok;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

const Conjecture& conj(const char* id) {
    const Conjecture* c = find_conjecture(id);
    if (!c) {
        std::printf("[FAIL] missing conjecture %s\n", id);
        std::exit(1);
    }
    return *c;
}

// ---------------------------------------------------------------- criterion 1

bool criterion1() {
    const auto t0 = Clock::now();
    const Graph c17 = load_graph("g197_c17.edges");
    const Conjecture& c = conj("graffiti-197");
    const ScoreReport r = score(c, c17);
    const bool refuted = is_counterexample(c, c17);
    const double elapsed = seconds_since(t0);

    const bool lhs_ok = r.defined && r.lhs > 1.9649 && r.lhs < 1.9669;
    const bool rhs_ok = r.defined && r.rhs > 1.7025 && r.rhs < 1.7045;
    const bool time_ok = elapsed < 1.0;
    detail("lhs " + fmt(r.lhs) + " (want 1.9649..1.9669), rhs " + fmt(r.rhs) +
           " (want 1.7025..1.7045), score " + fmt(r.score));
    detail(std::string("verdict ") + (refuted ? "refuted" : "holds") + ", " +
           fmt(elapsed) + " s");
    return verdict(1, lhs_ok && rhs_ok && refuted && time_ok,
                   "17-cycle pinned verification values");
}

// ---------------------------------------------------------------- criterion 2

bool criterion2() {
    const auto t0 = Clock::now();
    const Conjecture& c = conj("graffiti-197");
    struct Row {
        const char* file;
        int n;
        bool expect_refuted;
    };
    const Row rows[] = {
        {"g197_c17.edges", 17, true}, {"cycle_21.edges", 21, true},
        {"cycle_25.edges", 25, true}, {"cycle_16.edges", 16, false},
        {"cycle_18.edges", 18, false}, {"cycle_19.edges", 19, false},
        {"cycle_20.edges", 20, false},
    };
    bool ok = true;
    for (const Row& row : rows) {
        const Graph g = load_graph(row.file);
        const bool refuted = is_counterexample(c, g);
        const bool match = refuted == row.expect_refuted;
        std::string line = "C" + std::to_string(row.n) + ": expected " +
                           (row.expect_refuted ? "refuted" : "holds") +
                           ", computed " + (refuted ? "refuted" : "holds");
        if (!match) {
            line +=
                "  << MISMATCH: direct computation under the criterion-1 "
                "pinned definitions yields a positive score; the expected "
                "'holds' is unsatisfiable alongside criterion 1";
            ok = false;
        }
        detail(line);
    }
    const double elapsed = seconds_since(t0);
    detail(fmt(elapsed) + " s (limit 5)");
    ok = ok && elapsed < 5.0;
    return verdict(2, ok, "cycle-family verdicts around the 17-cycle");
}

// ---------------------------------------------------------------- criterion 3

bool criterion3() {
    const auto t0 = Clock::now();
    const Graph c4 = load_graph("cycle_4.edges");
    const Conjecture& c = conj("graffiti-322");

    const std::optional<double> inv = inverse_even_sum(c4);
    const bool inv_ok = inv.has_value() && *inv == 4.0;  // exact by design
    detail("inverse-even sum " + (inv ? fmt(*inv) : std::string("undefined")) +
           " (want exactly 4)");

    const Spectrum dist = eigenvalues(distance_matrix(c4));
    const int distinct = distinct_count(dist, distinct_cluster_tolerance(dist));
    detail("distance spectrum distinct count " + std::to_string(distinct) +
           " (want 3)");

    ConjectureOptions by_count;
    by_count.range = RangeDef::DistinctCount;
    ConjectureOptions by_diff;
    by_diff.range = RangeDef::Diff;
    const bool refuted_count = is_counterexample(c, c4, by_count);
    const bool holds_diff = !is_counterexample(c, c4, by_diff);
    detail(std::string("distinct-count verdict ") +
           (refuted_count ? "refuted" : "holds") + ", diff verdict " +
           (holds_diff ? "holds" : "refuted"));

    const double elapsed = seconds_since(t0);
    const bool ok = inv_ok && distinct == 3 && refuted_count && holds_diff &&
                    elapsed < 1.0;
    return verdict(3, ok, "4-cycle range-definition sensitivity");
}

// ---------------------------------------------------------------- criterion 4

bool criterion4() {
    const auto t0 = Clock::now();
    struct Row {
        const char* file;
        const char* id;
        int n;
    };
    const Row rows[] = {
        {"g289_n20.edges", "graffiti-289", 20},
        {"g301_n14.edges", "graffiti-301", 14},
        {"g30_n15.edges", "graffiti-30", 15},
        {"g29_n7.edges", "graffiti-29", 7},
        {"g137_n67.edges", "graffiti-137", 67},
        {"g139_n50.edges", "graffiti-139", 50},
    };
    bool ok = true;
    for (const Row& row : rows) {
        const Graph g = load_graph(row.file);
        const Conjecture& c = conj(row.id);
        const bool size_ok = g.order() == row.n;
        const bool class_ok = satisfies_class(g, c.accept_class);
        const bool refuted = is_counterexample(c, g);
        const ScoreReport r = score(c, g);
        detail(std::string(row.id) + ": n " + std::to_string(g.order()) +
               (size_ok ? "" : " (WRONG SIZE)") + ", class " +
               std::string(class_name(c.accept_class)) +
               (class_ok ? " ok" : " VIOLATED") + ", score " + fmt(r.score) +
               ", " + (refuted ? "refuted" : "NOT refuted"));
        ok = ok && size_ok && class_ok && refuted;
    }
    const double elapsed = seconds_since(t0);
    detail(fmt(elapsed) + " s (limit 10)");
    ok = ok && elapsed < 10.0;
    return verdict(4, ok, "published counter-example edge lists verify");
}

// ---------------------------------------------------------------- criterion 5

bool run_cell(const char* id, Algorithm algo, double budget, int seeds) {
    const Conjecture& c = conj(id);
    const GameRules rules{c.accept_class, c.default_target, c.min_size};
    SearchParams params;
    params.budget_seconds = budget;
    for (int seed = 1; seed <= seeds; ++seed) {
        const SearchOutcome out =
            run_search(algo, c, rules, ConjectureOptions{}, params,
                       static_cast<std::uint64_t>(seed));
        if (out.refuted) {
            detail(std::string(algorithm_name(algo)) + " " + id +
                   ": refuted with seed " + std::to_string(seed) + " in " +
                   fmt(out.elapsed_seconds) + " s (" +
                   std::to_string(out.evaluations) + " evaluations, n " +
                   std::to_string(out.graph.order()) + ")");
            return true;
        }
    }
    detail(std::string(algorithm_name(algo)) + " " + id +
           ": no refutation in " + std::to_string(seeds) + " seed(s) at " +
           fmt(budget) + " s each");
    return false;
}

bool criterion5() {
    struct Cell {
        const char* id;
        Algorithm algo;
        double budget;
        int seeds;  // deterministic algorithms run once
    };
    const Cell cells[] = {
        {"graffiti-197", Algorithm::Nrpa, 50.0, 10},
        {"graffiti-289", Algorithm::Gbfs, 60.0, 1},
        {"graffiti-139", Algorithm::Gbfs, 360.0, 1},
        {"graffiti-301", Algorithm::Nmcs, 30.0, 10},
        {"graffiti-29", Algorithm::Nmcs, 30.0, 10},
        {"graffiti-30", Algorithm::Grave, 30.0, 10},
        {"graffiti-30", Algorithm::Rave, 30.0, 10},
    };
    int passed = 0;
    for (const Cell& cell : cells) {
        passed += run_cell(cell.id, cell.algo, cell.budget, cell.seeds);
    }
    const int total = static_cast<int>(std::size(cells));
    return verdict(5, passed == total,
                   "desk-scale search reproduction (" +
                       std::to_string(passed) + "/" + std::to_string(total) +
                       " cells)");
}

// ---------------------------------------------------------------- criterion 6

bool criterion6() {
    const Conjecture& c = conj("graffiti-30");
    const GameRules rules{c.accept_class, c.default_target, c.min_size};
    SearchParams params;
    params.budget_seconds = 900.0;

    params.beam_width = 10;
    const SearchOutcome narrow =
        run_search(Algorithm::Beam, c, rules, ConjectureOptions{}, params, 1);
    detail("width 10: " + std::string(narrow.refuted ? "refuted" : "failed") +
           " (" + narrow.halt_reason + ", " +
           std::to_string(narrow.evaluations) + " evaluations, " +
           fmt(narrow.elapsed_seconds) + " s)");

    params.beam_width = 80;
    const SearchOutcome wide =
        run_search(Algorithm::Beam, c, rules, ConjectureOptions{}, params, 1);
    detail("width 80: " + std::string(wide.refuted ? "refuted" : "failed") +
           " (" + wide.halt_reason + ", " + std::to_string(wide.evaluations) +
           " evaluations, " + fmt(wide.elapsed_seconds) + " s)");

    if (narrow.refuted) {
        detail("<< MISMATCH: width 10 refutes graffiti-30 at every build "
               "target measured (12 through 50), always with fewer "
               "evaluations than width 80; a greedy-reachable counterexample "
               "family (m = n + 2) exists at every size, so the expected "
               "width-10 failure cannot occur under these rules");
    }

    return verdict(6, !narrow.refuted && wide.refuted,
                   "beam width 10 fails where width 80 succeeds");
}

// ---------------------------------------------------------------- criterion 7

bool criterion7() {
    const Conjecture& c = conj("graffiti-29");
    const GameRules rules{c.accept_class, c.default_target, c.min_size};
    SearchParams params;
    params.budget_seconds = 60.0;
    params.lnmcs_level = 4;

    int successes = 0;
    for (int seed = 1; seed <= 10; ++seed) {
        const SearchOutcome out =
            run_search(Algorithm::Lnmcs, c, rules, ConjectureOptions{}, params,
                       static_cast<std::uint64_t>(seed));
        detail("seed " + std::to_string(seed) + ": " +
               (out.refuted ? "refuted in " + fmt(out.elapsed_seconds) + " s"
                            : "failed (" + out.halt_reason + ")"));
        successes += out.refuted;
    }
    return verdict(7, successes >= 7,
                   "lazy-NMCS level 4 reliability (" +
                       std::to_string(successes) + "/10, need >= 7)");
}

// ---------------------------------------------------------------- criterion 8

// moment identities: eigenvalue multiset must reproduce tr A, ||A||_F^2, tr A^3
bool eigensolver_property_suite(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 12);
        SymMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) a.set_sym(i, j, entry(rng));

        const Spectrum s = eigenvalues(a);
        if (s.order() != n) return false;
        for (int i = 1; i < n; ++i)
            if (s.values[i - 1] < s.values[i]) return false;

        double tr1 = 0, tr2 = 0, tr3 = 0;
        for (int i = 0; i < n; ++i) {
            tr1 += a.at(i, i);
            for (int j = 0; j < n; ++j) {
                tr2 += a.at(i, j) * a.at(i, j);
                for (int k = 0; k < n; ++k)
                    tr3 += a.at(i, j) * a.at(j, k) * a.at(k, i);
            }
        }
        double m1 = 0, m2 = 0, m3 = 0;
        for (const double v : s.values) {
            m1 += v;
            m2 += v * v;
            m3 += v * v * v;
        }
        const double scale = std::max(1.0, s.max_abs());
        if (std::abs(m1 - tr1) > 1e-9 * n * scale) return false;
        if (std::abs(m2 - tr2) > 1e-9 * n * scale * scale) return false;
        if (std::abs(m3 - tr3) > 1e-8 * n * scale * scale * scale) return false;

        // similarity invariance under a random simultaneous permutation
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        SymMatrix p(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) p.at(i, j) = a.at(perm[i], perm[j]);
        const Spectrum sp = eigenvalues(p);
        for (int i = 0; i < n; ++i)
            if (std::abs(s.values[i] - sp.values[i]) > 1e-9 * scale)
                return false;
    }
    return true;
}

Graph random_connected_graph(std::mt19937_64& rng, int n, int extra_edges) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, static_cast<int>(rng() % static_cast<unsigned>(v)));
    for (int e = 0; e < extra_edges; ++e) {
        const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
        const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

// edge legality must agree with the girth of the candidate graph
bool class_legality_suite(std::mt19937_64& rng) {
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 7);  // 2..8
        const Graph g = random_connected_graph(rng, n, static_cast<int>(rng() % 3));
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                Graph h = g;
                h.add_edge(u, v);
                const std::optional<int> gi = girth(h);
                if (!gi.has_value()) return false;  // connected + edge => cycle
                if (satisfies_class(g, GraphClass::TriangleFree) &&
                    edge_is_class_legal(g, u, v, GraphClass::TriangleFree) !=
                        (*gi >= 4))
                    return false;
                if (satisfies_class(g, GraphClass::GirthAtLeast5) &&
                    edge_is_class_legal(g, u, v, GraphClass::GirthAtLeast5) !=
                        (*gi >= 5))
                    return false;
                if (satisfies_class(g, GraphClass::Tree) &&
                    edge_is_class_legal(g, u, v, GraphClass::Tree))
                    return false;  // a tree plus an edge is never a tree
            }
        }
    }
    return true;
}

bool replay_determinism_suite() {
    const GameRules rules{GraphClass::Any, 9, 3};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        std::mt19937_64 rng_a(seed), rng_b(seed);
        BuildState a = initial_state(), b = initial_state();
        auto step = [&rules](BuildState& s, std::mt19937_64& rng) {
            const std::vector<Move> moves = legal_moves(s, rules);
            if (moves.empty()) return false;
            apply_move_inplace(s, moves[rng() % moves.size()], rules);
            return true;
        };
        while (step(a, rng_a) && step(b, rng_b)) {
        }
        if (!(a.graph == b.graph) || a.history != b.history) return false;

        BuildState replayed = initial_state();
        for (const Move& m : a.history) apply_move_inplace(replayed, m, rules);
        if (!(replayed.graph == a.graph)) return false;
    }
    return true;
}

double brute_force_best(const BuildState& s, const Conjecture& c,
                        const GameRules& rules, std::uint64_t& states) {
    ++states;
    const ScoreReport r = score(c, s.graph);
    double best =
        r.defined ? r.score : -std::numeric_limits<double>::infinity();
    for (const Move& m : legal_moves(s, rules)) {
        best = std::max(best, brute_force_best(apply_move(s, m, rules), c,
                                               rules, states));
    }
    return best;
}

bool exhaustive_equivalence_suite() {
    const Conjecture& c = conj("graffiti-301");  // min_size 14: unrefutable
    const GameRules rules{GraphClass::Tree, 5, 1};
    std::uint64_t states = 0;
    const double brute = brute_force_best(initial_state(), c, rules, states);

    const SearchOutcome out = run_search(Algorithm::Gbfs, c, rules,
                                         ConjectureOptions{}, SearchParams{}, 1);
    detail("tree game to 5 vertices: " + std::to_string(states) +
           " states, brute-force best " + fmt(brute) + ", search best " +
           fmt(out.best_score) + " (" + out.halt_reason + ")");
    return out.halt_reason == "exhausted" && out.evaluations == states &&
           std::abs(out.best_score - brute) < 1e-12;
}

bool tiny_graphs_hold_suite() {
    Graph k2(2);
    k2.add_edge(0, 1);
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    for (const Conjecture& c : all_conjectures()) {
        for (const RangeDef def : {RangeDef::Diff, RangeDef::DistinctCount}) {
            ConjectureOptions opts;
            opts.range = def;
            if (is_counterexample(c, k2, opts)) return false;
            if (is_counterexample(c, p3, opts)) return false;
        }
    }
    return true;
}

bool criterion8() {
    std::mt19937_64 rng(2026);
    bool ok = true;
    struct Suite {
        const char* name;
        bool result;
    };
    const Suite suites[] = {
        {"eigensolver moment/permutation invariants",
         eigensolver_property_suite(rng)},
        {"edge legality agrees with the girth oracle",
         class_legality_suite(rng)},
        {"seeded build-game replay determinism", replay_determinism_suite()},
        {"exhaustive best-score equivalence", exhaustive_equivalence_suite()},
        {"K2 and P3 hold for all eight conjectures", tiny_graphs_hold_suite()},
    };
    for (const Suite& s : suites) {
        detail(std::string(s.name) + ": " + (s.result ? "ok" : "FAILED"));
        ok = ok && s.result;
    }
    return verdict(8, ok, "property suites");
}

// ------------------------------------------------------------------ slow 137

bool slow137() {
    const Conjecture& c = conj("graffiti-137");
    const GameRules rules{c.accept_class, c.default_target, c.min_size};
    SearchParams params;
    params.budget_seconds = 5130.0;
    const SearchOutcome out =
        run_search(Algorithm::Gbfs, c, rules, ConjectureOptions{}, params, 1);
    detail("gbfs graffiti-137: " +
           std::string(out.refuted ? "refuted" : "failed") + " in " +
           fmt(out.elapsed_seconds) + " s (" + std::to_string(out.evaluations) +
           " evaluations, n " + std::to_string(out.graph.order()) + ")");
    std::printf("[%s] slow-137: greedy reproduction at full size\n",
                out.refuted ? "PASS" : "FAIL");
    return out.refuted;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <1..8|slow-137>\n", argv[0]);
        return 2;
    }
    const std::string which = argv[1];
    bool ok;
    if (which == "1") ok = criterion1();
    else if (which == "2") ok = criterion2();
    else if (which == "3") ok = criterion3();
    else if (which == "4") ok = criterion4();
    else if (which == "5") ok = criterion5();
    else if (which == "6") ok = criterion6();
    else if (which == "7") ok = criterion7();
    else if (which == "8") ok = criterion8();
    else if (which == "slow-137") ok = slow137();
    else {
        std::fprintf(stderr, "unknown criterion '%s'\n", which.c_str());
        return 2;
    }
    return ok ? 0 : 1;
}
