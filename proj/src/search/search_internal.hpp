#pragma once

#include <chrono>
#include <limits>
#include <random>

#include "refute/search.hpp"

// Shared machinery for the search drivers. One Ctx per run, single-threaded.

namespace refute::detail {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Ctx {
    const Conjecture& conj;
    ConjectureOptions copts;
    GameRules rules;
    SearchParams params;
    BestTracker tracker;
    std::mt19937_64 rng;
    std::chrono::steady_clock::time_point deadline;
    double root_score = kNegInf;
    bool exhausted = false;  // deterministic drivers ran out of work

    Ctx(const Conjecture& c, const ConjectureOptions& co, const GameRules& r,
        const SearchParams& p, std::uint64_t seed)
        : conj(c), copts(co), rules(r), params(p), rng(seed) {}

    bool halted() const {
        if (tracker.found_counterexample) return true;
        if (params.max_evaluations &&
            tracker.evaluations >= params.max_evaluations)
            return true;
        return std::chrono::steady_clock::now() >= deadline;
    }

    double eval(const BuildState& s) {
        return evaluate_state(s, conj, copts, tracker);
    }

    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(rng() % n);
    }

    // deterministic across standard libraries, unlike uniform_real_distribution
    double uniform01() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
};

struct LineResult {
    double peak = kNegInf;   // best score over the start state and the line
    double last = kNegInf;   // score of the state the line ends on
    std::vector<Move> line;  // moves relative to the starting state
};

// Random playout with per-move evaluation; returns every move played, the
// terminal state's score (`last`), and the best score seen along the way
// (`peak`); both start from `from_score` so a playout from a terminal
// state reports that state's own score. Intermediate refutations still
// halt via the tracker.
LineResult uniform_playout(Ctx& ctx, const BuildState& from,
                           double from_score);

void run_nmcs(Ctx& ctx);
void run_lnmcs(Ctx& ctx);
void run_nrpa(Ctx& ctx);
void run_mcts(Ctx& ctx, Algorithm which);  // Uct, Rave, Grave
void run_gbfs(Ctx& ctx, std::uint64_t& frontier_discards);
void run_beam(Ctx& ctx);

}  // namespace refute::detail
