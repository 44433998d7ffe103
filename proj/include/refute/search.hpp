#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refute/game.hpp"

// Search drivers. All of them share the same contract: play the
// construction game, evaluate every applied move, keep the best state seen
// in a BestTracker, and halt as soon as an evaluation certifies a
// counter-example (or the budget runs out). Runs are deterministic given
// the seed, on a fixed machine.

namespace refute {

enum class Algorithm { Nmcs, Lnmcs, Nrpa, Uct, Rave, Grave, Gbfs, Beam };

std::optional<Algorithm> algorithm_from_name(std::string_view name);
std::string_view algorithm_name(Algorithm a);
const std::vector<Algorithm>& all_algorithms();

struct SearchParams {
    double budget_seconds = 900.0;
    std::uint64_t max_evaluations = 0;  // 0 = no cap

    int nmcs_level = 3;

    int lnmcs_level = 4;
    int lnmcs_playouts = 3;   // playouts per child pre-score
    double lnmcs_ratio = 0.8;

    int nrpa_level = 3;
    int nrpa_iterations = 100;  // per level
    double nrpa_alpha = 1.0;

    double mcts_exploration = 1.0;  // UCT constant
    int grave_ref = 5;              // visit threshold for GRAVE ancestors
    double amaf_bias = 1e-5;

    int beam_width = 10;
    std::uint64_t frontier_cap = 1'000'000;  // GBFS frontier size limit
};

struct SearchOutcome {
    bool refuted = false;
    // the counter-example when refuted, otherwise the best-scoring state
    Graph graph;
    ScoreReport report{};
    std::vector<Move> history;
    double best_score = 0.0;  // best defined score seen anywhere in the run

    std::uint64_t evaluations = 0;
    std::uint64_t evaluations_at_found = 0;  // 0 unless refuted
    double elapsed_seconds = 0.0;
    // "counterexample" | "budget" | "evaluation-cap" | "exhausted"
    std::string halt_reason;
    std::uint64_t frontier_discards = 0;  // GBFS only
};

SearchOutcome run_search(Algorithm algorithm, const Conjecture& conjecture,
                         const GameRules& rules,
                         const ConjectureOptions& copts,
                         const SearchParams& params, std::uint64_t seed);

// LNMCS pruning rule, exposed for unit tests: returns the indices (ascending)
// of children that survive. When the best pre-score is positive, survivors
// are those within ratio*best; otherwise the top ceil(ratio*k) by pre-score
// survive (at least one).
std::vector<std::size_t> prune_survivors(const std::vector<double>& pre,
                                         double ratio);

}  // namespace refute
