#include "refute/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "search_internal.hpp"

namespace refute {

namespace detail {

LineResult uniform_playout(Ctx& ctx, const BuildState& from,
                           double from_score) {
    BuildState state = from;
    LineResult out;
    out.peak = from_score;
    out.last = from_score;
    while (!ctx.halted() && !is_terminal(state, ctx.rules)) {
        const std::vector<Move> moves = legal_moves(state, ctx.rules);
        const Move mv = moves[ctx.uniform_index(moves.size())];
        apply_move_inplace(state, mv, ctx.rules);
        out.line.push_back(mv);
        out.last = ctx.eval(state);
        out.peak = std::max(out.peak, out.last);
    }
    return out;
}

}  // namespace detail

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    if (name == "nmcs") return Algorithm::Nmcs;
    if (name == "lnmcs") return Algorithm::Lnmcs;
    if (name == "nrpa") return Algorithm::Nrpa;
    if (name == "uct") return Algorithm::Uct;
    if (name == "rave") return Algorithm::Rave;
    if (name == "grave") return Algorithm::Grave;
    if (name == "gbfs") return Algorithm::Gbfs;
    if (name == "beam") return Algorithm::Beam;
    return std::nullopt;
}

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Nmcs:
            return "nmcs";
        case Algorithm::Lnmcs:
            return "lnmcs";
        case Algorithm::Nrpa:
            return "nrpa";
        case Algorithm::Uct:
            return "uct";
        case Algorithm::Rave:
            return "rave";
        case Algorithm::Grave:
            return "grave";
        case Algorithm::Gbfs:
            return "gbfs";
        case Algorithm::Beam:
            return "beam";
    }
    return "?";
}

const std::vector<Algorithm>& all_algorithms() {
    static const std::vector<Algorithm> all = {
        Algorithm::Nmcs, Algorithm::Lnmcs, Algorithm::Nrpa, Algorithm::Uct,
        Algorithm::Rave, Algorithm::Grave, Algorithm::Gbfs, Algorithm::Beam};
    return all;
}

std::vector<std::size_t> prune_survivors(const std::vector<double>& pre,
                                         double ratio) {
    std::vector<std::size_t> keep;
    if (pre.empty()) return keep;
    const double best = *std::max_element(pre.begin(), pre.end());
    if (best > 0.0) {
        for (std::size_t i = 0; i < pre.size(); ++i) {
            if (pre[i] >= ratio * best) keep.push_back(i);
        }
        return keep;
    }
    // all pre-scores non-positive: keep the top ceil(ratio*k), at least one
    std::size_t quota = static_cast<std::size_t>(
        std::ceil(ratio * static_cast<double>(pre.size())));
    quota = std::clamp<std::size_t>(quota, 1, pre.size());
    std::vector<std::size_t> order(pre.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return pre[a] > pre[b];  // ties keep index order
                     });
    order.resize(quota);
    std::sort(order.begin(), order.end());
    return order;
}

SearchOutcome run_search(Algorithm algorithm, const Conjecture& conjecture,
                         const GameRules& rules,
                         const ConjectureOptions& copts,
                         const SearchParams& params, std::uint64_t seed) {
    detail::Ctx ctx(conjecture, copts, rules, params, seed);
    const auto start = std::chrono::steady_clock::now();
    ctx.deadline = start + std::chrono::duration_cast<
                               std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(
                                   params.budget_seconds));

    // the root (a single vertex) is evaluated once per run
    const BuildState root = initial_state();
    ctx.root_score = ctx.eval(root);

    std::uint64_t frontier_discards = 0;
    if (!ctx.halted()) {
        switch (algorithm) {
            case Algorithm::Nmcs:
                detail::run_nmcs(ctx);
                break;
            case Algorithm::Lnmcs:
                detail::run_lnmcs(ctx);
                break;
            case Algorithm::Nrpa:
                detail::run_nrpa(ctx);
                break;
            case Algorithm::Uct:
            case Algorithm::Rave:
            case Algorithm::Grave:
                detail::run_mcts(ctx, algorithm);
                break;
            case Algorithm::Gbfs:
                detail::run_gbfs(ctx, frontier_discards);
                break;
            case Algorithm::Beam:
                detail::run_beam(ctx);
                break;
        }
    }

    const auto end = std::chrono::steady_clock::now();
    SearchOutcome out;
    out.refuted = ctx.tracker.found_counterexample;
    if (out.refuted) {
        out.graph = ctx.tracker.found_graph;
        out.report = ctx.tracker.found_report;
        out.history = ctx.tracker.found_history;
    } else {
        out.graph = ctx.tracker.best_graph;
        out.report = ctx.tracker.best_report;
        out.history = ctx.tracker.best_history;
    }
    out.best_score = ctx.tracker.best_score;
    out.evaluations = ctx.tracker.evaluations;
    out.evaluations_at_found = ctx.tracker.evaluations_at_found;
    out.elapsed_seconds =
        std::chrono::duration<double>(end - start).count();
    out.frontier_discards = frontier_discards;

    if (out.refuted) {
        out.halt_reason = "counterexample";
    } else if (params.max_evaluations &&
               ctx.tracker.evaluations >= params.max_evaluations) {
        out.halt_reason = "evaluation-cap";
    } else if (end >= ctx.deadline) {
        out.halt_reason = "budget";
    } else {
        out.halt_reason = "exhausted";
    }
    return out;
}

}  // namespace refute
