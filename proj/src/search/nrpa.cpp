#include <algorithm>
#include <cmath>

#include "search_internal.hpp"

// Nested rollout policy adaptation. The policy is a dense weight vector
// indexed by move code; each recursion level owns a copy and adapts it
// toward the best sequence seen so far at that level. Playouts always run
// from the game's root.

namespace refute::detail {
namespace {

struct PlayoutResult {
    double value = kNegInf;   // score of the playout's final state
    std::vector<Move> seq;    // every move played, from the root
};

std::size_t sample_gibbs(Ctx& ctx, const std::vector<double>& policy,
                         const std::vector<Move>& moves) {
    double wmax = kNegInf;
    for (const Move& m : moves)
        wmax = std::max(wmax, policy[move_code(m, ctx.rules.target)]);
    double total = 0.0;
    std::vector<double> cumulative(moves.size());
    for (std::size_t i = 0; i < moves.size(); ++i) {
        total += std::exp(policy[move_code(moves[i], ctx.rules.target)] - wmax);
        cumulative[i] = total;
    }
    const double u = ctx.uniform01() * total;
    for (std::size_t i = 0; i + 1 < moves.size(); ++i) {
        if (u < cumulative[i]) return i;
    }
    return moves.size() - 1;
}

PlayoutResult policy_playout(Ctx& ctx, const std::vector<double>& policy) {
    BuildState state = initial_state();
    PlayoutResult out;
    out.value = ctx.root_score;
    while (!ctx.halted() && !is_terminal(state, ctx.rules)) {
        const std::vector<Move> moves = legal_moves(state, ctx.rules);
        const Move mv = moves[sample_gibbs(ctx, policy, moves)];
        apply_move_inplace(state, mv, ctx.rules);
        out.seq.push_back(mv);
        out.value = ctx.eval(state);
    }
    return out;
}

// Rosin-style adaptation against a snapshot of the pre-adaptation policy:
// the chosen move gains alpha, every legal move loses alpha * p_old(move).
void adapt(Ctx& ctx, std::vector<double>& policy,
           const std::vector<Move>& seq) {
    const std::vector<double> snapshot = policy;
    const double alpha = ctx.params.nrpa_alpha;
    BuildState state = initial_state();
    for (const Move& mv : seq) {
        const std::vector<Move> moves = legal_moves(state, ctx.rules);
        double wmax = kNegInf;
        for (const Move& m : moves)
            wmax = std::max(wmax, snapshot[move_code(m, ctx.rules.target)]);
        double total = 0.0;
        std::vector<double> weight(moves.size());
        for (std::size_t i = 0; i < moves.size(); ++i) {
            weight[i] = std::exp(
                snapshot[move_code(moves[i], ctx.rules.target)] - wmax);
            total += weight[i];
        }
        policy[move_code(mv, ctx.rules.target)] += alpha;
        for (std::size_t i = 0; i < moves.size(); ++i) {
            policy[move_code(moves[i], ctx.rules.target)] -=
                alpha * weight[i] / total;
        }
        apply_move_inplace(state, mv, ctx.rules);
    }
}

// each level receives its own copy of the caller's policy
PlayoutResult nrpa(Ctx& ctx, int level, std::vector<double> policy) {
    if (level <= 0) return policy_playout(ctx, policy);
    PlayoutResult best;
    for (int i = 0; i < ctx.params.nrpa_iterations && !ctx.halted(); ++i) {
        PlayoutResult r = nrpa(ctx, level - 1, policy);
        // ties adopt the newer sequence, which keeps adaptation moving
        // across score plateaus
        if (r.value >= best.value) best = std::move(r);
        if (!best.seq.empty()) adapt(ctx, policy, best.seq);
    }
    return best;
}

}  // namespace

void run_nrpa(Ctx& ctx) {
    const BuildState root = initial_state();
    if (is_terminal(root, ctx.rules)) return;
    const std::size_t codes =
        static_cast<std::size_t>(move_code_space(ctx.rules.target));
    while (!ctx.halted()) {
        nrpa(ctx, ctx.params.nrpa_level, std::vector<double>(codes, 0.0));
    }
}

}  // namespace refute::detail
