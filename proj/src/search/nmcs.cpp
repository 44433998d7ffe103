#include <algorithm>

#include "search_internal.hpp"

// Nested Monte-Carlo search with best-sequence memory, plus the lazy
// variant that prunes children by quick playout pre-scores before
// descending a level.

namespace refute::detail {
namespace {

// Mean of a few uniform playout peaks from `from`; used only to rank
// children for pruning. The playouts still evaluate every state they touch.
double playout_prescore(Ctx& ctx, const BuildState& from, double from_score) {
    double sum = 0.0;
    const int k = std::max(1, ctx.params.lnmcs_playouts);
    for (int i = 0; i < k; ++i) {
        if (ctx.halted()) return kNegInf;
        sum += uniform_playout(ctx, from, from_score).peak;
    }
    return sum / k;  // -inf propagates if any playout saw nothing defined
}

// One nested search from `root` at `level`. Returns the best line found
// below root (moves relative to root), valued by the best state seen on
// it — the tracker's notion of best, so the memorized sequence is always
// the one that produced the strongest evaluation. `lazy` switches on
// LNMCS child pruning at levels >= 2.
LineResult nested(Ctx& ctx, const BuildState& root, double root_score,
                  int level, bool lazy) {
    if (level <= 0) return uniform_playout(ctx, root, root_score);

    BuildState state = root;
    LineResult best;
    std::vector<Move> played;
    std::size_t follow = 0;  // next index of best.line to follow

    while (!ctx.halted() && !is_terminal(state, ctx.rules)) {
        const std::vector<Move> moves = legal_moves(state, ctx.rules);

        // evaluate all children once
        std::vector<double> child_score(moves.size(), kNegInf);
        std::vector<double> pre(moves.size(), kNegInf);
        const bool prune = lazy && level >= 2;
        for (std::size_t i = 0; i < moves.size() && !ctx.halted(); ++i) {
            const BuildState child = apply_move(state, moves[i], ctx.rules);
            child_score[i] = ctx.eval(child);
            if (prune) pre[i] = playout_prescore(ctx, child, child_score[i]);
        }

        std::vector<std::size_t> descend;
        if (prune) {
            descend = prune_survivors(pre, ctx.params.lnmcs_ratio);
        } else {
            descend.resize(moves.size());
            for (std::size_t i = 0; i < moves.size(); ++i) descend[i] = i;
        }

        // value of each child: its own evaluation, improved by the nested
        // search for the children we descend into
        double iter_best = kNegInf;
        std::vector<Move> iter_line;
        std::size_t next_descend = 0;
        for (std::size_t i = 0; i < moves.size() && !ctx.halted(); ++i) {
            double v = child_score[i];
            std::vector<Move> sub_line;
            if (next_descend < descend.size() && descend[next_descend] == i) {
                ++next_descend;
                const BuildState child =
                    apply_move(state, moves[i], ctx.rules);
                LineResult sub =
                    nested(ctx, child, child_score[i], level - 1, lazy);
                v = std::max(v, sub.peak);
                sub_line = std::move(sub.line);
            }
            if (v > iter_best) {
                iter_best = v;
                iter_line.clear();
                iter_line.push_back(moves[i]);
                iter_line.insert(iter_line.end(), sub_line.begin(),
                                 sub_line.end());
            }
        }

        if (iter_best > best.peak) {
            best.peak = iter_best;
            best.line = played;
            best.line.insert(best.line.end(), iter_line.begin(),
                             iter_line.end());
            follow = played.size();
        }
        if (follow >= best.line.size()) break;  // nothing left to follow

        const Move next = best.line[follow++];
        apply_move_inplace(state, next, ctx.rules);
        played.push_back(next);
    }
    best.last = best.peak;  // nested lines are valued by their peak
    return best;
}

void restart_loop(Ctx& ctx, int level, bool lazy) {
    const BuildState root = initial_state();
    if (is_terminal(root, ctx.rules)) return;
    while (!ctx.halted()) {
        nested(ctx, root, ctx.root_score, level, lazy);
    }
}

}  // namespace

void run_nmcs(Ctx& ctx) { restart_loop(ctx, ctx.params.nmcs_level, false); }

void run_lnmcs(Ctx& ctx) { restart_loop(ctx, ctx.params.lnmcs_level, true); }

}  // namespace refute::detail
