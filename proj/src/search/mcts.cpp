#include <algorithm>
#include <cmath>
#include <cstdint>

#include "search_internal.hpp"

// One tree-search engine serves UCT, RAVE and GRAVE. Nodes store their
// legal moves (stop first when legal, then attaches and edges in ascending
// move-code order, so lookups can binary-search past the stop slot) plus
// per-move visit/reward and AMAF tables. States are not stored; the
// selection path replays moves from the root.

namespace refute::detail {
namespace {

struct MctsNode {
    std::vector<Move> moves;          // ascending by move code
    std::vector<std::int32_t> child;  // -1 until expanded
    std::vector<std::uint32_t> n;
    std::vector<double> w;
    std::vector<std::uint32_t> amaf_n;
    std::vector<double> amaf_w;
    std::uint32_t visits = 0;
    double node_score = kNegInf;  // evaluation at creation
    bool terminal = false;
};

MctsNode make_node(Ctx& ctx, const BuildState& state, double node_score) {
    MctsNode node;
    node.moves = legal_moves(state, ctx.rules);
    node.terminal = node.moves.empty();
    node.child.assign(node.moves.size(), -1);
    node.n.assign(node.moves.size(), 0);
    node.w.assign(node.moves.size(), 0.0);
    node.amaf_n.assign(node.moves.size(), 0);
    node.amaf_w.assign(node.moves.size(), 0.0);
    node.node_score = node_score;
    return node;
}

// index of `mv` in node.moves, or -1; apart from a leading stop slot the
// moves are sorted by code
int find_move(const MctsNode& node, const Move& mv, int target) {
    if (node.moves.empty()) return -1;
    const bool has_stop = node.moves.front().kind == MoveKind::Stop;
    if (mv.kind == MoveKind::Stop) return has_stop ? 0 : -1;
    const std::int32_t code = move_code(mv, target);
    int lo = has_stop ? 1 : 0;
    int hi = static_cast<int>(node.moves.size()) - 1;
    while (lo <= hi) {
        const int mid = (lo + hi) / 2;
        const std::int32_t c = move_code(node.moves[mid], target);
        if (c == code) return mid;
        if (c < code)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return -1;
}

struct PathStep {
    std::int32_t node;
    int move_index;
};

int select_move(const Ctx& ctx, const std::vector<MctsNode>& tree,
                std::int32_t node_id, const MctsNode& amaf_src,
                Algorithm which) {
    const MctsNode& node = tree[node_id];
    for (std::size_t i = 0; i < node.moves.size(); ++i) {
        if (node.n[i] == 0) return static_cast<int>(i);  // unvisited first
    }
    const double log_parent = std::log(static_cast<double>(node.visits));
    double best_value = kNegInf;
    int best = 0;
    for (std::size_t i = 0; i < node.moves.size(); ++i) {
        const double mean = node.w[i] / node.n[i];
        double beta = 0.0;
        double amaf_mean = 0.0;
        if (which != Algorithm::Uct) {
            const int j =
                (&amaf_src == &node)
                    ? static_cast<int>(i)
                    : find_move(amaf_src, node.moves[i], ctx.rules.target);
            if (j >= 0 && amaf_src.amaf_n[j] > 0) {
                const double p = static_cast<double>(node.n[i]);
                const double pa = static_cast<double>(amaf_src.amaf_n[j]);
                beta = pa / (p + pa + ctx.params.amaf_bias * p * pa);
                amaf_mean = amaf_src.amaf_w[j] / pa;
            }
        }
        const double value =
            (1.0 - beta) * mean + beta * amaf_mean +
            ctx.params.mcts_exploration *
                std::sqrt(log_parent / static_cast<double>(node.n[i]));
        if (value > best_value) {  // ties keep the earlier move
            best_value = value;
            best = static_cast<int>(i);
        }
    }
    return best;
}

}  // namespace

void run_mcts(Ctx& ctx, Algorithm which) {
    const BuildState root_state = initial_state();
    std::vector<MctsNode> tree;
    tree.push_back(make_node(ctx, root_state, ctx.root_score));
    if (tree[0].terminal) return;

    // a saturated tree makes iterations with zero evaluations; bail out
    // once that clearly isn't going anywhere
    int idle_iterations = 0;

    while (!ctx.halted() && idle_iterations < 10000) {
        const std::uint64_t evals_before = ctx.tracker.evaluations;
        BuildState state = initial_state();
        std::vector<PathStep> path;
        std::vector<Move> sim_moves;  // selection + playout moves, in order
        double sim_score = tree[0].node_score;  // final state's score
        std::int32_t cur = 0;

        while (!tree[cur].terminal && !ctx.halted()) {
            // GRAVE: AMAF stats come from the deepest node on the path with
            // enough visits (the root as fallback); RAVE: the node itself
            std::int32_t amaf_id = cur;
            if (which == Algorithm::Grave) {
                amaf_id = 0;
                for (const PathStep& step : path) {
                    if (tree[step.node].visits >=
                        static_cast<std::uint32_t>(ctx.params.grave_ref))
                        amaf_id = step.node;
                }
                if (tree[cur].visits >=
                    static_cast<std::uint32_t>(ctx.params.grave_ref))
                    amaf_id = cur;
            }
            const int pick =
                select_move(ctx, tree, cur, tree[amaf_id], which);
            path.push_back({cur, pick});
            const Move mv = tree[cur].moves[pick];
            sim_moves.push_back(mv);
            apply_move_inplace(state, mv, ctx.rules);

            if (tree[cur].child[pick] < 0) {
                // expand: evaluate the new state once, then play out
                const double s = ctx.eval(state);
                const auto id = static_cast<std::int32_t>(tree.size());
                tree.push_back(make_node(ctx, state, s));
                tree[cur].child[pick] = id;
                LineResult rollout = uniform_playout(ctx, state, s);
                sim_score = rollout.last;
                sim_moves.insert(sim_moves.end(), rollout.line.begin(),
                                 rollout.line.end());
                break;
            }
            cur = tree[cur].child[pick];
            sim_score = tree[cur].node_score;
        }

        // backpropagate: reward is a logistic squash of the simulation's
        // final score
        const double reward = 1.0 / (1.0 + std::exp(-sim_score));
        for (std::size_t k = 0; k < path.size(); ++k) {
            MctsNode& node = tree[path[k].node];
            ++node.visits;
            ++node.n[path[k].move_index];
            node.w[path[k].move_index] += reward;
            if (which == Algorithm::Uct) continue;
            // AMAF: credit every later simulation move this node could play
            for (std::size_t j = k; j < sim_moves.size(); ++j) {
                const int idx = find_move(node, sim_moves[j],
                                          ctx.rules.target);
                if (idx >= 0) {
                    ++node.amaf_n[idx];
                    node.amaf_w[idx] += reward;
                }
            }
        }

        idle_iterations =
            (ctx.tracker.evaluations == evals_before) ? idle_iterations + 1
                                                      : 0;
    }
    if (idle_iterations >= 10000) ctx.exhausted = true;
}

}  // namespace refute::detail
