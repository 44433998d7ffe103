#include "refute/game.hpp"

#include <limits>
#include <stdexcept>

namespace refute {

Move attach_move(int anchor) { return {MoveKind::AttachVertex, anchor, -1}; }

Move edge_move(int u, int v) {
    if (u > v) std::swap(u, v);
    return {MoveKind::AddEdge, u, v};
}

Move stop_move() { return {MoveKind::Stop, -1, -1}; }

std::string move_to_string(const Move& m) {
    switch (m.kind) {
        case MoveKind::AttachVertex:
            return "attach " + std::to_string(m.u);
        case MoveKind::AddEdge:
            return "edge " + std::to_string(m.u) + "-" + std::to_string(m.v);
        case MoveKind::Stop:
            return "stop";
    }
    return "?";
}

std::int32_t move_code(const Move& m, int target) {
    switch (m.kind) {
        case MoveKind::AttachVertex:
            return m.u;
        case MoveKind::AddEdge:
            return target + m.u * target + m.v;
        case MoveKind::Stop:
            return target * target + target;
    }
    return -1;
}

Move decode_move(std::int32_t code, int target) {
    if (code < 0 || code > target * target + target)
        throw std::invalid_argument("move code out of range");
    if (code < target) return attach_move(code);
    if (code == target * target + target) return stop_move();
    const std::int32_t rest = code - target;
    return edge_move(rest / target, rest % target);
}

std::int32_t move_code_space(int target) {
    return target * target + target + 1;
}

BuildState initial_state() { return {Graph::single_vertex(), {}, false}; }

std::vector<Move> legal_moves(const BuildState& s, const GameRules& rules) {
    std::vector<Move> moves;
    if (s.stopped) return moves;
    const int n = s.graph.order();
    std::vector<Move> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (edge_is_class_legal(s.graph, u, v, rules.build_class))
                edges.push_back(edge_move(u, v));
        }
    }
    // a saturated construction (full size, no class-legal edge left) is
    // over; stop is not offered as a trailing no-op
    if (n >= rules.target && edges.empty()) return moves;
    // fixed order: stop, then attaches by anchor, then edges lexicographic
    if (n >= rules.min_stop) moves.push_back(stop_move());
    if (n < rules.target) {
        for (int j = 0; j < n; ++j) moves.push_back(attach_move(j));
    }
    moves.insert(moves.end(), edges.begin(), edges.end());
    return moves;
}

bool is_terminal(const BuildState& s, const GameRules& rules) {
    if (s.stopped) return true;
    const int n = s.graph.order();
    if (n < rules.target) return false;  // attach always legal
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (edge_is_class_legal(s.graph, u, v, rules.build_class))
                return false;
        }
    }
    return true;  // full size and no class-legal edge remains
}

void apply_move_inplace(BuildState& s, const Move& m, const GameRules& rules) {
    if (s.stopped) throw std::invalid_argument("move after stop");
    switch (m.kind) {
        case MoveKind::AttachVertex: {
            if (s.graph.order() >= rules.target)
                throw std::invalid_argument("attach beyond target size");
            if (m.u < 0 || m.u >= s.graph.order())
                throw std::invalid_argument("attach anchor out of range");
            const int fresh = s.graph.add_vertex();
            s.graph.add_edge(m.u, fresh);
            break;
        }
        case MoveKind::AddEdge: {
            if (!edge_is_class_legal(s.graph, m.u, m.v, rules.build_class))
                throw std::invalid_argument("illegal edge move " +
                                            move_to_string(m));
            s.graph.add_edge(m.u, m.v);
            break;
        }
        case MoveKind::Stop: {
            if (s.graph.order() < rules.min_stop)
                throw std::invalid_argument("stop before minimum size");
            s.stopped = true;
            break;
        }
    }
    s.history.push_back(m);
}

BuildState apply_move(const BuildState& s, const Move& m,
                      const GameRules& rules) {
    BuildState next = s;
    apply_move_inplace(next, m, rules);
    return next;
}

BestTracker::BestTracker()
    : best_score(-std::numeric_limits<double>::infinity()) {}

double evaluate_state(const BuildState& s, const Conjecture& c,
                      const ConjectureOptions& opts, BestTracker& tracker) {
    ++tracker.evaluations;
    const ScoreReport r = score(c, s.graph, opts);
    if (r.defined && r.score > tracker.best_score) {
        tracker.best_score = r.score;
        tracker.best_graph = s.graph;
        tracker.best_report = r;
        tracker.best_history = s.history;
    }
    // same predicate as is_counterexample, reusing the report we just paid for
    if (!tracker.found_counterexample && r.defined && r.score > kScoreEpsilon &&
        s.graph.order() >= c.min_size && is_connected(s.graph) &&
        satisfies_class(s.graph, c.accept_class)) {
        tracker.found_counterexample = true;
        tracker.found_graph = s.graph;
        tracker.found_report = r;
        tracker.found_history = s.history;
        tracker.evaluations_at_found = tracker.evaluations;
    }
    return r.defined ? r.score : -std::numeric_limits<double>::infinity();
}

}  // namespace refute
