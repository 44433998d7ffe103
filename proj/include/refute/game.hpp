#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "refute/conjecture.hpp"
#include "refute/graph.hpp"

// The construction game. Play starts from a single vertex; each move either
// attaches a fresh vertex to an existing one, inserts a class-legal edge, or
// stops. The graph stays connected by construction. Every applied move is
// followed by an evaluation of the new state, and the search is expected to
// halt as soon as an evaluation certifies a counter-example.

namespace refute {

enum class MoveKind : std::uint8_t { AttachVertex, AddEdge, Stop };

struct Move {
    MoveKind kind = MoveKind::Stop;
    int u = -1;  // AttachVertex: anchor; AddEdge: smaller endpoint
    int v = -1;  // AddEdge: larger endpoint

    bool operator==(const Move&) const = default;
};

Move attach_move(int anchor);
Move edge_move(int u, int v);  // normalises so u < v
Move stop_move();

std::string move_to_string(const Move& m);

struct GameRules {
    GraphClass build_class = GraphClass::Any;
    int target = 10;    // construction stops growing at this many vertices
    int min_stop = 1;   // Stop becomes legal at this many vertices
};

// Dense integer codes for moves under a fixed target t:
//   AttachVertex(j) -> j             (0 <= j < t)
//   AddEdge(u,v)    -> t + u*t + v   (0 <= u < v < t)
//   Stop            -> t*t + t
// Injective; used as policy indices and compact path storage.
std::int32_t move_code(const Move& m, int target);
Move decode_move(std::int32_t code, int target);
std::int32_t move_code_space(int target);  // codes are < this

struct BuildState {
    Graph graph;
    std::vector<Move> history;
    bool stopped = false;
};

BuildState initial_state();

// legal moves in a fixed deterministic order: attaches by anchor, then
// edges by (u, v), then stop
std::vector<Move> legal_moves(const BuildState& s, const GameRules& rules);

bool is_terminal(const BuildState& s, const GameRules& rules);

// applies without evaluating; throws std::invalid_argument on illegal moves
BuildState apply_move(const BuildState& s, const Move& m,
                      const GameRules& rules);

// in-place variant used when re-walking known-legal prefixes
void apply_move_inplace(BuildState& s, const Move& m, const GameRules& rules);

// Per-run result bookkeeping. Single-threaded; one tracker per run.
struct BestTracker {
    double best_score;  // -inf until a defined score appears
    Graph best_graph;
    ScoreReport best_report{};
    std::vector<Move> best_history;

    bool found_counterexample = false;
    Graph found_graph;
    ScoreReport found_report{};
    std::vector<Move> found_history;

    std::uint64_t evaluations = 0;
    std::uint64_t evaluations_at_found = 0;

    BestTracker();
};

// Scores the state, updates the tracker (best-by-score; first
// counter-example wins and freezes found_*), returns the score
// (-inf when undefined).
double evaluate_state(const BuildState& s, const Conjecture& c,
                      const ConjectureOptions& opts, BestTracker& tracker);

}  // namespace refute
