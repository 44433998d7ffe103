#include <algorithm>
#include <set>

#include "search_internal.hpp"

// Greedy best-first search and beam search. Both store paths in a
// parent-pointer arena (8 bytes per evaluated state) and rebuild graphs by
// replaying move codes, so memory scales with evaluations, not path length.

namespace refute::detail {
namespace {

struct PathArena {
    struct Node {
        std::int32_t parent;  // -1 = root
        std::int32_t code;
    };
    std::vector<Node> nodes;

    std::int32_t add(std::int32_t parent, std::int32_t code) {
        nodes.push_back({parent, code});
        return static_cast<std::int32_t>(nodes.size()) - 1;
    }

    std::vector<std::int32_t> codes_from_root(std::int32_t id) const {
        std::vector<std::int32_t> codes;
        for (std::int32_t at = id; at >= 0; at = nodes[at].parent)
            codes.push_back(nodes[at].code);
        std::reverse(codes.begin(), codes.end());
        return codes;
    }
};

BuildState replay(const Ctx& ctx, const PathArena& arena, std::int32_t id) {
    BuildState state = initial_state();
    for (const std::int32_t code : arena.codes_from_root(id)) {
        apply_move_inplace(state, decode_move(code, ctx.rules.target),
                           ctx.rules);
    }
    return state;
}

struct Entry {
    double score;
    std::int32_t node;  // arena id, -1 = root; doubles as insertion order
};

// best = highest score, earliest insertion
struct BestFirst {
    bool operator()(const Entry& a, const Entry& b) const {
        if (a.score != b.score) return a.score > b.score;
        return a.node < b.node;
    }
};

}  // namespace

void run_gbfs(Ctx& ctx, std::uint64_t& frontier_discards) {
    PathArena arena;
    std::set<Entry, BestFirst> frontier;
    frontier.insert({ctx.root_score, -1});

    while (!frontier.empty() && !ctx.halted()) {
        const Entry e = *frontier.begin();
        frontier.erase(frontier.begin());
        const BuildState state = replay(ctx, arena, e.node);
        if (is_terminal(state, ctx.rules)) continue;

        for (const Move& mv : legal_moves(state, ctx.rules)) {
            if (ctx.halted()) break;
            const BuildState child = apply_move(state, mv, ctx.rules);
            const double s = ctx.eval(child);
            const std::int32_t id =
                arena.add(e.node, move_code(mv, ctx.rules.target));
            frontier.insert({s, id});
            if (frontier.size() > ctx.params.frontier_cap) {
                frontier.erase(std::prev(frontier.end()));
                ++frontier_discards;
            }
        }
    }
}

void run_beam(Ctx& ctx) {
    PathArena arena;
    std::vector<Entry> beam = {{ctx.root_score, -1}};
    const BuildState root = initial_state();
    if (is_terminal(root, ctx.rules)) return;

    while (!beam.empty() && !ctx.halted()) {
        std::vector<Entry> next;
        for (const Entry& e : beam) {
            if (ctx.halted()) break;
            const BuildState state = replay(ctx, arena, e.node);
            for (const Move& mv : legal_moves(state, ctx.rules)) {
                if (ctx.halted()) break;
                const BuildState child = apply_move(state, mv, ctx.rules);
                const double s = ctx.eval(child);
                // terminal children were evaluated but cannot be extended
                if (is_terminal(child, ctx.rules)) continue;
                next.push_back(
                    {s, arena.add(e.node, move_code(mv, ctx.rules.target))});
            }
        }
        // keep the best `width`, earliest-inserted first on ties
        std::sort(next.begin(), next.end(), BestFirst{});
        if (next.size() > static_cast<std::size_t>(ctx.params.beam_width))
            next.resize(static_cast<std::size_t>(ctx.params.beam_width));
        beam = std::move(next);
    }
}

}  // namespace refute::detail
