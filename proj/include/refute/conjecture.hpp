#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "refute/graph.hpp"
#include "refute/spectral.hpp"

// The conjecture registry. Each conjecture is an inequality lhs <= rhs over
// a graph class; score = lhs - rhs, and a graph refutes the conjecture when
// the score is defined and clears kScoreEpsilon while the graph satisfies
// the class, is connected, and has at least min_size vertices.

namespace refute {

inline constexpr double kScoreEpsilon = 1e-6;

struct ConjectureOptions {
    // which notion of "range of a spectrum" the range-based conjectures use
    RangeDef range = RangeDef::Diff;
};

struct ScoreReport {
    bool defined = false;
    double lhs = 0.0;
    double rhs = 0.0;
    // lhs - rhs when defined, -inf otherwise ("holds")
    double score = 0.0;
};

struct Conjecture {
    std::string id;         // e.g. "graffiti-29"
    std::string statement;  // human-readable inequality
    GraphClass accept_class;
    int min_size;        // counter-examples need at least this many vertices
    int default_target;  // default construction size for searches
    ScoreReport (*score_fn)(const Graph&, const ConjectureOptions&);
    bool uses_range = false;  // whether --range affects this conjecture
};

const std::vector<Conjecture>& all_conjectures();

// nullptr when the id is unknown
const Conjecture* find_conjecture(std::string_view id);

ScoreReport score(const Conjecture& c, const Graph& g,
                  const ConjectureOptions& opts = {});

bool is_counterexample(const Conjecture& c, const Graph& g,
                       const ConjectureOptions& opts = {},
                       double eps = kScoreEpsilon);

}  // namespace refute
