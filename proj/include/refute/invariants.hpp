#pragma once

#include <optional>

#include "refute/graph.hpp"

// Scalar graph invariants used on the right/left sides of the conjectures.
// The optional-valued ones are genuinely undefined on some graphs; callers
// treat undefined as "no counter-example here".

namespace refute {

// sum over edges of 2 / (deg u + deg v)
double harmonic_index(const Graph& g);

// sum over edges of 1 / sqrt(deg u * deg v)
double randic_index(const Graph& g);

// sum over vertices of deg v / (n - deg v)
double temperature_sum(const Graph& g);

// Ev(v) = number of vertices at positive even distance from v.
// Result is sum over v of 1/Ev(v); undefined when some Ev(v) = 0.
std::optional<double> inverse_even_sum(const Graph& g);

// mean over vertices of the mean degree of their neighbors; undefined
// when some vertex is isolated
std::optional<double> mean_neighbor_degree_mean(const Graph& g);

}  // namespace refute
