#include "refute/conjecture.hpp"

#include <cmath>
#include <limits>

#include "refute/invariants.hpp"

namespace refute {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

ScoreReport undefined_report() { return {false, 0.0, 0.0, kNegInf}; }

ScoreReport make_report(double lhs, double rhs) {
    return {true, lhs, rhs, lhs - rhs};
}

// randic <= number of negative adjacency eigenvalues
ScoreReport score_29(const Graph& g, const ConjectureOptions&) {
    const Spectrum s = eigenvalues(adjacency_matrix(g));
    const double rhs = count_negative(s, zero_tolerance(s));
    return make_report(randic_index(g), rhs);
}

// number of positive distance eigenvalues <= temperature sum
ScoreReport score_30(const Graph& g, const ConjectureOptions&) {
    if (!is_connected(g)) return undefined_report();
    const Spectrum s = eigenvalues(distance_matrix(g));
    const double lhs = count_positive(s, zero_tolerance(s));
    return make_report(lhs, temperature_sum(g));
}

// second largest adjacency eigenvalue <= harmonic index
ScoreReport score_137(const Graph& g, const ConjectureOptions&) {
    if (g.order() < 2) return undefined_report();
    const Spectrum s = eigenvalues(adjacency_matrix(g));
    return make_report(s.second_largest(), harmonic_index(g));
}

// negated second smallest adjacency eigenvalue <= harmonic index
ScoreReport score_139(const Graph& g, const ConjectureOptions&) {
    if (g.order() < 2) return undefined_report();
    const Spectrum s = eigenvalues(adjacency_matrix(g));
    return make_report(-s.second_smallest(), harmonic_index(g));
}

// negated second smallest adjacency eigenvalue <= range of the gravity
// spectrum (triangle-free graphs)
ScoreReport score_197(const Graph& g, const ConjectureOptions& opts) {
    if (g.order() < 2) return undefined_report();
    const Spectrum adj = eigenvalues(adjacency_matrix(g));
    const Spectrum grav = eigenvalues(gravity_matrix(g));
    return make_report(-adj.second_smallest(),
                       spectrum_range(grav, opts.range));
}

// second largest adjacency eigenvalue <= mean of neighbor-degree means
// (girth >= 5)
ScoreReport score_289(const Graph& g, const ConjectureOptions&) {
    if (g.order() < 2) return undefined_report();
    const std::optional<double> mnd = mean_neighbor_degree_mean(g);
    if (!mnd) return undefined_report();
    const Spectrum s = eigenvalues(adjacency_matrix(g));
    return make_report(s.second_largest(), *mnd);
}

// scope of positive adjacency eigenvalues <= harmonic index (trees)
ScoreReport score_301(const Graph& g, const ConjectureOptions&) {
    const Spectrum s = eigenvalues(adjacency_matrix(g));
    const std::optional<double> scope = positive_scope(s);
    if (!scope) return undefined_report();
    return make_report(*scope, harmonic_index(g));
}

// inverse-even sum <= range of the distance spectrum (triangle-free graphs)
ScoreReport score_322(const Graph& g, const ConjectureOptions& opts) {
    if (!is_connected(g)) return undefined_report();
    const std::optional<double> inv = inverse_even_sum(g);
    if (!inv) return undefined_report();
    const Spectrum s = eigenvalues(distance_matrix(g));
    return make_report(*inv, spectrum_range(s, opts.range));
}

std::vector<Conjecture> build_registry() {
    std::vector<Conjecture> all;
    all.push_back({"graffiti-29",
                   "randic index <= number of negative adjacency eigenvalues",
                   GraphClass::Any, 7, 7, &score_29, false});
    all.push_back({"graffiti-30",
                   "number of positive distance eigenvalues <= temperature sum",
                   GraphClass::Any, 12, 30, &score_30, false});
    all.push_back({"graffiti-137",
                   "second largest adjacency eigenvalue <= harmonic index",
                   GraphClass::Any, 67, 67, &score_137, false});
    all.push_back({"graffiti-139",
                   "-(second smallest adjacency eigenvalue) <= harmonic index",
                   GraphClass::Any, 50, 50, &score_139, false});
    all.push_back({"graffiti-197",
                   "-(second smallest adjacency eigenvalue) <= range of the "
                   "gravity spectrum, on triangle-free graphs",
                   GraphClass::TriangleFree, 17, 17, &score_197, true});
    all.push_back({"graffiti-289",
                   "second largest adjacency eigenvalue <= mean of "
                   "neighbor-degree means, on graphs of girth >= 5",
                   GraphClass::GirthAtLeast5, 20, 20, &score_289, false});
    all.push_back({"graffiti-301",
                   "scope of positive adjacency eigenvalues <= harmonic "
                   "index, on trees",
                   GraphClass::Tree, 14, 14, &score_301, false});
    all.push_back({"graffiti-322",
                   "inverse-even sum <= range of the distance spectrum, on "
                   "triangle-free graphs",
                   GraphClass::TriangleFree, 2, 50, &score_322, true});
    return all;
}

}  // namespace

const std::vector<Conjecture>& all_conjectures() {
    static const std::vector<Conjecture> registry = build_registry();
    return registry;
}

const Conjecture* find_conjecture(std::string_view id) {
    for (const Conjecture& c : all_conjectures()) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

ScoreReport score(const Conjecture& c, const Graph& g,
                  const ConjectureOptions& opts) {
    return c.score_fn(g, opts);
}

bool is_counterexample(const Conjecture& c, const Graph& g,
                       const ConjectureOptions& opts, double eps) {
    if (g.order() < c.min_size) return false;
    if (!is_connected(g)) return false;
    if (!satisfies_class(g, c.accept_class)) return false;
    const ScoreReport r = score(c, g, opts);
    return r.defined && r.score > eps;
}

}  // namespace refute
