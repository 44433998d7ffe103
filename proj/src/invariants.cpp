#include "refute/invariants.hpp"

#include <cmath>

namespace refute {

double harmonic_index(const Graph& g) {
    const int n = g.order();
    double sum = 0.0;
    for (int u = 0; u < n; ++u) {
        const std::uint8_t* row = g.adjacency_row(u);
        for (int v = u + 1; v < n; ++v) {
            if (row[v]) sum += 2.0 / (g.degree(u) + g.degree(v));
        }
    }
    return sum;
}

double randic_index(const Graph& g) {
    const int n = g.order();
    double sum = 0.0;
    for (int u = 0; u < n; ++u) {
        const std::uint8_t* row = g.adjacency_row(u);
        for (int v = u + 1; v < n; ++v) {
            if (row[v])
                sum += 1.0 / std::sqrt(static_cast<double>(g.degree(u)) *
                                       g.degree(v));
        }
    }
    return sum;
}

double temperature_sum(const Graph& g) {
    const int n = g.order();
    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
        sum += static_cast<double>(g.degree(v)) / (n - g.degree(v));
    }
    return sum;
}

std::optional<double> inverse_even_sum(const Graph& g) {
    const int n = g.order();
    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
        const std::vector<int> dist = bfs_distances(g, v);
        int ev = 0;
        for (int u = 0; u < n; ++u) {
            if (dist[u] > 0 && dist[u] % 2 == 0) ++ev;
        }
        if (ev == 0) return std::nullopt;
        sum += 1.0 / ev;
    }
    return sum;
}

std::optional<double> mean_neighbor_degree_mean(const Graph& g) {
    const int n = g.order();
    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
        const int dv = g.degree(v);
        if (dv == 0) return std::nullopt;
        long total = 0;
        const std::uint8_t* row = g.adjacency_row(v);
        for (int u = 0; u < n; ++u) {
            if (row[u]) total += g.degree(u);
        }
        sum += static_cast<double>(total) / dv;
    }
    return sum / n;
}

}  // namespace refute
