#include "refute/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace refute {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    deg_.assign(n, 0);
}

int Graph::add_vertex() {
    const int n = n_ + 1;
    std::vector<std::uint8_t> grown(static_cast<std::size_t>(n) * n, 0);
    for (int v = 0; v < n_; ++v) {
        std::copy_n(adj_.data() + static_cast<std::size_t>(v) * n_, n_,
                    grown.data() + static_cast<std::size_t>(v) * n);
    }
    adj_ = std::move(grown);
    deg_.push_back(0);
    n_ = n;
    return n - 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " +
                                    std::to_string(u));
    if (has_edge(u, v))
        throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                                    std::to_string(v) + " already present");
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    ++deg_[u];
    ++deg_[v];
    ++m_;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(deg_[v]);
    const std::uint8_t* row = adjacency_row(v);
    for (int u = 0; u < n_; ++u)
        if (row[u]) out.push_back(u);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.order();
    std::vector<int> dist(n, -1);
    if (source < 0 || source >= n)
        throw std::out_of_range("bfs source out of range");
    std::vector<int> queue;
    queue.reserve(n);
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        const std::uint8_t* row = g.adjacency_row(v);
        for (int u = 0; u < n; ++u) {
            if (row[u] && dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

std::vector<int> all_pairs_distances(const Graph& g) {
    const int n = g.order();
    std::vector<int> out(static_cast<std::size_t>(n) * n);
    for (int v = 0; v < n; ++v) {
        const std::vector<int> row = bfs_distances(g, v);
        std::copy(row.begin(), row.end(),
                  out.begin() + static_cast<std::size_t>(v) * n);
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    const std::vector<int> dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

namespace {

// shortest cycle through edge (u,v): 1 + dist(u, v) in G minus that edge
int cycle_through_edge(const Graph& g, int eu, int ev) {
    const int n = g.order();
    std::vector<int> dist(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    dist[eu] = 0;
    queue.push_back(eu);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        const std::uint8_t* row = g.adjacency_row(v);
        for (int u = 0; u < n; ++u) {
            if (!row[u] || dist[u] >= 0) continue;
            if ((v == eu && u == ev) || (v == ev && u == eu))
                continue;  // the removed edge
            dist[u] = dist[v] + 1;
            if (u == ev) return dist[u] + 1;
            queue.push_back(u);
        }
    }
    return std::numeric_limits<int>::max();
}

}  // namespace

std::optional<int> girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        const std::uint8_t* row = g.adjacency_row(u);
        for (int v = u + 1; v < n; ++v) {
            if (row[v]) best = std::min(best, cycle_through_edge(g, u, v));
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::string_view class_name(GraphClass c) {
    switch (c) {
        case GraphClass::Any:
            return "any";
        case GraphClass::TriangleFree:
            return "triangle-free";
        case GraphClass::GirthAtLeast5:
            return "girth-at-least-5";
        case GraphClass::Tree:
            return "tree";
    }
    return "any";
}

std::optional<GraphClass> class_from_name(std::string_view name) {
    if (name == "any") return GraphClass::Any;
    if (name == "triangle-free") return GraphClass::TriangleFree;
    if (name == "girth-at-least-5") return GraphClass::GirthAtLeast5;
    if (name == "tree") return GraphClass::Tree;
    return std::nullopt;
}

namespace {

// truncated BFS: distance from s to t, or `cap` if dist >= cap
int dist_up_to(const Graph& g, int s, int t, int cap) {
    const int n = g.order();
    std::vector<int> dist(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        if (dist[v] + 1 >= cap) break;  // deeper layers can't improve on cap
        const std::uint8_t* row = g.adjacency_row(v);
        for (int u = 0; u < n; ++u) {
            if (!row[u] || dist[u] >= 0) continue;
            dist[u] = dist[v] + 1;
            if (u == t) return dist[u];
            queue.push_back(u);
        }
    }
    return (t == s) ? 0 : cap;
}

}  // namespace

bool edge_is_class_legal(const Graph& g, int u, int v, GraphClass c) {
    if (u == v || u < 0 || v < 0 || u >= g.order() || v >= g.order())
        return false;
    if (g.has_edge(u, v)) return false;
    switch (c) {
        case GraphClass::Any:
            return true;
        case GraphClass::TriangleFree:
            // joining vertices at distance < 3 would close a triangle
            return dist_up_to(g, u, v, 3) >= 3;
        case GraphClass::GirthAtLeast5:
            return dist_up_to(g, u, v, 4) >= 4;
        case GraphClass::Tree:
            return false;  // any extra edge closes a cycle
    }
    return false;
}

bool satisfies_class(const Graph& g, GraphClass c) {
    switch (c) {
        case GraphClass::Any:
            return true;
        case GraphClass::TriangleFree: {
            const int n = g.order();
            for (int u = 0; u < n; ++u) {
                const std::uint8_t* ru = g.adjacency_row(u);
                for (int v = u + 1; v < n; ++v) {
                    if (!ru[v]) continue;
                    const std::uint8_t* rv = g.adjacency_row(v);
                    for (int w = 0; w < n; ++w)
                        if (ru[w] && rv[w]) return false;
                }
            }
            return true;
        }
        case GraphClass::GirthAtLeast5: {
            const std::optional<int> gi = girth(g);
            return !gi.has_value() || *gi >= 5;
        }
        case GraphClass::Tree:
            return is_connected(g) && g.edge_count() == g.order() - 1;
    }
    return false;
}

namespace {

int parse_label(std::string_view tok, std::string_view whole) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty() ||
        value < 0)
        throw ParseError("bad vertex label '" + std::string(tok) +
                         "' in token '" + std::string(whole) + "'");
    return value;
}

}  // namespace

namespace {

// separators: whitespace and commas, so published comma-joined lists parse
bool is_separator(char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int max_label = -1;

    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_separator(text[i])) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !is_separator(text[j])) ++j;
        const std::string_view tok = text.substr(i, j - i);
        i = j;

        const std::size_t dash = tok.find('-');
        if (dash == std::string_view::npos)
            throw ParseError("expected 'u-v' token, got '" + std::string(tok) +
                             "'");
        const int u = parse_label(tok.substr(0, dash), tok);
        const int v = parse_label(tok.substr(dash + 1), tok);
        if (u == v)
            throw ParseError("self-loop in token '" + std::string(tok) + "'");
        edges.emplace_back(u, v);
        max_label = std::max({max_label, u, v});
    }

    if (edges.empty()) throw ParseError("empty edge list");

    Graph g(max_label + 1);
    for (const auto& [u, v] : edges) {
        if (g.has_edge(u, v))
            throw ParseError("duplicate edge " + std::to_string(u) + "-" +
                             std::to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    bool first = true;
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        const std::uint8_t* row = g.adjacency_row(u);
        for (int v = u + 1; v < n; ++v) {
            if (!row[v]) continue;
            if (!first) out << ' ';
            out << u << '-' << v;
            first = false;
        }
    }
    return out.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) out << "  " << v << ";\n";
    }
    for (int u = 0; u < n; ++u) {
        const std::uint8_t* row = g.adjacency_row(u);
        for (int v = u + 1; v < n; ++v) {
            if (row[v]) out << "  " << u << " -- " << v << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace refute
