#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Simple undirected graphs, dense adjacency, vertex ids 0..n-1.
// Sizes stay small (tens of vertices), so O(n^2) storage and O(n^3)
// all-pairs scans are the pragmatic choice.

namespace refute {

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    static Graph single_vertex() { return Graph(1); }

    int order() const { return n_; }
    int edge_count() const { return m_; }

    // returns the new vertex's id
    int add_vertex();

    // rejects self-loops and existing edges
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }

    int degree(int v) const {
        check_vertex(v);
        return deg_[v];
    }

    std::vector<int> neighbors(int v) const;

    // row v of the adjacency matrix, n bytes of 0/1
    const std::uint8_t* adjacency_row(int v) const {
        check_vertex(v);
        return adj_.data() + static_cast<std::size_t>(v) * n_;
    }

    bool operator==(const Graph& other) const = default;

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex id " + std::to_string(v) +
                                    " out of range [0, " +
                                    std::to_string(n_) + ")");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint8_t> adj_;  // n*n, row-major
    std::vector<int> deg_;
};

// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

// all-pairs distances as a flat n*n row-major array, -1 unreachable
std::vector<int> all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// length of the shortest cycle; nullopt for forests
std::optional<int> girth(const Graph& g);

enum class GraphClass { Any, TriangleFree, GirthAtLeast5, Tree };

std::string_view class_name(GraphClass c);
std::optional<GraphClass> class_from_name(std::string_view name);

// whether adding edge (u,v) keeps the graph inside the class, judged
// against the current graph (distance rules for the girth classes)
bool edge_is_class_legal(const Graph& g, int u, int v, GraphClass c);

// whole-graph membership test, used when accepting counter-examples
bool satisfies_class(const Graph& g, GraphClass c);

// Edge-list text format: "u-v" tokens separated by whitespace or commas,
// decimal vertex labels; the vertex set is 0..max(label). Rejects malformed
// tokens, self-loops and duplicates.
Graph parse_edge_list(std::string_view text);

// canonical inverse of parse_edge_list: "u-v" with u<v, ascending, space-joined
std::string serialize_edge_list(const Graph& g);

std::string to_dot(const Graph& g);

}  // namespace refute
