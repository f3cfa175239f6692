#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tk {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown for malformed input, bad vertices and violated preconditions.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on dense indices 0..n-1.
///
/// Every vertex carries a label; unlabeled constructions use the decimal
/// index. Connectivity is not enforced here; operations that need it check it.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges collapse; loops throw.
    Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});

    int order() const { return n_; }
    std::size_t size() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[index(u, v)] != 0; }
    std::span<const Vertex> neighbors(Vertex v) const { return nbrs_[v]; }
    int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }

    const std::string& label(Vertex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Vertex> find(std::string_view label) const;

    /// Resolves a label, falling back to a decimal index. Throws if neither matches.
    Vertex vertex(std::string_view token) const;

    bool contains(Vertex v) const { return v >= 0 && v < n_; }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
    std::vector<std::string> labels_;
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);
std::optional<int> regular_degree(const Graph& g);

/// BFS distances from one vertex; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Text formats.

/// Whitespace-separated vertex pairs, one per line, `#` starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// graph6: size prefix then the upper triangle, column-major, 6 bits per byte + 63.
Graph parse_graph6(std::string_view bytes);
std::string to_graph6(const Graph& g);

/// True when the text looks like one or more graph6 lines rather than an edge list.
bool looks_like_graph6(std::string_view text);

}  // namespace tk
