#pragma once

#include <compare>
#include <span>
#include <vector>

namespace kemeny {

using Vertex = int;

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Adjacency is stored in CSR form; neighbor lists are sorted ascending.
class Graph {
public:
    /// Edgeless graph on n >= 1 vertices.
    explicit Graph(int n);

    /// Throws PreconditionError on n < 1, out-of-range endpoints, self-loops,
    /// or duplicate edges. Edge orientation in the input does not matter.
    Graph(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    /// Sorted, normalized edge list.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;
    bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void build_adjacency();

    int n_;
    std::vector<Edge> edges_;
    std::vector<int> offsets_;
    std::vector<Vertex> adjacency_;
};

/// A connected graph with exactly n - 1 edges; checked at construction.
class Tree {
public:
    /// Throws PreconditionError when `g` is not a tree.
    explicit Tree(Graph g);
    Tree(int n, std::span<const Edge> edges);

    const Graph& graph() const noexcept { return graph_; }
    int order() const noexcept { return graph_.order(); }
    const std::vector<Edge>& edges() const noexcept { return graph_.edges(); }
    std::span<const Vertex> neighbors(Vertex v) const { return graph_.neighbors(v); }
    int degree(Vertex v) const { return graph_.degree(v); }
    bool has_edge(Vertex u, Vertex v) const { return graph_.has_edge(u, v); }

    friend bool operator==(const Tree&, const Tree&) = default;

private:
    Graph graph_;
};

/// Returns g plus the edge {u, v}. Throws PreconditionError when u == v, a
/// vertex is out of range, or the edge is already present.
Graph add_edge(const Graph& g, Vertex u, Vertex v);

std::vector<int> degree_vector(const Graph& g);

/// Hop distances from `source`. Throws DisconnectedGraphError naming an
/// unreachable vertex when g is disconnected.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

Tree path_tree(int n);
Tree star_tree(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);

}  // namespace kemeny
