#include "kemeny/graph.hpp"

#include "kemeny/errors.hpp"

#include <algorithm>
#include <string>

namespace kemeny {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 1) throw PreconditionError("graph needs at least one vertex");
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    "} has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw PreconditionError("duplicate edge {" + std::to_string(dup->u) + "," +
                                std::to_string(dup->v) + "}");
    }
    build_adjacency();
}

void Graph::build_adjacency() {
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const Edge& e : edges_) {
        ++offsets_[static_cast<std::size_t>(e.u) + 1];
        ++offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(static_cast<std::size_t>(offsets_.back()));
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) adjacency_[static_cast<std::size_t>(fill[e.u]++)] = e.v;
    for (const Edge& e : edges_) adjacency_[static_cast<std::size_t>(fill[e.v]++)] = e.u;
    for (int v = 0; v < n_; ++v) {
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
    }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    const auto begin = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
    const auto end = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
    return {adjacency_.data() + begin, end - begin};
}

int Graph::degree(Vertex v) const {
    return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_connected() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : neighbors(x)) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n_;
}

Tree::Tree(Graph g) : graph_(std::move(g)) {
    if (graph_.size() != graph_.order() - 1) {
        throw PreconditionError("not a tree: " + std::to_string(graph_.order()) + " vertices but " +
                                std::to_string(graph_.size()) + " edges");
    }
    if (!graph_.is_connected()) throw PreconditionError("not a tree: graph is disconnected");
}

Tree::Tree(int n, std::span<const Edge> edges) : Tree(Graph(n, edges)) {}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw PreconditionError("cannot add a self-loop at " + std::to_string(u));
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
        throw PreconditionError("add_edge: vertex out of range");
    }
    if (g.has_edge(u, v)) {
        throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} already present");
    }
    std::vector<Edge> edges = g.edges();
    edges.push_back({u, v});
    return Graph(g.order(), edges);
}

std::vector<int> degree_vector(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    return d;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    if (source < 0 || source >= g.order()) throw PreconditionError("bfs source out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(g.order()));
    queue.push_back(source);
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (Vertex y : g.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (dist[static_cast<std::size_t>(v)] < 0) throw DisconnectedGraphError(source, v);
    }
    return dist;
}

Tree path_tree(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Tree(n, edges);
}

Tree star_tree(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({0, i});
    return Tree(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw PreconditionError("complete bipartite parts must be nonempty");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph(a + b, edges);
}

}  // namespace kemeny
