#include "kemeny/tree_metrics.hpp"

#include "kemeny/errors.hpp"
#include "kemeny/forests.hpp"

#include <string>

namespace kemeny {
namespace {

void check_vertex(const Tree& t, Vertex v) {
    if (v < 0 || v >= t.order()) {
        throw PreconditionError("vertex " + std::to_string(v) + " is not in the tree");
    }
}

}  // namespace

RootedTree::RootedTree(Tree t, Vertex root) : tree_(std::move(t)), root_(root) {
    check_vertex(tree_, root_);
}

int distance_to_path(const SquareMatrix<int>& dist, Vertex r, Vertex a, Vertex b) {
    const int twice = dist(r, a) + dist(r, b) - dist(a, b);
    if (twice < 0 || twice % 2 != 0) {
        throw InternalConsistencyError("distance identity violated: d(r,a)+d(r,b)-d(a,b) = " +
                                       std::to_string(twice));
    }
    return twice / 2;
}

int distance_to_path(const Tree& t, Vertex r, Vertex a, Vertex b) {
    check_vertex(t, r);
    check_vertex(t, a);
    check_vertex(t, b);
    const auto from_r = bfs_distances(t.graph(), r);
    const auto from_a = bfs_distances(t.graph(), a);
    const int twice = from_r[static_cast<std::size_t>(a)] + from_r[static_cast<std::size_t>(b)] -
                      from_a[static_cast<std::size_t>(b)];
    return twice / 2;
}

long path_distance_sum(const Tree& t, Vertex r, Vertex a) {
    check_vertex(t, r);
    check_vertex(t, a);
    const auto from_r = bfs_distances(t.graph(), r);
    const auto from_a = bfs_distances(t.graph(), a);
    long sum = 0;
    for (Vertex b = 0; b < t.order(); ++b) {
        sum += from_r[static_cast<std::size_t>(a)] + from_r[static_cast<std::size_t>(b)] -
               from_a[static_cast<std::size_t>(b)];
    }
    return sum;
}

long sum_distances_from(const Tree& t, Vertex r) {
    check_vertex(t, r);
    long sum = 0;
    for (int d : bfs_distances(t.graph(), r)) sum += d;
    return sum;
}

BigInt total_distance_sum(const Tree& t) {
    const int n = t.order();
    std::vector<Vertex> order{0};
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    parent[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (Vertex y : t.neighbors(order[head])) {
            if (parent[static_cast<std::size_t>(y)] < 0) {
                parent[static_cast<std::size_t>(y)] = order[head];
                order.push_back(y);
            }
        }
    }
    std::vector<long> size(static_cast<std::size_t>(n), 1);
    __int128 sum = 0;
    for (auto it = order.rbegin(); it + 1 != order.rend(); ++it) {
        const long s = size[static_cast<std::size_t>(*it)];
        sum += 2 * static_cast<__int128>(s) * (n - s);
        size[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])] += s;
    }
    return to_bigint(sum);
}

BigInt r_value(const RootedTree& rt) {
    const Tree& t = rt.tree();
    const long n = t.order();
    return BigInt(2 * (n - 1)) * BigInt(sum_distances_from(t, rt.root())) - total_distance_sum(t);
}

BigInt r_value_combinatorial(const RootedTree& rt) {
    const Tree& t = rt.tree();
    const auto dist = all_pairs_distances(t.graph());
    long sum = 0;
    for (Vertex a = 0; a < t.order(); ++a)
        for (Vertex b = a + 1; b < t.order(); ++b) sum += distance_to_path(dist, rt.root(), a, b);
    return BigInt(4 * sum);
}

BranchScan scan_branches(const Tree& t, std::span<const Vertex> roots) {
    const int n = t.order();
    const auto c = roots.size();
    BranchScan scan{std::vector<int>(static_cast<std::size_t>(n), -1), std::vector<long>(c, 0),
                    std::vector<BigInt>(c)};
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<long> depth(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < c; ++j) {
        check_vertex(t, roots[j]);
        if (scan.branch_of[static_cast<std::size_t>(roots[j])] >= 0) {
            throw PreconditionError("scan_branches: repeated root");
        }
        if (j > 0 && !t.has_edge(roots[j - 1], roots[j])) {
            throw PreconditionError("scan_branches: roots must form a path");
        }
        scan.branch_of[static_cast<std::size_t>(roots[j])] = static_cast<int>(j);
        order.push_back(roots[j]);
    }
    // Multi-source BFS; roots are pre-labelled so traversal never crosses
    // between branches.
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Vertex x = order[head];
        for (Vertex y : t.neighbors(x)) {
            if (scan.branch_of[static_cast<std::size_t>(y)] >= 0) continue;
            scan.branch_of[static_cast<std::size_t>(y)] = scan.branch_of[static_cast<std::size_t>(x)];
            parent[static_cast<std::size_t>(y)] = x;
            depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
            order.push_back(y);
        }
    }
    std::vector<long> subtree(static_cast<std::size_t>(n), 1);
    std::vector<long> depth_sum(c, 0);
    for (Vertex v : order) {
        const auto j = static_cast<std::size_t>(scan.branch_of[static_cast<std::size_t>(v)]);
        ++scan.sizes[j];
        depth_sum[j] += depth[static_cast<std::size_t>(v)];
    }
    std::vector<__int128> cut_sum(c, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex p = parent[static_cast<std::size_t>(*it)];
        if (p < 0) continue;
        const auto j = static_cast<std::size_t>(scan.branch_of[static_cast<std::size_t>(*it)]);
        const long s = subtree[static_cast<std::size_t>(*it)];
        cut_sum[j] += 2 * static_cast<__int128>(s) * (scan.sizes[j] - s);
        subtree[static_cast<std::size_t>(p)] += s;
    }
    for (std::size_t j = 0; j < c; ++j) {
        const __int128 r = 2 * static_cast<__int128>(scan.sizes[j] - 1) * depth_sum[j] - cut_sum[j];
        scan.scores[j] = to_bigint(r);
    }
    return scan;
}

}  // namespace kemeny
