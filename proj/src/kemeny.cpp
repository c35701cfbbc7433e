#include "kemeny/kemeny.hpp"

#include "kemeny/errors.hpp"

namespace kemeny {
namespace {

void require_connected(const Graph& g) { (void)bfs_distances(g, 0); }

}  // namespace

StationaryDistribution stationary_distribution(const Graph& g) {
    require_connected(g);
    if (g.order() == 1) return {Rational(1)};
    const long two_l = 2L * g.size();
    StationaryDistribution w;
    w.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) w.push_back(make_rational(g.degree(v), two_l));
    return w;
}

MfptMatrix mfpt_matrix(const Graph& g) {
    const StationaryDistribution w = stationary_distribution(g);
    const int n = g.order();
    MfptMatrix m(n);
    for (Vertex k = 0; k < n; ++k) {
        m(k, k) = 1 / w[static_cast<std::size_t>(k)];
        if (n == 1) continue;
        // Unknown index of vertex j != k in the reduced system.
        auto slot = [k](Vertex j) { return j < k ? j : j - 1; };
        IntMatrix a(n - 1);
        std::vector<std::int64_t> rhs(static_cast<std::size_t>(n - 1));
        for (Vertex j = 0; j < n; ++j) {
            if (j == k) continue;
            a(slot(j), slot(j)) = g.degree(j);
            rhs[static_cast<std::size_t>(slot(j))] = g.degree(j);
            for (Vertex i : g.neighbors(j)) {
                if (i != k) a(slot(j), slot(i)) = -1;
            }
        }
        const std::vector<Rational> x = solve_exact(a, rhs);
        for (Vertex j = 0; j < n; ++j) {
            if (j != k) m(j, k) = x[static_cast<std::size_t>(slot(j))];
        }
    }
    return m;
}

std::vector<Rational> kemeny_per_start_state(const Graph& g) {
    const StationaryDistribution w = stationary_distribution(g);
    const MfptMatrix m = mfpt_matrix(g);
    const int n = g.order();
    std::vector<Rational> sums(static_cast<std::size_t>(n));
    for (Vertex j = 0; j < n; ++j) {
        Rational s;
        for (Vertex k = 0; k < n; ++k) {
            if (k != j) s += m(j, k) * w[static_cast<std::size_t>(k)];
        }
        sums[static_cast<std::size_t>(j)] = s;
    }
    return sums;
}

Rational kemeny_mfpt(const Graph& g) {
    const std::vector<Rational> sums = kemeny_per_start_state(g);
    for (std::size_t j = 1; j < sums.size(); ++j) {
        if (sums[j] != sums[0]) {
            throw InternalConsistencyError("Kemeny sum from state " + std::to_string(j) + " is " +
                                           to_exact_string(sums[j]) + " but from state 0 is " +
                                           to_exact_string(sums[0]));
        }
    }
    return sums.front();
}

Rational kemeny_forest(const Graph& g) {
    require_connected(g);
    if (g.order() == 1) return 0;
    return kemeny_forest(g, two_forest_separation_matrix(g), spanning_tree_count(g));
}

Rational kemeny_forest(const Graph& g, const ForestSeparationMatrix& sigma, const BigInt& tree_count) {
    const int n = g.order();
    if (n == 1) return 0;
    if (sigma.size() != n) throw PreconditionError("kemeny_forest: Sigma has the wrong order");
    if (tree_count == 0) throw PreconditionError("kemeny_forest: graph has no spanning tree");
    BigInt quad = 0;
    BigInt row;
    for (Vertex a = 0; a < n; ++a) {
        row = 0;
        for (Vertex b = 0; b < n; ++b) {
            if (a != b) row += sigma(a, b) * g.degree(b);
        }
        quad += row * g.degree(a);
    }
    return make_rational(quad, BigInt(4L * g.size()) * tree_count);
}

BigInt degree_weighted_distance_sum(const Tree& t) {
    const int n = t.order();
    if (n == 1) return 0;
    std::vector<Vertex> order;
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(0);
    parent[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Vertex x = order[head];
        for (Vertex y : t.neighbors(x)) {
            if (parent[static_cast<std::size_t>(y)] < 0) {
                parent[static_cast<std::size_t>(y)] = x;
                order.push_back(y);
            }
        }
    }
    const __int128 total = 2 * static_cast<__int128>(n - 1);
    std::vector<std::int64_t> side(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = t.degree(v);
    __int128 sum = 0;
    for (auto it = order.rbegin(); it + 1 != order.rend(); ++it) {
        const auto s = static_cast<__int128>(side[static_cast<std::size_t>(*it)]);
        sum += 2 * s * (total - s);
        side[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])] += side[static_cast<std::size_t>(*it)];
    }
    return to_bigint(sum);
}

Rational kemeny_tree_fast(const Tree& t) {
    if (t.order() == 1) return 0;
    return make_rational(degree_weighted_distance_sum(t), BigInt(4L * (t.order() - 1)));
}

}  // namespace kemeny
