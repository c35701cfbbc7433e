#include "kemeny/forests.hpp"

namespace kemeny {
namespace {

// L with the listed (sorted, distinct) rows and columns removed.
IntMatrix principal_submatrix(const IntMatrix& l, int skip_a, int skip_b) {
    const int n = l.size();
    const int removed = skip_a == skip_b ? 1 : 2;
    IntMatrix out(n - removed);
    int oi = 0;
    for (int i = 0; i < n; ++i) {
        if (i == skip_a || i == skip_b) continue;
        int oj = 0;
        for (int j = 0; j < n; ++j) {
            if (j == skip_a || j == skip_b) continue;
            out(oi, oj++) = l(i, j);
        }
        ++oi;
    }
    return out;
}

}  // namespace

SquareMatrix<int> all_pairs_distances(const Graph& g) {
    const int n = g.order();
    SquareMatrix<int> d(n);
    for (Vertex s = 0; s < n; ++s) {
        const auto row = bfs_distances(g, s);
        for (Vertex t = 0; t < n; ++t) d(s, t) = row[static_cast<std::size_t>(t)];
    }
    return d;
}

ForestSeparationMatrix distance_matrix(const Tree& t) {
    const auto d = all_pairs_distances(t.graph());
    ForestSeparationMatrix out(t.order());
    for (int i = 0; i < t.order(); ++i)
        for (int j = 0; j < t.order(); ++j) out(i, j) = d(i, j);
    return out;
}

IntMatrix laplacian(const Graph& g) {
    IntMatrix l(g.order());
    for (Vertex v = 0; v < g.order(); ++v) l(v, v) = g.degree(v);
    for (const Edge& e : g.edges()) {
        l(e.u, e.v) = -1;
        l(e.v, e.u) = -1;
    }
    return l;
}

BigInt spanning_tree_count(const Graph& g) {
    if (g.order() == 1) return 1;
    return bareiss_determinant(principal_submatrix(laplacian(g), 0, 0));
}

ForestSeparationMatrix two_forest_separation_matrix(const Graph& g) {
    const int n = g.order();
    const IntMatrix l = laplacian(g);
    ForestSeparationMatrix sigma(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const BigInt minor = bareiss_determinant(principal_submatrix(l, a, b));
            sigma(a, b) = minor;
            sigma(b, a) = minor;
        }
    }
    return sigma;
}

}  // namespace kemeny
