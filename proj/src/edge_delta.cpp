#include "kemeny/edge_delta.hpp"

#include "kemeny/errors.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/tree_metrics.hpp"

#include <algorithm>
#include <string>

namespace kemeny {

std::vector<int> CycleDecomposition::endpoint_indicator() const {
    std::vector<int> u(static_cast<std::size_t>(n), 0);
    u[static_cast<std::size_t>(path.front())] = 1;
    u[static_cast<std::size_t>(path.back())] = 1;
    return u;
}

CycleDecomposition decompose(const Tree& t, Vertex u, Vertex v) {
    const int n = t.order();
    if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("decompose: vertex out of range");
    if (u == v) throw PreconditionError("decompose: endpoints must be distinct");
    if (t.has_edge(u, v)) {
        throw PreconditionError("decompose: {" + std::to_string(u) + "," + std::to_string(v) +
                                "} is already a tree edge");
    }
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue{u};
    parent[static_cast<std::size_t>(u)] = u;
    for (std::size_t head = 0; head < queue.size() && parent[static_cast<std::size_t>(v)] < 0; ++head) {
        for (Vertex y : t.neighbors(queue[head])) {
            if (parent[static_cast<std::size_t>(y)] < 0) {
                parent[static_cast<std::size_t>(y)] = queue[head];
                queue.push_back(y);
            }
        }
    }
    CycleDecomposition d;
    d.n = n;
    for (Vertex x = v; x != u; x = parent[static_cast<std::size_t>(x)]) d.path.push_back(x);
    d.path.push_back(u);
    std::reverse(d.path.begin(), d.path.end());
    BranchScan scan = scan_branches(t, d.path);
    d.branch_of = std::move(scan.branch_of);
    d.sizes = std::move(scan.sizes);
    d.branch_scores = std::move(scan.scores);
    return d;
}

BMatrix b_matrix(long n, int c) {
    if (c < 3 || c > n) {
        throw PreconditionError("b_matrix: need 3 <= c <= n, got n = " + std::to_string(n) +
                                ", c = " + std::to_string(c));
    }
    BMatrix b{n, c, IntMatrix(c)};
    for (int j = 0; j < c; ++j) {
        for (int k = 0; k < c; ++k) {
            const std::int64_t gap = j > k ? j - k : k - j;
            b.entries(j, k) = (n - 1) * gap * gap + c * gap;
        }
    }
    return b;
}

BigInt b_row_sum(long n, long c, long j) {
    if (c < 1 || j < 1 || j > c) {
        throw PreconditionError("b_row_sum: need 1 <= j <= c, got j = " + std::to_string(j) +
                                ", c = " + std::to_string(c));
    }
    BigInt tail = BigInt(c) * (c + 1) * ((2 * BigInt(n) + 1) * c + n - 1);
    mpz_divexact_ui(tail.get_mpz_t(), tail.get_mpz_t(), 6);
    return BigInt(n) * c * j * (j - (c + 1)) + tail;
}

BigInt b_total_sum(long n, long c) {
    BigInt total = BigInt(n + 1) * c * c * (BigInt(c) * c - 1);
    mpz_divexact_ui(total.get_mpz_t(), total.get_mpz_t(), 6);
    return total;
}

BigInt b_quadratic_form_literal(const BMatrix& b, std::span<const long> m) {
    if (static_cast<int>(m.size()) != b.c) throw PreconditionError("m has the wrong length");
    BigInt q = 0;
    for (int j = 0; j < b.c; ++j)
        for (int k = 0; k < b.c; ++k)
            q += BigInt(b.entries(j, k)) * m[static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(k)];
    return q;
}

BigInt b_quadratic_form(long n, std::span<const long> m) {
    const auto c = static_cast<long>(m.size());
    // sum_{j,k} (j-k)^2 m_j m_k = 2 (S0 S2 - S1^2) with S_p = sum j^p m_j.
    __int128 s0 = 0, s1 = 0, s2 = 0;
    // sum_{j,k} |j-k| m_j m_k = 2 sum_k m_k (k P0 - P1) over prefixes j < k.
    __int128 p0 = 0, p1 = 0, abs_sum = 0;
    for (long k = 0; k < c; ++k) {
        const __int128 mk = m[static_cast<std::size_t>(k)];
        s0 += mk;
        s1 += mk * k;
        s2 += mk * k * k;
        abs_sum += mk * (k * p0 - p1);
        p0 += mk;
        p1 += mk * k;
    }
    const BigInt sq = 2 * (to_bigint(s0) * to_bigint(s2) - to_bigint(s1) * to_bigint(s1));
    return BigInt(n - 1) * sq + BigInt(c) * 2 * to_bigint(abs_sum);
}

BigInt delta_numerator(const CycleDecomposition& d) {
    const long n = d.n;
    const long c = d.cycle_length();
    BigInt score_sum = 0;
    for (const BigInt& r : d.branch_scores) score_sum += r;
    return 4 * BigInt(c) * score_sum - 4 * b_quadratic_form(n, d.sizes) +
           4 * BigInt(n) * (n - 1) * c * (c - 1) + 2 * BigInt(n - 1) * c * c;
}

Rational delta_kemeny_closed(const CycleDecomposition& d) {
    const long n = d.n;
    const long c = d.cycle_length();
    return make_rational(delta_numerator(d), 4 * BigInt(c) * n * (n - 1));
}

Rational delta_kemeny_direct(const Tree& t, Vertex u, Vertex v) {
    (void)decompose(t, u, v);  // same preconditions as the closed form
    return kemeny_forest(add_edge(t.graph(), u, v)) - kemeny_tree_fast(t);
}

ForestSeparationMatrix sigma_unicyclic(const CycleDecomposition& d, const SquareMatrix<int>& dist) {
    const int n = d.n;
    const long c = d.cycle_length();
    ForestSeparationMatrix sigma(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const long gap = d.branch_of[static_cast<std::size_t>(a)] - d.branch_of[static_cast<std::size_t>(b)];
            sigma(a, b) = c * dist(a, b) - gap * gap;
        }
    }
    return sigma;
}

ForestSeparationMatrix sigma_unicyclic(const CycleDecomposition& d, const Tree& t) {
    return sigma_unicyclic(d, all_pairs_distances(t.graph()));
}

}  // namespace kemeny
