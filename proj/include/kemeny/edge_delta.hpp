#pragma once

#include "kemeny/forests.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/rational.hpp"

#include <span>
#include <vector>

namespace kemeny {

/// Structure of a tree relative to a non-edge {u, v}: the tree path
/// v_1 = u, ..., v_c = v and the branch T_j hanging off each path vertex v_j.
///
/// Branch indices are 0-based here (branch j holds path[j]); the closed form
/// only depends on index differences so the shift is harmless.
struct CycleDecomposition {
    int n = 0;
    std::vector<Vertex> path;          // v_1..v_c
    std::vector<int> branch_of;        // tree vertex -> branch index
    std::vector<long> sizes;           // m = [n_1..n_c]
    std::vector<BigInt> branch_scores; // R(T_j), rooted at v_j

    int cycle_length() const noexcept { return static_cast<int>(path.size()); }

    /// The vector u: 1 at v_1 and v_c, 0 elsewhere (indexed by tree vertex).
    std::vector<int> endpoint_indicator() const;
};

/// Throws PreconditionError when u == v, either is out of range, or {u, v}
/// is already a tree edge (the cycle would have length 2).
CycleDecomposition decompose(const Tree& t, Vertex u, Vertex v);

/// B = [(n-1)(j-k)^2 + c|j-k|], c x c. Requires 3 <= c <= n.
struct BMatrix {
    long n = 0;
    int c = 0;
    IntMatrix entries;
};

BMatrix b_matrix(long n, int c);

/// Closed-form j-th row sum of B (1-based j):
///   n c j (j - (c+1)) + c(c+1)/6 ((2n+1)c + n - 1).
BigInt b_row_sum(long n, long c, long j);

/// 1^T B 1 = (n+1) c^2 (c^2 - 1) / 6.
BigInt b_total_sum(long n, long c);

/// m^T B m by summing every entry of B, O(c^2).
BigInt b_quadratic_form_literal(const BMatrix& b, std::span<const long> m);

/// m^T B m in O(c) from moment and prefix sums of m.
BigInt b_quadratic_form(long n, std::span<const long> m);

/// The bracketed numerator of the closed form,
///   4c sum R(T_j) - 4 m^T B m + 4n(n-1)c(c-1) + 2(n-1)c^2,
/// whose quotient by 4cn(n-1) is the change in Kemeny's constant.
BigInt delta_numerator(const CycleDecomposition& d);

/// K(T + v_1 v_c) - K(T), exactly, in O(n) given the decomposition.
Rational delta_kemeny_closed(const CycleDecomposition& d);

/// Oracle: kemeny_forest(T + uv) - kemeny_tree_fast(T).
Rational delta_kemeny_direct(const Tree& t, Vertex u, Vertex v);

/// Sigma of T + v_1 v_c assembled as c D + J~, J~ having block (j,k) equal to
/// -(j-k)^2 times the all-ones block.
ForestSeparationMatrix sigma_unicyclic(const CycleDecomposition& d, const Tree& t);
ForestSeparationMatrix sigma_unicyclic(const CycleDecomposition& d, const SquareMatrix<int>& tree_distances);

}  // namespace kemeny
