#pragma once

#include "kemeny/forests.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/rational.hpp"

#include <vector>

namespace kemeny {

/// Stationary distribution of the simple random walk: w_i = d_i / (2 * edges).
/// Sums to exactly 1. For the one-vertex graph this is [1].
using StationaryDistribution = std::vector<Rational>;

/// Mean first passage times m(j,k); the diagonal holds return times 1 / w_k.
using MfptMatrix = SquareMatrix<Rational>;

/// Throws DisconnectedGraphError when g is disconnected.
StationaryDistribution stationary_distribution(const Graph& g);

/// Per target k, solves the first-step equations
///   d_j m(j,k) - sum_{i ~ j, i != k} m(i,k) = d_j   (j != k)
/// exactly. Throws DisconnectedGraphError when g is disconnected.
MfptMatrix mfpt_matrix(const Graph& g);

/// sum_{k != j} m(j,k) w_k for every start state j. These are all equal
/// for an irreducible chain; the vector is returned so callers can check.
std::vector<Rational> kemeny_per_start_state(const Graph& g);

/// Kemeny's constant from mean first passage times. Throws
/// InternalConsistencyError if the per-state sums disagree. 0 for n = 1.
Rational kemeny_mfpt(const Graph& g);

/// Kemeny's constant as d^T Sigma d / (4 * edges * spanning trees).
Rational kemeny_forest(const Graph& g);

/// Same formula with Sigma and the spanning-tree count supplied by the caller.
Rational kemeny_forest(const Graph& g, const ForestSeparationMatrix& sigma, const BigInt& tree_count);

/// d^T D d for a tree in O(n), via sum over edges e of 2 S_e (W - S_e), where
/// S_e is the degree sum on one side of e and W = 2(n - 1).
BigInt degree_weighted_distance_sum(const Tree& t);

/// Kemeny's constant of a tree, d^T D d / (4(n - 1)), in O(n). 0 for n = 1.
Rational kemeny_tree_fast(const Tree& t);

}  // namespace kemeny
