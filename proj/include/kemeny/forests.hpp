#pragma once

#include "kemeny/graph.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

/// Symmetric, zero-diagonal matrix of 2-forest separation counts sigma(a,b):
/// the number of spanning forests with two trees, one holding a and the other
/// b. For a tree this is its hop-distance matrix.
using ForestSeparationMatrix = SquareMatrix<BigInt>;

/// Hop distances between all vertex pairs (one BFS per source).
SquareMatrix<int> all_pairs_distances(const Graph& g);

/// Distance matrix of a tree, as a ForestSeparationMatrix.
ForestSeparationMatrix distance_matrix(const Tree& t);

IntMatrix laplacian(const Graph& g);

/// Number of spanning trees: a principal (n-1)-minor of the Laplacian,
/// computed exactly. Returns 0 for a disconnected graph.
BigInt spanning_tree_count(const Graph& g);

/// sigma(a,b) as the Laplacian principal minor with rows and columns a and b
/// deleted (all-minors matrix tree theorem). All zeros for n = 1.
ForestSeparationMatrix two_forest_separation_matrix(const Graph& g);

}  // namespace kemeny
