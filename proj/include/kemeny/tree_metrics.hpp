#pragma once

#include "kemeny/graph.hpp"
#include "kemeny/matrix.hpp"
#include "kemeny/rational.hpp"

#include <span>
#include <vector>

namespace kemeny {

/// A tree with a distinguished root vertex.
class RootedTree {
public:
    /// Throws PreconditionError when root is not a vertex of t.
    RootedTree(Tree t, Vertex root);

    const Tree& tree() const noexcept { return tree_; }
    Vertex root() const noexcept { return root_; }

private:
    Tree tree_;
    Vertex root_;
};

/// Distance from r to the a-b path: (d(r,a) + d(r,b) - d(a,b)) / 2, which is
/// always a nonnegative integer no larger than n - 1.
int distance_to_path(const SquareMatrix<int>& dist, Vertex r, Vertex a, Vertex b);
int distance_to_path(const Tree& t, Vertex r, Vertex a, Vertex b);

/// 2 * sum over all b of the distance from r to the a-b path. In [0, n(n-1)].
long path_distance_sum(const Tree& t, Vertex r, Vertex a);

/// Sum of distances from r to every vertex (1^T D e_r), one BFS.
long sum_distances_from(const Tree& t, Vertex r);

/// 1^T D 1 = sum over edges of 2 s (n - s), s a side size; O(n).
BigInt total_distance_sum(const Tree& t);

/// Branch score R = 2(n-1) 1^T D e_root - 1^T D 1, in O(n).
/// 0 <= R <= (2/3) n (n-1) (n-2).
BigInt r_value(const RootedTree& rt);

/// Definitional form 4 * sum_{a<b} d(root, P_{a,b}), O(n^2) after O(n^2)
/// distance precomputation. Oracle for r_value.
BigInt r_value_combinatorial(const RootedTree& rt);

/// Subtrees hanging off a set of root vertices: deleting the tree edges
/// between consecutive roots splits t into one component per root.
struct BranchScan {
    std::vector<int> branch_of;  // vertex -> index into roots
    std::vector<long> sizes;     // vertices per branch
    std::vector<BigInt> scores;  // R of each branch, rooted at its root
};

/// `roots` must be a path in t (consecutive entries adjacent). Computes every
/// branch's size and R value in one O(n) traversal.
BranchScan scan_branches(const Tree& t, std::span<const Vertex> roots);

}  // namespace kemeny
