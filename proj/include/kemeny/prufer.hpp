#pragma once

#include "kemeny/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kemeny {

/// Default ceiling on n for exhaustive labeled-tree enumeration. 9^7 is about
/// 4.8 million trees; each further step multiplies the work by roughly e*n.
inline constexpr int kDefaultEnumerationCap = 9;

/// Decodes a Prufer code of length n - 2 into the unique labeled tree on n
/// vertices. Throws InvalidCodeError on entries outside 0..n-1.
Tree tree_from_prufer(std::span<const int> code);

/// Inverse of tree_from_prufer. Requires n >= 2.
std::vector<int> prufer_from_tree(const Tree& t);

/// n^(n-2), the number of labeled trees on n vertices.
std::uint64_t labeled_tree_count(int n);

/// The code at position `index` in lexicographic order (base-n digits,
/// most significant first).
std::vector<int> prufer_code_at(int n, std::uint64_t index);

/// Single-consumer stream over the labeled trees on n vertices in
/// lexicographic Prufer order, optionally restricted to the index range
/// [first, last) so that parallel consumers can partition the code space.
class LabeledTreeEnumerator {
public:
    /// Throws CapExceededError when n > cap, PreconditionError when n < 2.
    explicit LabeledTreeEnumerator(int n, int cap = kDefaultEnumerationCap);
    LabeledTreeEnumerator(int n, std::uint64_t first, std::uint64_t last,
                          int cap = kDefaultEnumerationCap);

    std::optional<Tree> next();

    /// Code and index of the tree most recently returned by next().
    const std::vector<int>& code() const noexcept { return current_; }
    std::uint64_t index() const noexcept { return index_ - 1; }

private:
    int n_;
    std::uint64_t index_;
    std::uint64_t last_;
    std::vector<int> pending_;
    std::vector<int> current_;
};

std::vector<Tree> enumerate_labeled_trees(int n, int cap = kDefaultEnumerationCap);

}  // namespace kemeny
