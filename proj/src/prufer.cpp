#include "kemeny/prufer.hpp"

#include "kemeny/errors.hpp"

#include <functional>
#include <queue>
#include <string>

namespace kemeny {

Tree tree_from_prufer(std::span<const int> code) {
    const int n = static_cast<int>(code.size()) + 2;
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : code) {
        if (x < 0 || x >= n) {
            throw InvalidCodeError("Prufer entry " + std::to_string(x) + " outside 0.." +
                                   std::to_string(n - 1));
        }
        ++degree[static_cast<std::size_t>(x)];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int x : code) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.push_back({leaf, x});
        if (--degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
    }
    const int a = leaves.top();
    leaves.pop();
    edges.push_back({a, leaves.top()});
    return Tree(n, edges);
}

std::vector<int> prufer_from_tree(const Tree& t) {
    const int n = t.order();
    if (n < 2) throw PreconditionError("Prufer codes need at least two vertices");
    std::vector<int> degree = degree_vector(t.graph());
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    }
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(n - 2));
    while (static_cast<int>(code.size()) < n - 2) {
        const int leaf = leaves.top();
        leaves.pop();
        removed[static_cast<std::size_t>(leaf)] = 1;
        for (Vertex nb : t.neighbors(leaf)) {
            if (removed[static_cast<std::size_t>(nb)]) continue;
            code.push_back(nb);
            if (--degree[static_cast<std::size_t>(nb)] == 1) leaves.push(nb);
            break;
        }
    }
    return code;
}

std::uint64_t labeled_tree_count(int n) {
    if (n < 1) throw PreconditionError("labeled_tree_count needs n >= 1");
    if (n <= 2) return 1;
    std::uint64_t count = 1;
    for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
    return count;
}

std::vector<int> prufer_code_at(int n, std::uint64_t index) {
    std::vector<int> code(static_cast<std::size_t>(n > 2 ? n - 2 : 0));
    for (auto it = code.rbegin(); it != code.rend(); ++it) {
        *it = static_cast<int>(index % static_cast<std::uint64_t>(n));
        index /= static_cast<std::uint64_t>(n);
    }
    return code;
}

LabeledTreeEnumerator::LabeledTreeEnumerator(int n, int cap)
    : LabeledTreeEnumerator(n, 0, n >= 2 && n <= cap ? labeled_tree_count(n) : 0, cap) {}

LabeledTreeEnumerator::LabeledTreeEnumerator(int n, std::uint64_t first, std::uint64_t last, int cap)
    : n_(n), index_(first), last_(last) {
    if (n < 2) throw PreconditionError("tree enumeration needs n >= 2");
    if (n > cap) {
        throw CapExceededError("refusing to enumerate labeled trees for n = " + std::to_string(n) +
                               " (cap is " + std::to_string(cap) + ", " + std::to_string(n) +
                               "^" + std::to_string(n - 2) + " trees)");
    }
    if (last_ > labeled_tree_count(n)) last_ = labeled_tree_count(n);
    if (index_ < last_) pending_ = prufer_code_at(n, index_);
}

std::optional<Tree> LabeledTreeEnumerator::next() {
    if (index_ >= last_) return std::nullopt;
    current_ = pending_;
    ++index_;
    // Odometer increment for the following code.
    for (auto it = pending_.rbegin(); it != pending_.rend(); ++it) {
        if (++*it < n_) break;
        *it = 0;
    }
    return tree_from_prufer(current_);
}

std::vector<Tree> enumerate_labeled_trees(int n, int cap) {
    LabeledTreeEnumerator it(n, cap);
    std::vector<Tree> out;
    out.reserve(static_cast<std::size_t>(labeled_tree_count(n)));
    while (auto t = it.next()) out.push_back(std::move(*t));
    return out;
}

}  // namespace kemeny
