#include "kemeny/canonical.hpp"

#include "kemeny/errors.hpp"

#include <algorithm>

namespace kemeny {
namespace {

struct RootedOrder {
    std::vector<Vertex> order;   // BFS order from the root
    std::vector<Vertex> parent;  // -1 at the root
};

RootedOrder bfs_order(const Tree& t, Vertex root) {
    const auto n = static_cast<std::size_t>(t.order());
    RootedOrder r{{}, std::vector<Vertex>(n, -1)};
    r.order.reserve(n);
    r.order.push_back(root);
    std::vector<char> seen(n, 0);
    seen[static_cast<std::size_t>(root)] = 1;
    for (std::size_t head = 0; head < r.order.size(); ++head) {
        const Vertex x = r.order[head];
        for (Vertex y : t.neighbors(x)) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                r.parent[static_cast<std::size_t>(y)] = x;
                r.order.push_back(y);
            }
        }
    }
    return r;
}

}  // namespace

std::vector<Vertex> tree_centroids(const Tree& t) {
    const int n = t.order();
    const RootedOrder r = bfs_order(t, 0);
    std::vector<int> size(static_cast<std::size_t>(n), 1);
    std::vector<int> heaviest(static_cast<std::size_t>(n), 0);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        const Vertex p = r.parent[static_cast<std::size_t>(*it)];
        if (p < 0) continue;
        size[static_cast<std::size_t>(p)] += size[static_cast<std::size_t>(*it)];
        heaviest[static_cast<std::size_t>(p)] =
            std::max(heaviest[static_cast<std::size_t>(p)], size[static_cast<std::size_t>(*it)]);
    }
    int best = n;
    std::vector<Vertex> centroids;
    for (Vertex v = 0; v < n; ++v) {
        const int worst = std::max(heaviest[static_cast<std::size_t>(v)],
                                   n - size[static_cast<std::size_t>(v)]);
        if (worst < best) {
            best = worst;
            centroids = {v};
        } else if (worst == best) {
            centroids.push_back(v);
        }
    }
    return centroids;
}

std::string rooted_encoding(const Tree& t, Vertex root, std::span<const Vertex> marked) {
    const auto n = static_cast<std::size_t>(t.order());
    if (root < 0 || static_cast<std::size_t>(root) >= n) {
        throw PreconditionError("rooted_encoding: root out of range");
    }
    std::vector<char> is_marked(n, 0);
    for (Vertex v : marked) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
            throw PreconditionError("rooted_encoding: marked vertex out of range");
        }
        is_marked[static_cast<std::size_t>(v)] = 1;
    }
    const RootedOrder r = bfs_order(t, root);
    std::vector<std::vector<std::string>> child_codes(n);
    std::string code;
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        auto& kids = child_codes[v];
        std::sort(kids.begin(), kids.end());
        code = "(";
        if (is_marked[v]) code += '*';
        for (const auto& k : kids) code += k;
        code += ')';
        kids.clear();
        kids.shrink_to_fit();
        const Vertex p = r.parent[v];
        if (p >= 0) child_codes[static_cast<std::size_t>(p)].push_back(code);
    }
    return code;
}

std::string canonical_form(const Tree& t) { return canonical_form(t, {}); }

std::string canonical_form(const Tree& t, std::span<const Vertex> marked) {
    std::string best;
    for (Vertex c : tree_centroids(t)) {
        std::string enc = rooted_encoding(t, c, marked);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

}  // namespace kemeny
