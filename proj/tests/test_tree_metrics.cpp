#include "doctest.h"

#include "support/oracles.hpp"

#include "kemeny/canonical.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/forests.hpp"
#include "kemeny/prufer.hpp"
#include "kemeny/tree_metrics.hpp"

#include <random>
#include <set>

using namespace kemeny;

TEST_CASE("distance to a path") {
    const Tree p5 = path_tree(5);
    CHECK(distance_to_path(p5, 2, 0, 4) == 0);
    CHECK(distance_to_path(p5, 4, 0, 0) == 4);
    CHECK(distance_to_path(path_tree(7), 0, 6, 6) == 6);
    CHECK(distance_to_path(star_tree(4), 1, 2, 3) == 1);
    CHECK(distance_to_path(star_tree(4), 0, 2, 3) == 0);
}

TEST_CASE("path distance sums") {
    CHECK(path_distance_sum(star_tree(5), 3, 3) == 0);
    for (int n = 2; n <= 9; ++n) CHECK(path_distance_sum(path_tree(n), 0, n - 1) == long(n) * (n - 1));
    CHECK(path_distance_sum(path_tree(3), 1, 0) == 2);
}

TEST_CASE("distance sums") {
    CHECK(sum_distances_from(path_tree(3), 0) == 3);
    CHECK(sum_distances_from(star_tree(6), 0) == 5);
    CHECK(sum_distances_from(star_tree(6), 2) == 1 + 2 * 4);
    CHECK(total_distance_sum(path_tree(3)) == 8);
    CHECK(total_distance_sum(path_tree(2)) == 2);
    CHECK(total_distance_sum(star_tree(4)) == 18);
    CHECK(total_distance_sum(Tree(Graph(1))) == 0);
}

TEST_CASE("branch scores") {
    CHECK(r_value(RootedTree(star_tree(7), 0)) == 0);
    CHECK(r_value(RootedTree(path_tree(3), 0)) == 4);
    CHECK(r_value(RootedTree(path_tree(3), 1)) == 0);
    CHECK(r_value(RootedTree(path_tree(4), 0)) == 16);
    CHECK(r_value_combinatorial(RootedTree(path_tree(4), 0)) == 16);
    CHECK(r_value_combinatorial(RootedTree(star_tree(7), 0)) == 0);
    CHECK(r_value_combinatorial(RootedTree(path_tree(3), 0)) == 4);
    CHECK(r_value_combinatorial(RootedTree(path_tree(3), 1)) == 0);
    CHECK(r_value(RootedTree(Tree(Graph(1)), 0)) == 0);
    CHECK(r_value(RootedTree(path_tree(2), 1)) == 0);
    CHECK_THROWS_AS(RootedTree(path_tree(3), 3), PreconditionError);
    for (long n = 3; n <= 30; ++n) {
        CHECK(r_value(RootedTree(path_tree(static_cast<int>(n)), 0)) == BigInt(2 * n * (n - 1) * (n - 2) / 3));
    }
}

TEST_CASE("property: distance-to-path parity and range on random triples") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 25;
        const Tree t = oracle::random_tree(n, rng);
        const auto d = oracle::floyd_distances(t.graph());
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int k = 0; k < 10; ++k) {
            const int r = pick(rng), a = pick(rng), b = pick(rng);
            const std::size_t ur = static_cast<std::size_t>(r), ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
            REQUIRE((d[ur][ua] + d[ur][ub] - d[ua][ub]) % 2 == 0);
            const int x = distance_to_path(t, r, a, b);
            REQUIRE(x >= 0);
            REQUIRE(x <= n - 1);
            REQUIRE(2 * x == d[ur][ua] + d[ur][ub] - d[ua][ub]);
            const long s = path_distance_sum(t, r, a);
            REQUIRE(s >= 0);
            REQUIRE(s <= long(n) * (n - 1));
            REQUIRE((s == 0) == (r == a));
        }
    }
}

TEST_CASE("property: the two branch-score routes agree on every rooted tree up to order 8") {
    for (int n = 1; n <= 8; ++n) {
        const std::vector<Tree> trees = n == 1 ? std::vector<Tree>{Tree(Graph(1))} : enumerate_labeled_trees(n);
        // One representative per isomorphism class keeps n = 8 fast; labels do not matter.
        std::set<std::string> seen;
        for (const Tree& t : trees) {
            if (!seen.insert(canonical_form(t)).second) continue;
            for (Vertex r = 0; r < n; ++r) {
                const RootedTree rt(t, r);
                REQUIRE(r_value(rt) == r_value_combinatorial(rt));
            }
        }
    }
}

TEST_CASE("property: branch-score bound with equality cases") {
    for (int n = 1; n <= 8; ++n) {
        const std::vector<Tree> trees = n == 1 ? std::vector<Tree>{Tree(Graph(1))} : enumerate_labeled_trees(n);
        const BigInt top = BigInt(2L * n * (n - 1) * (n - 2)) / 3;
        const Vertex end_mark[1] = {0};
        const std::string path_from_end = rooted_encoding(path_tree(n), 0, end_mark);
        std::set<std::string> seen;
        for (const Tree& t : trees) {
            for (Vertex r = 0; r < n; ++r) {
                const Vertex mark[1] = {r};
                const std::string rooted = rooted_encoding(t, r, mark);
                if (!seen.insert(rooted).second) continue;
                const BigInt value = r_value(RootedTree(t, r));
                REQUIRE(value >= 0);
                REQUIRE(value <= top);
                const bool is_path_from_end = rooted == path_from_end;
                const bool is_centered_star = t.degree(r) == n - 1;
                CAPTURE(n);
                CAPTURE(rooted);
                REQUIRE((value == top) == (is_path_from_end || n <= 2));
                REQUIRE((value == 0) == is_centered_star);
            }
        }
    }
}

TEST_CASE("branch scan matches per-branch recomputation") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 30;
        const Tree t = oracle::random_tree(n, rng);
        // Use the path between two random distinct vertices as the root chain.
        std::uniform_int_distribution<int> pick(0, n - 1);
        const int a = pick(rng);
        int b = pick(rng);
        if (b == a) b = (a + 1) % n;
        const auto dist = oracle::floyd_distances(t.graph());
        std::vector<Vertex> roots{a};
        while (roots.back() != b) {
            for (Vertex w : t.neighbors(roots.back())) {
                if (dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(b)] + 1 ==
                    dist[static_cast<std::size_t>(roots.back())][static_cast<std::size_t>(b)]) {
                    roots.push_back(w);
                    break;
                }
            }
        }
        const BranchScan scan = scan_branches(t, roots);
        long total = 0;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            std::vector<Vertex> members;
            for (Vertex v = 0; v < n; ++v)
                if (scan.branch_of[static_cast<std::size_t>(v)] == static_cast<int>(j)) members.push_back(v);
            REQUIRE(static_cast<long>(members.size()) == scan.sizes[j]);
            total += scan.sizes[j];
            // Rebuild the branch as a standalone tree and rescore it.
            std::vector<int> local(static_cast<std::size_t>(n), -1);
            for (std::size_t i = 0; i < members.size(); ++i) local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
            std::vector<Edge> edges;
            for (const Edge& e : t.edges()) {
                const int lu = local[static_cast<std::size_t>(e.u)], lv = local[static_cast<std::size_t>(e.v)];
                if (lu >= 0 && lv >= 0) edges.push_back({lu, lv});
            }
            const Tree branch(static_cast<int>(members.size()), edges);
            REQUIRE(scan.scores[j] == r_value_combinatorial(RootedTree(branch, local[static_cast<std::size_t>(roots[j])])));
        }
        REQUIRE(total == n);
    }
}
