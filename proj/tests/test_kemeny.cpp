#include "doctest.h"

#include "support/oracles.hpp"

#include "kemeny/errors.hpp"
#include "kemeny/kemeny.hpp"
#include "kemeny/prufer.hpp"

#include <chrono>
#include <random>

using namespace kemeny;

namespace {

Rational q(long p, long r = 1) { return make_rational(p, r); }

Graph star_plus_leaf_edge() { return add_edge(star_tree(4).graph(), 1, 2); }

}  // namespace

TEST_CASE("stationary distribution examples") {
    CHECK(stationary_distribution(cycle_graph(4)) == StationaryDistribution(4, q(1, 4)));
    CHECK(stationary_distribution(path_tree(3).graph()) == StationaryDistribution{q(1, 4), q(1, 2), q(1, 4)});
    CHECK(stationary_distribution(star_tree(4).graph()) == StationaryDistribution{q(1, 2), q(1, 6), q(1, 6), q(1, 6)});
    CHECK(stationary_distribution(Graph(1)) == StationaryDistribution{q(1)});
    CHECK_THROWS_AS(stationary_distribution(Graph(3)), DisconnectedGraphError);
}

TEST_CASE("mean first passage examples") {
    const MfptMatrix p3 = mfpt_matrix(path_tree(3).graph());
    CHECK(p3(0, 2) == 4);
    CHECK(p3(1, 2) == 3);
    CHECK(p3(1, 1) == 2);
    const MfptMatrix c3 = mfpt_matrix(cycle_graph(3));
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) CHECK(c3(j, k) == (j == k ? 3 : 2));
    const MfptMatrix p2 = mfpt_matrix(path_tree(2).graph());
    CHECK(p2(0, 1) == 1);
    CHECK_THROWS_AS(mfpt_matrix(Graph(2)), DisconnectedGraphError);
}

TEST_CASE("Kemeny's constant examples across engines") {
    CHECK(kemeny_mfpt(path_tree(2).graph()) == q(1, 2));
    CHECK(kemeny_mfpt(cycle_graph(3)) == q(4, 3));
    CHECK(kemeny_mfpt(star_tree(4).graph()) == q(5, 2));
    CHECK(kemeny_forest(complete_bipartite_graph(2, 2)) == q(5, 2));
    CHECK(kemeny_forest(star_plus_leaf_edge()) == q(61, 24));
    CHECK(kemeny_tree_fast(path_tree(3)) == q(3, 2));
    CHECK(kemeny_tree_fast(path_tree(5)) == q(11, 2));
    CHECK(kemeny_tree_fast(star_tree(4)) == q(5, 2));
    CHECK(degree_weighted_distance_sum(path_tree(3)) == 12);
    CHECK(degree_weighted_distance_sum(path_tree(5)) == 88);
    CHECK(kemeny_forest(add_edge(complete_bipartite_graph(2, 2), 0, 1)) == q(47, 20));
}

TEST_CASE("complete bipartite K_{8,8}: 29/2, unchanged by an added edge") {
    const Graph k88 = complete_bipartite_graph(8, 8);
    const auto start = std::chrono::steady_clock::now();
    CHECK(kemeny_mfpt(k88) == q(29, 2));
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
    CHECK(kemeny_forest(k88) == q(29, 2));
    CHECK(kemeny_mfpt(add_edge(k88, 0, 1)) == q(29, 2));
    CHECK(kemeny_forest(add_edge(k88, 8, 15)) == q(29, 2));
}

TEST_CASE("the one-vertex graph has constant 0") {
    CHECK(kemeny_mfpt(Graph(1)) == 0);
    CHECK(kemeny_forest(Graph(1)) == 0);
    CHECK(kemeny_tree_fast(Tree(Graph(1))) == 0);
}

TEST_CASE("disconnected graphs are rejected") {
    const std::vector<Edge> e{{0, 1}, {2, 3}};
    const Graph g(4, e);
    CHECK_THROWS_AS(kemeny_mfpt(g), DisconnectedGraphError);
    CHECK_THROWS_AS(kemeny_forest(g), DisconnectedGraphError);
}

TEST_CASE("property: normalization and per-start-state independence") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_connected_graph(2 + trial % 9, 0.3, rng);
        const StationaryDistribution w = stationary_distribution(g);
        Rational total = 0;
        for (const Rational& x : w) total += x;
        REQUIRE(total == 1);
        const MfptMatrix m = mfpt_matrix(g);
        for (int k = 0; k < g.order(); ++k) {
            REQUIRE(w[static_cast<std::size_t>(k)] * m(k, k) == 1);
            for (int j = 0; j < g.order(); ++j)
                if (j != k) REQUIRE(m(j, k) > 0);
        }
        const std::vector<Rational> per_state = kemeny_per_start_state(g);
        for (const Rational& x : per_state) REQUIRE(x == per_state.front());
    }
}

TEST_CASE("oracle: forest and MFPT routes agree with the fundamental matrix on the full corpus") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : oracle::connected_graphs_up_to_iso(n)) {
            const Rational k = kemeny_mfpt(g);
            REQUIRE(kemeny_forest(g) == k);
            REQUIRE(oracle::kemeny_fundamental(g) == k);
        }
    }
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_connected_graph(7, 0.35, rng);
        const Rational k = kemeny_mfpt(g);
        REQUIRE(kemeny_forest(g) == k);
        REQUIRE(oracle::kemeny_fundamental(g) == k);
    }
}

TEST_CASE("property: all three routes agree on every labeled tree up to order 7") {
    for (int n = 2; n <= 7; ++n) {
        for (const Tree& t : enumerate_labeled_trees(n)) {
            const Rational fast = kemeny_tree_fast(t);
            REQUIRE(kemeny_forest(t.graph()) == fast);
            if (n <= 6) REQUIRE(kemeny_mfpt(t.graph()) == fast);
        }
    }
}

TEST_CASE("tree fast path scales to long paths") {
    // d^T D d for P_n by the edge-cut identity, summed independently.
    for (int n : {100, 1000, 20000}) {
        BigInt sum = 0;
        for (long s = 1; s < n; ++s) sum += 2 * BigInt(2 * s - 1) * BigInt(2 * (n - 1) - (2 * s - 1));
        CHECK(degree_weighted_distance_sum(path_tree(n)) == sum);
    }
}
