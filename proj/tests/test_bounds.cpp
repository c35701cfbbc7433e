#include "doctest.h"

#include "kemeny/bounds.hpp"
#include "kemeny/canonical.hpp"
#include "kemeny/edge_delta.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/kemeny.hpp"

#include <algorithm>

using namespace kemeny;

namespace {

Rational q(long p, long r = 1) { return make_rational(p, r); }

Rational poly(std::initializer_list<long> coeffs_high_to_low, const Rational& x) {
    Rational acc = 0;
    for (long a : coeffs_high_to_low) acc = acc * x + a;
    return acc;
}

// Independent transcription of the cubic, kept separate from the library.
Rational cubic_reference(long n, const Rational& c) {
    return -c * c * c - make_rational(n * n - 10 * n, 3) * c * c - Rational(2 * n * n + n) * c +
           make_rational(4 * n * n * n - 5 * n * n + 4 * n, 3);
}

}  // namespace

TEST_CASE("fixed-cycle bounds: examples") {
    CHECK(upper_bound_fixed_c(4, 3) == q(1, 24));
    CHECK(upper_bound_simplified(4, 3) == q(1, 24));
    CHECK(upper_bound_simplified(8, 3) == q(599, 336));
    CHECK(upper_bound_fixed_c(8, 3) == q(599, 336));
    CHECK(lower_bound_fixed_c(5, 3) == q(-47, 30));
    CHECK(lower_bound_fixed_c(4, 4) == q(-2, 3));
    CHECK(upper_bound_fixed_c(6, 4) < upper_bound_simplified(6, 4));
    CHECK_THROWS_AS(upper_bound_fixed_c(3, 3), PreconditionError);
    CHECK_THROWS_AS(upper_bound_fixed_c(5, 2), PreconditionError);
    CHECK_THROWS_AS(lower_bound_fixed_c(5, 6), PreconditionError);
    CHECK_THROWS_AS(upper_bound_simplified(5, 6), PreconditionError);

    const BoundReport r = bound_report(5, 3);
    CHECK(r.upper_exact == upper_bound_fixed_c(5, 3));
    CHECK(r.lower_exact == q(-47, 30));
    CHECK(r.n_minus_c_even);
    CHECK_FALSE(bound_report(6, 3).n_minus_c_even);
}

TEST_CASE("property: exact versus simplified upper bound, and lower bound versus f_e/f_o, up to n = 60") {
    for (long n = 4; n <= 60; ++n) {
        for (long c = 3; c <= n; ++c) {
            const Rational exact = upper_bound_fixed_c(n, c);
            const Rational simple = upper_bound_simplified(n, c);
            // The floor/ceil term carries a factor n - c, so c = n also gives equality.
            if (c % 2 == 1 || c == n) {
                REQUIRE(exact == simple);
            } else {
                REQUIRE(exact < simple);
            }
            // The simplified bound times 2n(n-1) is the cubic.
            REQUIRE(simple * 2 * n * (n - 1) == cubic_reference(n, Rational(c)));
            const Rational f = (n - c) % 2 == 0 ? f_even(n, Rational(c)) : f_odd(n, Rational(c));
            REQUIRE(lower_bound_fixed_c(n, c) == f / (6 * n * (n - 1)));
            REQUIRE(lower_bound_fixed_c(n, c) <= exact);
        }
    }
}

TEST_CASE("property: simplified upper bound strictly decreases in c") {
    for (long n = 4; n <= 200; ++n) {
        for (long c = 3; c < n; ++c) REQUIRE(upper_bound_simplified(n, c + 1) < upper_bound_simplified(n, c));
    }
}

TEST_CASE("polynomial forms") {
    for (long n = 3; n <= 40; ++n) {
        const PolynomialForms p = polynomial_forms(n);
        // Coefficients transcribed independently.
        CHECK(p.f_even == LaurentPolynomial(-1, {Rational(-3 * n * n * n + 3 * n * n), Rational(6 * n * n * n - 5 * n * n + 2 * n),
                                                 Rational(-3 * n * n * n + 3 * n - 1), Rational(2 * n * n - 2 * n - 3), Rational(1)}));
        CHECK(p.f_odd == LaurentPolynomial(-1, {Rational(-3 * n * n * n + 3 * n * n + 3 * n - 3), Rational(6 * n * n * n - 5 * n * n - 4 * n + 3),
                                                Rational(-3 * n * n * n + 6 * n - 1), Rational(2 * n * n - 2 * n - 3), Rational(1)}));
        CHECK(p.g_even == LaurentPolynomial(0, {Rational(3 * n * n * n - 3 * n * n), Rational(0), Rational(-3 * n * n * n + 3 * n - 1),
                                                Rational(4 * n * n - 4 * n - 6), Rational(3)}));
        CHECK(p.g_odd == LaurentPolynomial(0, {Rational(3 * n * n * n - 3 * n * n - 3 * n + 3), Rational(0), Rational(-3 * n * n * n + 6 * n - 1),
                                               Rational(4 * n * n - 4 * n - 6), Rational(3)}));
        // g = c^2 f' as polynomials, and at sample points.
        CHECK(p.g_even == p.f_even.derivative().shifted(2));
        CHECK(p.g_odd == p.f_odd.derivative().shifted(2));
        for (const Rational& c : {q(1, 3), q(7, 2), q(-5, 4), q(11)}) {
            CHECK(g_even(n, c) == c * c * p.f_even.derivative()(c));
            CHECK(g_odd(n, c) == c * c * p.f_odd.derivative()(c));
            CHECK(braess_cubic(n, c) == cubic_reference(n, c));
        }
        // f_o - f_e collapses to three terms.
        const Rational c = q(13, 5);
        CHECK(f_odd(n, c) - f_even(n, c) == Rational(3 * n) * c - (6 * n - 3) + Rational(3 * n - 3) / c);
    }
    CHECK_THROWS_AS(f_even(10, Rational(0)), PreconditionError);
    CHECK_THROWS_AS(f_odd(10, Rational(0)), PreconditionError);
    CHECK(g_even(10, Rational(0)) == 2700);
}

TEST_CASE("Laurent polynomial basics") {
    const LaurentPolynomial p(-1, {Rational(2), Rational(0), Rational(3), Rational(0), Rational(0)});
    CHECK(p.lowest_power() == -1);
    CHECK(p.highest_power() == 1);
    CHECK(p.coefficient(1) == 3);
    CHECK(p.coefficient(5) == 0);
    CHECK(p(Rational(2)) == 7);
    CHECK_THROWS_AS(p(Rational(0)), PreconditionError);
    CHECK(p.derivative() == LaurentPolynomial(-2, {Rational(-2), Rational(0), Rational(3)}));
    CHECK(p.shifted(1) == LaurentPolynomial(0, {Rational(2), Rational(0), Rational(3)}));
}

TEST_CASE("sign evaluations at -2, 0, 2 match closed forms for n in 3..200") {
    for (long n = 3; n <= 200; ++n) {
        const Rational m2(-2), zero(0), two(2), N(n);
        REQUIRE(g_even(n, m2) == poly({-9, -35, 44, 92}, N));
        REQUIRE(g_even(n, zero) == poly({3, -3, 0, 0}, N));
        REQUIRE(g_even(n, two) == poly({-9, 29, -20, -4}, N));
        REQUIRE(g_odd(n, m2) == poly({-9, -35, 53, 95}, N));
        REQUIRE(g_odd(n, zero) == poly({3, -3, -3, 3}, N));
        REQUIRE(g_odd(n, two) == poly({-9, 29, -11, -1}, N));
        REQUIRE(g_even(n, m2) < 0);
        REQUIRE(g_even(n, zero) > 0);
        REQUIRE(g_even(n, two) < 0);
        REQUIRE(g_odd(n, m2) < 0);
        REQUIRE(g_odd(n, zero) > 0);
        REQUIRE(g_odd(n, two) < 0);
    }
}

TEST_CASE("quartic values at the bracket endpoints match closed forms") {
    for (long n = 3; n <= 200; ++n) {
        const Rational N(n);
        const Rational cs = c_star(n);
        const Rational lo = cs - q(7, 4 * n);
        CHECK(cs == q(3 * n, 4) + q(21, 64));
        const Rational ge_hi = q(4605, 2048) * N * N * N - q(337233, 65536) * N * N - q(379071, 262144) * N - q(4779117, 16777216);
        const Rational go_hi = q(8061, 2048) * N * N * N - q(240465, 65536) * N * N - q(1080831, 262144) * N + q(45552531, 16777216);
        const Rational n4 = N * N * N * N * 16777216;
        const Rational ge_lo = poly({-28336128, -152391936, 389562432, 454266771, -582546496, -704847360, 185450496, 472055808}, N) / n4;
        const Rational go_lo = poly({-24576, -127619328, 212529216, 446795667, -428405824, -704847360, 185450496, 472055808}, N) / n4;
        REQUIRE(g_even(n, cs) == ge_hi);
        REQUIRE(g_odd(n, cs) == go_hi);
        REQUIRE(g_even(n, lo) == ge_lo);
        REQUIRE(g_odd(n, lo) == go_lo);
    }
}

TEST_CASE("critical value brackets for n in 3..1000") {
    for (long n = 3; n <= 1000; ++n) {
        const CriticalValues cv = isolate_ce_co(n);
        CAPTURE(n);
        REQUIRE(cv.c_star == c_star(n));
        REQUIRE_FALSE(is_integer(cv.c_star));
        REQUIRE(cv.c_lower == cv.c_star - q(7, 4 * n));
        // The left endpoint exceeds 2 from n = 4 on; at n = 3 it is 383/192.
        if (n >= 4) REQUIRE(cv.c_lower > 2);
        for (const Bracket* b : {&cv.ce, &cv.co}) {
            REQUIRE(cv.c_lower <= b->lo);
            REQUIRE(b->lo <= b->hi);
            REQUIRE(b->hi <= cv.c_star);
            REQUIRE(b->hi - b->lo <= q(1, 1 << kBisectionBits));
        }
        REQUIRE(g_even(n, cv.ce.lo) <= 0);
        REQUIRE(g_even(n, cv.ce.hi) >= 0);
        REQUIRE(g_odd(n, cv.co.lo) <= 0);
        REQUIRE(g_odd(n, cv.co.hi) >= 0);
        if (n >= 23) {
            const BigInt fl = floor_of(cv.c_star);
            REQUIRE(floor_of(cv.ce.lo) == fl);
            REQUIRE(floor_of(cv.co.lo) == fl);
            REQUIRE(ceil_of(cv.ce.hi) == ceil_of(cv.c_star));
            REQUIRE(ceil_of(cv.co.hi) == ceil_of(cv.c_star));
            const long k = n / 4;
            const long expected_floor[4] = {3 * k, 3 * k + 1, 3 * k + 1, 3 * k + 2};
            REQUIRE(fl == expected_floor[n % 4]);
            const long r = n % 8;
            const bool even_gap = r == 0 || r == 1 || r == 6 || r == 7;
            REQUIRE(((n - fl) % 2 == 0) == even_gap);
        }
    }
    CHECK(isolate_ce_co(3).c_lower == q(383, 192));
    CHECK(c_star(23) == q(1125, 64));
    CHECK_THROWS_AS(isolate_ce_co(2), PreconditionError);
}

TEST_CASE("largest increase") {
    CHECK(max_increase(4).value == q(1, 24));
    CHECK(max_increase(5).value == q(11, 30));
    CHECK(max_increase(8).value == q(599, 336));
    CHECK(canonical_form(max_increase(4).tree) == canonical_form(star_tree(4)));
    CHECK_THROWS_AS(max_increase(3), PreconditionError);
    for (long n = 4; n <= 60; ++n) {
        const MaxIncrease m = max_increase(n);
        REQUIRE(m.value == make_rational(4 * n * n * n - 32 * n * n + 85 * n - 81, 6 * n * (n - 1)));
        REQUIRE(m.value == upper_bound_fixed_c(n, 3));
        REQUIRE(delta_kemeny_closed(decompose(m.tree, m.edge.u, m.edge.v)) == m.value);
        REQUIRE(m.tree.order() == n);
        for (long c = 4; c <= n; ++c) REQUIRE(upper_bound_fixed_c(n, c) < m.value);
    }
}

TEST_CASE("threshold cycle length") {
    const BraessThreshold t100 = braess_threshold_c0(100);
    CHECK(t100.c0.lo >= 17);
    CHECK(t100.c0.hi <= 18);
    CHECK(t100.threshold == 18);
    CHECK(braess_cubic(100, Rational(17)) > 0);
    CHECK(braess_cubic(100, Rational(18)) < 0);
    for (long n = 4; n <= 300; ++n) {
        const BraessThreshold t = braess_threshold_c0(n);
        CAPTURE(n);
        REQUIRE(braess_cubic(n, t.c0.lo) >= 0);
        REQUIRE(braess_cubic(n, t.c0.hi) <= 0);
        REQUIRE(t.c0.hi - t.c0.lo <= q(1, 1 << kBisectionBits));
        REQUIRE(t.threshold >= 3);
        REQUIRE(braess_cubic(n, Rational(t.threshold)) < 0);
        if (t.threshold > 3) REQUIRE(braess_cubic(n, Rational(t.threshold - 1)) >= 0);
        // Every c at or past the threshold, up to n, gives a negative upper bound.
        for (long c = t.threshold; c <= n; ++c) REQUIRE(upper_bound_simplified(n, c) < 0);
        // Beyond c0 the cubic stays negative: sample a few points past hi.
        for (int k = 1; k <= 4; ++k) REQUIRE(braess_cubic(n, t.c0.hi + k * k) < 0);
    }
    const BraessThreshold t10 = braess_threshold_c0(10);
    CHECK(braess_cubic(10, t10.c0.lo) > 0);
    CHECK(braess_cubic(10, t10.c0.hi) < 0);
    CHECK_THROWS_AS(braess_threshold_c0(3), PreconditionError);
}

TEST_CASE("square-root brackets on perfect squares") {
    CHECK(braess_cubic(100, Rational(17)) == 103187);
    CHECK(braess_cubic(100, Rational(20)) == -293200);
    for (long n : {100L, 400L, 900L, 2500L, 10000L}) CHECK(square_root_bracket_holds(n));
    CHECK_THROWS_AS(square_root_bracket_holds(101), PreconditionError);
    CHECK_THROWS_AS(square_root_bracket_holds(81), PreconditionError);
}

TEST_CASE("largest decrease") {
    const MinDecrease m4 = min_decrease(4);
    CHECK(m4.value == q(-2, 3));
    CHECK(m4.c == 4);
    CHECK(m4.by_scan);
    const MinDecrease m23 = min_decrease(23);
    CHECK_FALSE(m23.by_scan);
    REQUIRE(m23.candidates.size() == 4);
    Rational best = m23.candidates[0].value;
    for (const Candidate& c : m23.candidates) {
        CHECK_FALSE(c.clamped);
        CHECK(c.value == (c.even_form ? f_even(23, Rational(c.c)) : f_odd(23, Rational(c.c))) / (6 * 23 * 22));
        if (c.value < best) best = c.value;
    }
    CHECK(m23.value == best);
    std::vector<std::pair<long, bool>> got;
    for (const Candidate& c : m23.candidates) got.emplace_back(c.c, c.even_form);
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::pair<long, bool>>{{16, false}, {17, true}, {18, false}, {19, true}});
    CHECK_THROWS_AS(min_decrease(3), PreconditionError);
}

TEST_CASE("property: four-candidate minimum equals the full scan for n in 23..500") {
    for (long n = 23; n <= 500; ++n) {
        const MinDecrease fast = min_decrease(n);
        const MinDecrease scan = min_decrease_by_scan(n);
        CAPTURE(n);
        REQUIRE(fast.value == scan.value);
        REQUIRE(fast.c == scan.c);
        REQUIRE(fast.value == lower_bound_fixed_c(n, fast.c));
        for (const Candidate& c : fast.candidates) {
            REQUIRE_FALSE(c.clamped);
            // Each candidate's form matches the parity of n - c.
            REQUIRE(c.even_form == ((n - c.c) % 2 == 0));
        }
    }
}

TEST_CASE("property: constructions attain their bounds for 3 <= c <= n <= 40") {
    for (long n = 4; n <= 40; ++n) {
        for (long c = 3; c <= n; ++c) {
            const Construction t = construct_t_shaped(n, c);
            const Construction b = construct_double_broom(n, c);
            REQUIRE(t.tree.order() == n);
            REQUIRE(b.tree.order() == n);
            const CycleDecomposition dt = decompose(t.tree, t.edge.u, t.edge.v);
            const CycleDecomposition db = decompose(b.tree, b.edge.u, b.edge.v);
            REQUIRE(dt.cycle_length() == c);
            REQUIRE(db.cycle_length() == c);
            REQUIRE(delta_kemeny_closed(dt) == upper_bound_fixed_c(n, c));
            REQUIRE(delta_kemeny_closed(db) == lower_bound_fixed_c(n, c));
            REQUIRE(db.sizes.front() == 1 + (n - c) / 2);
            REQUIRE(db.sizes.back() == 1 + (n - c + 1) / 2);
            if (c % 2 == 0) {
                const Construction u = construct_t_shaped_upper(n, c);
                const Vertex mt[2] = {t.edge.u, t.edge.v};
                const Vertex mu[2] = {u.edge.u, u.edge.v};
                REQUIRE(canonical_form(t.tree, mt) == canonical_form(u.tree, mu));
            }
        }
    }
    CHECK(canonical_form(construct_t_shaped(4, 3).tree) == canonical_form(star_tree(4)));
    const Construction p5 = construct_double_broom(5, 3);
    CHECK(canonical_form(p5.tree) == canonical_form(path_tree(5)));
    CHECK(delta_kemeny_direct(p5.tree, p5.edge.u, p5.edge.v) == q(-47, 30));
    const Construction bare = construct_double_broom(7, 7);
    CHECK(canonical_form(bare.tree) == canonical_form(path_tree(7)));
    CHECK(bare.edge.u == 0);
    CHECK(bare.edge.v == 6);
    CHECK_THROWS_AS(construct_t_shaped(5, 2), PreconditionError);
    CHECK_THROWS_AS(construct_double_broom(5, 6), PreconditionError);
}

TEST_CASE("asymptotic report") {
    const AsymptoticsRow r = asymptotics_report(1000);
    CHECK(r.c == floor_of(c_star(1000)));
    const Construction b = construct_double_broom(1000, r.c);
    CHECK(r.k_tree == kemeny_tree_fast(b.tree));
    CHECK(r.delta == delta_kemeny_closed(decompose(b.tree, b.edge.u, b.edge.v)));
    CHECK(r.k_graph == r.k_tree + r.delta);
    CHECK(r.k_tree_scaled == r.k_tree / (1000 * 1000));
    CHECK(r.k_graph_scaled == r.k_graph / (1000 * 1000));
    CHECK(r.delta_scaled == r.delta / (1000 * 1000));
    CHECK(r.k_graph / r.k_tree < q(39, 100));
    // At this size the forest route is still affordable as an independent check.
    const AsymptoticsRow small = asymptotics_report(30);
    const Construction sb = construct_double_broom(30, small.c);
    CHECK(small.k_graph == kemeny_forest(add_edge(sb.tree.graph(), sb.edge.u, sb.edge.v)));

    Rational previous[3] = {Rational(1), Rational(1), Rational(1)};
    for (long n : {1000L, 10000L, 100000L}) {
        const AsymptoticsRow row = asymptotics_report(n);
        const Rational residual[3] = {abs(row.k_tree_scaled - q(39, 128)), abs(row.delta_scaled + q(3, 16)),
                                      abs(row.k_graph_scaled - q(15, 128))};
        for (int i = 0; i < 3; ++i) {
            CHECK(residual[i] < previous[i]);
            previous[i] = residual[i];
        }
    }
    CHECK_THROWS_AS(asymptotics_report(22), PreconditionError);
}
