#include "kemeny/bounds.hpp"

#include "kemeny/edge_delta.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/kemeny.hpp"

#include <cmath>
#include <algorithm>
#include <functional>
#include <string>
#include <utility>

namespace kemeny {
namespace {

void check_nc(long n, long c) {
    if (n < 4 || c < 3 || c > n) {
        throw PreconditionError("need n >= 4 and 3 <= c <= n, got n = " + std::to_string(n) +
                                ", c = " + std::to_string(c));
    }
}

void check_construction(long n, long c) {
    if (c < 3 || c > n) {
        throw PreconditionError("need 3 <= c <= n, got n = " + std::to_string(n) +
                                ", c = " + std::to_string(c));
    }
}

int sign_of(const Rational& x) { return sgn(x); }

Bracket bisect(const std::function<Rational(const Rational&)>& f, Rational lo, Rational hi) {
    const int s_lo = sign_of(f(lo));
    const int s_hi = sign_of(f(hi));
    if (s_lo == 0) return {lo, lo};
    if (s_hi == 0) return {hi, hi};
    if (s_lo == s_hi) throw InternalConsistencyError("bisection: no sign change on the bracket");
    const Rational width = make_rational(1, 1L << kBisectionBits);
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        const int s = sign_of(f(mid));
        if (s == 0) return {mid, mid};
        if (s == s_lo) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return {lo, hi};
}

Rational q(long num, long den = 1) { return make_rational(num, den); }

Rational nn(long n) { return Rational(BigInt(n)); }

}  // namespace

Rational upper_bound_fixed_c(long n, long c) {
    check_nc(n, c);
    const BigInt N = n, C = c;
    const long half_lo = (c + 1) / 2;
    const long half_hi = c + 1 - half_lo;
    const Rational path_term = q(8, 3) * C * (N - C + 1) * (N - C) * (N - C - 1);
    const Rational row_min = -N * C * half_lo * half_hi + Rational(C * (C + 1) * ((2 * N + 1) * C + N - 1)) / 6;
    const Rational total = Rational((N + 1) * C * C * (C * C - 1)) / 6;
    const Rational bracket = path_term - 8 * (N - C) * row_min - 4 * total +
                             4 * N * (N - 1) * C * (C - 1) + 2 * (N - 1) * C * C;
    return bracket / Rational(4 * C * N * (N - 1));
}

Rational upper_bound_simplified(long n, long c) {
    check_nc(n, c);
    const BigInt N = n, C = c;
    const Rational value = Rational(4 * N * N * N - 5 * N * N + 4 * N) / 3 - C * C * C -
                           Rational((N * N - 10 * N) * C * C) / 3 - (2 * N * N + N) * C;
    return value / Rational(2 * N * (N - 1));
}

Rational lower_bound_fixed_c(long n, long c) {
    check_nc(n, c);
    const BigInt N = n, C = c;
    const long short_side = (n - c) / 2;
    const long long_side = n - c - short_side;
    const Rational bracket =
        -q(2, 3) * (N + 1) * C * C * (C * C - 1) -
        8 * (N - C) * (-N * C * C + Rational(C * (C + 1) * ((2 * N + 1) * C + N - 1)) / 6) -
        8 * BigInt(short_side) * long_side * ((N - 1) * (C - 1) * (C - 1) + C * (C - 1)) +
        4 * N * (N - 1) * C * (C - 1) + 2 * (N - 1) * C * C;
    return bracket / Rational(4 * C * N * (N - 1));
}

BoundReport bound_report(long n, long c) {
    return {n, c, upper_bound_fixed_c(n, c), upper_bound_simplified(n, c), lower_bound_fixed_c(n, c),
            (n - c) % 2 == 0};
}

LaurentPolynomial::LaurentPolynomial(int lowest, std::vector<Rational> coeffs)
    : lowest_(lowest), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    lowest_ = coeffs_.empty() ? 0 : lowest_ + static_cast<int>(lead);
}

Rational LaurentPolynomial::coefficient(int power) const {
    const int i = power - lowest_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational LaurentPolynomial::operator()(const Rational& c) const {
    if (coeffs_.empty()) return 0;
    if (c == 0) {
        if (lowest_ < 0) throw PreconditionError("Laurent polynomial evaluated at c = 0");
        return coefficient(0);
    }
    // Horner on the polynomial part, then scale by c^lowest.
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * c + *it;
    Rational scale = 1;
    const Rational base = lowest_ < 0 ? Rational(1 / c) : c;
    for (int k = 0; k < std::abs(lowest_); ++k) scale *= base;
    return acc * scale;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
    std::vector<Rational> d(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) d[i] = coeffs_[i] * (lowest_ + static_cast<int>(i));
    return {lowest_ - 1, std::move(d)};
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const { return {lowest_ + k, coeffs_}; }

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_;
}

PolynomialForms polynomial_forms(long n) {
    const Rational N = nn(n);
    const Rational N2 = N * N, N3 = N2 * N;
    PolynomialForms p;
    p.braess_cubic = LaurentPolynomial(0, {(4 * N3 - 5 * N2 + 4 * N) / 3, -(2 * N2 + N), -(N2 - 10 * N) / 3, -1});
    p.f_even = LaurentPolynomial(-1, {-3 * N3 + 3 * N2, 6 * N3 - 5 * N2 + 2 * N, -3 * N3 + 3 * N - 1,
                                      2 * N2 - 2 * N - 3, 1});
    p.f_odd = LaurentPolynomial(-1, {-3 * N3 + 3 * N2 + 3 * N - 3, 6 * N3 - 5 * N2 - 4 * N + 3,
                                     -3 * N3 + 6 * N - 1, 2 * N2 - 2 * N - 3, 1});
    p.g_even = LaurentPolynomial(0, {3 * N3 - 3 * N2, 0, -3 * N3 + 3 * N - 1, 4 * N2 - 4 * N - 6, 3});
    p.g_odd = LaurentPolynomial(0, {3 * N3 - 3 * N2 - 3 * N + 3, 0, -3 * N3 + 6 * N - 1, 4 * N2 - 4 * N - 6, 3});
    return p;
}

Rational braess_cubic(long n, const Rational& c) { return polynomial_forms(n).braess_cubic(c); }
Rational f_even(long n, const Rational& c) { return polynomial_forms(n).f_even(c); }
Rational f_odd(long n, const Rational& c) { return polynomial_forms(n).f_odd(c); }
Rational g_even(long n, const Rational& c) { return polynomial_forms(n).g_even(c); }
Rational g_odd(long n, const Rational& c) { return polynomial_forms(n).g_odd(c); }

MaxIncrease max_increase(long n) {
    if (n < 4) throw PreconditionError("max_increase: need n >= 4, got " + std::to_string(n));
    const BigInt N = n;
    Rational value = make_rational(4 * N * N * N - 32 * N * N + 85 * N - 81, 6 * N * (N - 1));
    Construction k = construct_t_shaped(n, 3);
    return {std::move(value),
            "P_{n-1} plus a pendant at a next-to-pendant vertex; edge between the two twin pendants",
            std::move(k.tree), k.edge};
}

namespace {

// The cubic is strictly decreasing on [0, inf) with a positive value at 0;
// check both so the positive root is certainly unique.
Bracket isolate_c0(long n) {
    const PolynomialForms p = polynomial_forms(n);
    const Rational a = p.braess_cubic.coefficient(2) * -1;  // (n^2 - 10n)/3
    const Rational b = p.braess_cubic.coefficient(1) * -1;  // 2n^2 + n
    const bool decreasing = b > 0 && (a >= 0 || a * a / 3 - b < 0);
    if (!decreasing || p.braess_cubic(0) <= 0) {
        throw InternalConsistencyError("cubic is not positive-then-decreasing for n = " + std::to_string(n));
    }
    Rational hi = 1;
    while (p.braess_cubic(hi) > 0) hi *= 2;
    return bisect([&](const Rational& c) { return p.braess_cubic(c); }, hi / 2 < 1 ? Rational(0) : Rational(hi / 2),
                  hi);
}

Bracket isolate_quartic_root(const LaurentPolynomial& g, const Rational& lower, const Rational& upper,
                             const char* name, long n) {
    // Positive leading coefficient plus signs (-, +, -) at -2, 0, 2 and
    // (-, +) at lower, upper place one root in each of four disjoint
    // intervals, so the one in (lower, upper) is the only one there.
    const bool pattern = g.coefficient(4) > 0 && g(-2) < 0 && g(0) > 0 && g(2) < 0 && lower > 0 &&
                         g(lower) < 0 && g(upper) > 0;
    if (!pattern) {
        throw InternalConsistencyError(std::string("sign pattern of ") + name + " fails at n = " +
                                       std::to_string(n));
    }
    return bisect([&](const Rational& c) { return g(c); }, lower, upper);
}

}  // namespace

BraessThreshold braess_threshold_c0(long n) {
    if (n < 4) throw PreconditionError("braess_threshold_c0: need n >= 4, got " + std::to_string(n));
    BraessThreshold t{isolate_c0(n), 0};
    const PolynomialForms p = polynomial_forms(n);
    long c = std::max<long>(3, floor_of(t.c0.lo).get_si());
    while (p.braess_cubic(nn(c)) >= 0) ++c;
    t.threshold = c;
    return t;
}

bool square_root_bracket_holds(long n) {
    const long root = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
    if (n < 100 || root * root != n) {
        throw PreconditionError("square_root_bracket_holds: need a perfect square >= 100, got " + std::to_string(n));
    }
    const PolynomialForms p = polynomial_forms(n);
    return p.braess_cubic(nn(2 * root - 3)) > 0 && p.braess_cubic(nn(2 * root)) < 0;
}

Rational c_star(long n) { return make_rational(3 * n, 4) + make_rational(21, 64); }

CriticalValues isolate_ce_co(long n) {
    if (n < 3) throw PreconditionError("isolate_ce_co: need n >= 3, got " + std::to_string(n));
    const PolynomialForms p = polynomial_forms(n);
    CriticalValues v;
    v.c_star = c_star(n);
    v.c_lower = v.c_star - make_rational(7, 4 * n);
    v.c0 = isolate_c0(n);
    v.ce = isolate_quartic_root(p.g_even, v.c_lower, v.c_star, "g_even", n);
    v.co = isolate_quartic_root(p.g_odd, v.c_lower, v.c_star, "g_odd", n);
    return v;
}

MinDecrease min_decrease_by_scan(long n) {
    check_nc(n, 3);
    MinDecrease best;
    best.by_scan = true;
    for (long c = 3; c <= n; ++c) {
        Rational v = lower_bound_fixed_c(n, c);
        if (c == 3 || v < best.value) {
            best.value = std::move(v);
            best.c = c;
        }
    }
    return best;
}

MinDecrease min_decrease(long n) {
    if (n < 4) throw PreconditionError("min_decrease: need n >= 4, got " + std::to_string(n));
    if (n < 23) return min_decrease_by_scan(n);
    const Rational star = c_star(n);
    const long lo = floor_of(star).get_si();
    const long hi = ceil_of(star).get_si();
    const long r = n % 8;
    const bool floor_even = r == 0 || r == 1 || r == 6 || r == 7;
    const std::pair<long, bool> picks[] = {
        {lo, floor_even}, {lo + 2, floor_even}, {hi, !floor_even}, {hi - 2, !floor_even}};
    const PolynomialForms p = polynomial_forms(n);
    const Rational scale = Rational(BigInt(6) * n * (n - 1));
    MinDecrease best;
    for (const auto& [c_raw, even] : picks) {
        Candidate cand;
        cand.c = std::clamp(c_raw, 3L, n);
        cand.even_form = even;
        cand.clamped = cand.c != c_raw;
        if (cand.clamped) {
            cand.value = lower_bound_fixed_c(n, cand.c);
        } else {
            cand.value = (even ? p.f_even : p.f_odd)(nn(cand.c)) / scale;
        }
        if (best.candidates.empty() || cand.value < best.value ||
            (cand.value == best.value && cand.c < best.c)) {
            best.value = cand.value;
            best.c = cand.c;
        }
        best.candidates.push_back(std::move(cand));
    }
    return best;
}

namespace {

Construction t_shaped_at(long n, long c, long attach) {
    check_construction(n, c);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (long j = 0; j + 1 < c; ++j) edges.push_back({static_cast<Vertex>(j), static_cast<Vertex>(j + 1)});
    long prev = attach;
    for (long v = c; v < n; ++v) {
        edges.push_back({static_cast<Vertex>(prev), static_cast<Vertex>(v)});
        prev = v;
    }
    return {Tree(static_cast<int>(n), edges), {0, static_cast<Vertex>(c - 1)}};
}

}  // namespace

Construction construct_t_shaped(long n, long c) { return t_shaped_at(n, c, (c + 1) / 2 - 1); }

Construction construct_t_shaped_upper(long n, long c) { return t_shaped_at(n, c, (c + 2) / 2 - 1); }

Construction construct_double_broom(long n, long c) {
    check_construction(n, c);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (long j = 0; j + 1 < c; ++j) edges.push_back({static_cast<Vertex>(j), static_cast<Vertex>(j + 1)});
    const long at_first = (n - c) / 2;
    for (long v = c; v < n; ++v) {
        const long hub = v - c < at_first ? 0 : c - 1;
        edges.push_back({static_cast<Vertex>(hub), static_cast<Vertex>(v)});
    }
    return {Tree(static_cast<int>(n), edges), {0, static_cast<Vertex>(c - 1)}};
}

AsymptoticsRow asymptotics_report(long n) {
    if (n < 23) throw PreconditionError("asymptotics_report: need n >= 23, got " + std::to_string(n));
    AsymptoticsRow row;
    row.n = n;
    row.c = floor_of(c_star(n)).get_si();
    const Construction k = construct_double_broom(n, row.c);
    row.k_tree = kemeny_tree_fast(k.tree);
    row.delta = delta_kemeny_closed(decompose(k.tree, k.edge.u, k.edge.v));
    row.k_graph = row.k_tree + row.delta;
    const Rational n2 = nn(n) * nn(n);
    row.k_tree_scaled = row.k_tree / n2;
    row.delta_scaled = row.delta / n2;
    row.k_graph_scaled = row.k_graph / n2;
    return row;
}

}  // namespace kemeny
