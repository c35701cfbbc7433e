#pragma once

#include "kemeny/graph.hpp"
#include "kemeny/rational.hpp"

#include <string>
#include <vector>

namespace kemeny {

/// Right-hand sides of the three fixed-(n, c) bounds on the change in
/// Kemeny's constant from adding one edge that closes a c-cycle.
struct BoundReport {
    long n = 0;
    long c = 0;
    Rational upper_exact;       // floor/ceil form, tight
    Rational upper_simplified;  // polynomial form, equal to upper_exact iff c is odd or c = n
    Rational lower_exact;       // tight
    bool n_minus_c_even = false;
};

/// All of these require n >= 4 and 3 <= c <= n.
Rational upper_bound_fixed_c(long n, long c);
Rational upper_bound_simplified(long n, long c);
Rational lower_bound_fixed_c(long n, long c);
BoundReport bound_report(long n, long c);

/// A finite Laurent polynomial in c with rational coefficients.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    /// coeffs[i] multiplies c^(lowest + i).
    LaurentPolynomial(int lowest, std::vector<Rational> coeffs);

    int lowest_power() const noexcept { return lowest_; }
    int highest_power() const noexcept { return lowest_ + static_cast<int>(coeffs_.size()) - 1; }
    /// Zero for powers outside the stored range.
    Rational coefficient(int power) const;

    /// Throws PreconditionError at c = 0 when a negative power is present.
    Rational operator()(const Rational& c) const;
    LaurentPolynomial derivative() const;
    LaurentPolynomial shifted(int k) const;  // multiply by c^k

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

private:
    int lowest_ = 0;
    std::vector<Rational> coeffs_;
};

/// The polynomials in c (coefficients depending on n) that drive the
/// optimisation over cycle length.
struct PolynomialForms {
    LaurentPolynomial braess_cubic;  // sign of the simplified upper bound
    LaurentPolynomial f_even;        // 6n(n-1) * lower bound, n - c even
    LaurentPolynomial f_odd;         // 6n(n-1) * lower bound, n - c odd
    LaurentPolynomial g_even;        // c^2 f_even'
    LaurentPolynomial g_odd;         // c^2 f_odd'
};

PolynomialForms polynomial_forms(long n);

Rational braess_cubic(long n, const Rational& c);
/// Throw PreconditionError at c = 0.
Rational f_even(long n, const Rational& c);
Rational f_odd(long n, const Rational& c);
Rational g_even(long n, const Rational& c);
Rational g_odd(long n, const Rational& c);

struct MaxIncrease {
    Rational value;
    std::string description;
    Tree tree;
    Edge edge;
};

/// Largest increase over all trees on n vertices and all addable edges.
/// Requires n >= 4.
MaxIncrease max_increase(long n);

/// Open interval (lo, hi) holding exactly one root; lo == hi when the root
/// was hit exactly.
struct Bracket {
    Rational lo;
    Rational hi;
};

inline constexpr int kBisectionBits = 16;

struct BraessThreshold {
    Bracket c0;           // the cubic's unique positive root
    long threshold = 0;   // smallest integer c >= 3 with cubic(c) < 0
};

/// Requires n >= 4.
BraessThreshold braess_threshold_c0(long n);

/// For perfect squares n >= 100: cubic(2 sqrt(n) - 3) > 0 > cubic(2 sqrt(n)).
bool square_root_bracket_holds(long n);

struct CriticalValues {
    Rational c_star;     // 3n/4 + 21/64
    Rational c_lower;    // c_star - 7/(4n)
    Bracket c0;
    Bracket ce;          // root of g_even in (c_lower, c_star)
    Bracket co;          // root of g_odd in (c_lower, c_star)
};

/// Requires n >= 3. Verifies the sign pattern that makes the root of each
/// quartic in (c_lower, c_star) unique, then bisects. Throws
/// InternalConsistencyError if the pattern fails.
CriticalValues isolate_ce_co(long n);

Rational c_star(long n);

struct Candidate {
    long c = 0;
    bool even_form = false;  // f_even (true) or f_odd
    bool clamped = false;
    Rational value;          // already divided by 6n(n-1)
};

struct MinDecrease {
    Rational value;
    long c = 0;
    std::vector<Candidate> candidates;  // empty when found by scan
    bool by_scan = false;
};

/// Most negative change over all trees on n vertices. For n >= 23 uses the
/// four candidates near c_star; below that scans c in [3, n]. Ties resolve to
/// the smallest c. Requires n >= 4.
MinDecrease min_decrease(long n);

/// Scan of lower_bound_fixed_c over c in [3, n].
MinDecrease min_decrease_by_scan(long n);

struct Construction {
    Tree tree;
    Edge edge;  // (v_1, v_c)
};

/// Path v_1..v_c on vertices 0..c-1 with a path on the remaining n - c
/// vertices hanging off v_{floor((c+1)/2)}. Requires 3 <= c <= n.
Construction construct_t_shaped(long n, long c);
/// Same, hanging off v_{ceil((c+1)/2)}.
Construction construct_t_shaped_upper(long n, long c);

/// Path v_1..v_c on vertices 0..c-1 with floor((n-c)/2) pendants at v_1 and
/// the rest at v_c. Requires 3 <= c <= n.
Construction construct_double_broom(long n, long c);

struct AsymptoticsRow {
    long n = 0;
    long c = 0;
    Rational k_tree;
    Rational k_graph;
    Rational delta;
    Rational k_tree_scaled;   // divided by n^2
    Rational delta_scaled;
    Rational k_graph_scaled;
};

/// Double broom at c = floor(c_star), exact, O(n). Requires n >= 23.
AsymptoticsRow asymptotics_report(long n);

}  // namespace kemeny
