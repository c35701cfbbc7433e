#include "kemeny/matrix.hpp"

#include "kemeny/errors.hpp"

#include <cmath>
#include <utility>

namespace kemeny {
namespace {

// Every minor of a matrix is bounded by the product of its row norms, and
// every Bareiss intermediate is a minor, so products of two intermediates
// stay below 2 * H^2. Require H^2 < 2^61 to keep that under 2^62.
bool hadamard_fits_int64(const std::vector<std::int64_t>& rows, int n_rows, int n_cols) {
    long double log2_h2 = 0;
    for (int i = 0; i < n_rows; ++i) {
        long double norm2 = 0;
        for (int j = 0; j < n_cols; ++j) {
            const auto v = static_cast<long double>(rows[static_cast<std::size_t>(i * n_cols + j)]);
            norm2 += v * v;
        }
        if (norm2 > 1) log2_h2 += std::log2(norm2);
    }
    return log2_h2 < 61.0L - 1e-6L;
}

inline std::int64_t exact_div(std::int64_t a, std::int64_t b) { return a / b; }
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

template <class T>
T bareiss(std::vector<T> a, int n) {
    if (n == 0) return T(1);
    auto at = [&](int i, int j) -> T& { return a[static_cast<std::size_t>(i * n + j)]; };
    T prev(1);
    bool negate = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int r = k + 1;
            while (r < n && at(r, k) == 0) ++r;
            if (r == n) return T(0);
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
            negate = !negate;
        }
        const T pivot = at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const T lead = at(i, k);
            for (int j = k + 1; j < n; ++j) {
                at(i, j) = exact_div(T(at(i, j) * pivot - lead * at(k, j)), prev);
            }
        }
        prev = pivot;
    }
    T det = at(n - 1, n - 1);
    return negate ? T(-det) : det;
}

// Fraction-free Gauss-Jordan on an n x (n+1) augmented matrix. On return the
// diagonal holds det(A) (of the row-permuted system) and the last column holds
// det(A) * x.
template <class T>
bool gauss_jordan(std::vector<T>& a, int n) {
    const int w = n + 1;
    auto at = [&](int i, int j) -> T& { return a[static_cast<std::size_t>(i * w + j)]; };
    T prev(1);
    for (int k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            int r = k + 1;
            while (r < n && at(r, k) == 0) ++r;
            if (r == n) return false;
            for (int j = 0; j < w; ++j) std::swap(at(k, j), at(r, j));
        }
        const T pivot = at(k, k);
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            const T lead = at(i, k);
            for (int j = 0; j < w; ++j) {
                if (j == k) continue;
                at(i, j) = exact_div(T(at(i, j) * pivot - lead * at(k, j)), prev);
            }
            at(i, k) = 0;
        }
        prev = pivot;
    }
    return true;
}

}  // namespace

bool bareiss_determinant_small(const IntMatrix& m, std::int64_t& out) {
    const int n = m.size();
    if (!hadamard_fits_int64(m.data(), n, n)) return false;
    out = bareiss<std::int64_t>(m.data(), n);
    return true;
}

BigInt bareiss_determinant(const IntMatrix& m) {
    std::int64_t small = 0;
    if (bareiss_determinant_small(m, small)) return to_bigint(small);
    std::vector<BigInt> big(m.data().begin(), m.data().end());
    return bareiss<BigInt>(std::move(big), m.size());
}

std::vector<Rational> solve_exact(const IntMatrix& a, const std::vector<std::int64_t>& b) {
    const int n = a.size();
    if (static_cast<int>(b.size()) != n) throw PreconditionError("solve_exact: size mismatch");
    std::vector<std::int64_t> aug(static_cast<std::size_t>(n * (n + 1)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[static_cast<std::size_t>(i * (n + 1) + j)] = a(i, j);
        aug[static_cast<std::size_t>(i * (n + 1) + n)] = b[static_cast<std::size_t>(i)];
    }
    std::vector<Rational> x(static_cast<std::size_t>(n));
    auto finish = [&](const auto& reduced) {
        for (int i = 0; i < n; ++i) {
            x[static_cast<std::size_t>(i)] =
                make_rational(BigInt(reduced[static_cast<std::size_t>(i * (n + 1) + n)]),
                              BigInt(reduced[static_cast<std::size_t>(i * (n + 1) + i)]));
        }
    };
    if (hadamard_fits_int64(aug, n, n + 1)) {
        if (!gauss_jordan(aug, n)) throw PreconditionError("solve_exact: singular matrix");
        std::vector<BigInt> as_big;
        as_big.reserve(aug.size());
        for (auto v : aug) as_big.push_back(to_bigint(v));
        finish(as_big);
    } else {
        std::vector<BigInt> big;
        big.reserve(aug.size());
        for (auto v : aug) big.push_back(to_bigint(v));
        if (!gauss_jordan(big, n)) throw PreconditionError("solve_exact: singular matrix");
        finish(big);
    }
    return x;
}

}  // namespace kemeny
