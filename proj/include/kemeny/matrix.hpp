#pragma once

#include "kemeny/rational.hpp"

#include <cstdint>
#include <vector>

namespace kemeny {

/// Dense row-major square matrix.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n, const T& fill = T{})
        : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

    int size() const noexcept { return n_; }

    T& operator()(int i, int j) { return data_[index(i, j)]; }
    const T& operator()(int i, int j) const { return data_[index(i, j)]; }

    const std::vector<T>& data() const noexcept { return data_; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = SquareMatrix<std::int64_t>;

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Runs in int64 when a Hadamard bound shows no intermediate product can
/// overflow, and in arbitrary precision otherwise.
BigInt bareiss_determinant(const IntMatrix& m);

/// Same, restricted to the int64 path. Returns false (and leaves `out`
/// untouched) when the Hadamard bound does not certify int64 safety.
bool bareiss_determinant_small(const IntMatrix& m, std::int64_t& out);

/// Exact solution of A x = b for nonsingular integer A, by fraction-free
/// Gauss-Jordan elimination. Throws PreconditionError when A is singular.
std::vector<Rational> solve_exact(const IntMatrix& a, const std::vector<std::int64_t>& b);

}  // namespace kemeny
