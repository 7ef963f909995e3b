#pragma once

#include "pmscheme/exact.hpp"
#include "pmscheme/kernels.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pmscheme {

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Coefficients from the constant term upward.
using Polynomial = std::vector<Rational>;

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
Rational trace(const RationalMatrix& a);

/// det(xI - A), monic, via Faddeev-LeVerrier over Q.
Polynomial characteristic_polynomial(const RationalMatrix& a);

Rational evaluate(const Polynomial& p, const Rational& x);

struct PolynomialRoot {
    Rational value;
    int multiplicity = 0;
};

struct RootFactorization {
    std::vector<PolynomialRoot> roots;   ///< ascending by value
    int residual_degree = 0;             ///< degree left after removing rational roots
};

/// All rational roots with multiplicity. Candidates are seeded numerically
/// from the square-free part and every root is confirmed by exact division.
RootFactorization rational_roots(const Polynomial& p);

Rational determinant(RationalMatrix a);

/// Unique solution of a x = b, or nullopt when a is singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

/// Basis of the right null space.
std::vector<std::vector<Rational>> nullspace(RationalMatrix a);

struct RankCertificate {
    std::size_t rank = 0;
    std::size_t primes_used = 0;
    double hadamard_bits = 0.0;       ///< log2 bound on any nonzero minor
    double prime_product_bits = 0.0;  ///< log2 of the product of primes used
};

/// Exact rank over Q of a 0/1 matrix. The rank modulo p never exceeds the
/// rational rank, and equals it unless p divides a fixed nonzero minor; the
/// maximum over primes whose product exceeds the Hadamard bound is therefore
/// the rational rank.
RankCertificate exact_rank(const kernels::SparseColumns& m, bool use_parallel = true);

/// Largest primes below 2^62, descending; deterministic.
std::vector<std::uint64_t> large_primes(std::size_t count);

} // namespace pmscheme
