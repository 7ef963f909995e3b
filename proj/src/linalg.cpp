#include "pmscheme/linalg.hpp"

#include "pmscheme/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>

namespace pmscheme {

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols() != b.rows()) throw domain_error("matrix shapes do not conform");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (a(i, l) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, l) * b(l, j);
        }
    return c;
}

Rational trace(const RationalMatrix& a)
{
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
    return t;
}

Polynomial characteristic_polynomial(const RationalMatrix& a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n) throw domain_error("characteristic polynomial of a non-square matrix");
    Polynomial p(n + 1);
    p[n] = 1;
    RationalMatrix m(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        m = multiply(a, m);
        for (std::size_t i = 0; i < n; ++i) m(i, i) += p[n - k + 1];
        const Rational t = trace(multiply(a, m));
        p[n - k] = -t / Rational(static_cast<long>(k));
    }
    return p;
}

Rational evaluate(const Polynomial& p, const Rational& x)
{
    Rational r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

namespace {

void trim(Polynomial& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Polynomial derivative(const Polynomial& p)
{
    Polynomial d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    trim(d);
    return d;
}

// Quotient and remainder of a / b (b nonzero).
std::pair<Polynomial, Polynomial> divide(Polynomial a, const Polynomial& b)
{
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    Polynomial q(a.size() - b.size() + 1);
    for (std::size_t s = q.size(); s-- > 0;) {
        const Rational c = a[s + b.size() - 1] / b.back();
        q[s] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[s + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divide(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// Numerical roots of a polynomial through its companion matrix.
std::vector<std::complex<double>> numeric_roots(const Polynomial& p)
{
    const std::size_t n = p.size() - 1;
    if (n == 0) return {};
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const double lead = p.back().get_d();
    for (std::size_t i = 0; i < n; ++i) {
        c(0, static_cast<Eigen::Index>(i)) = -p[n - 1 - i].get_d() / lead;
        if (i + 1 < n) c(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(c, false);
    std::vector<std::complex<double>> out;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()(i));
    return out;
}

} // namespace

RootFactorization rational_roots(const Polynomial& input)
{
    Polynomial p = input;
    trim(p);
    if (p.empty()) throw domain_error("roots of the zero polynomial");
    RootFactorization out;
    if (p.size() == 1) return out;

    // Substituting x = y / D with D the common denominator makes the monic
    // polynomial integral, so every rational root becomes an integer y.
    Polynomial monic = p;
    for (auto& c : monic) c /= p.back();
    Integer d = 1;
    for (auto& c : monic) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den().get_mpz_t());
    const std::size_t n = monic.size() - 1;
    Polynomial scaled(n + 1);
    Integer dp = 1;
    for (std::size_t i = n + 1; i-- > 0;) {
        scaled[i] = monic[i] * Rational(dp);
        dp *= d;
    }

    Polynomial squarefree = divide(scaled, gcd(scaled, derivative(scaled))).first;
    std::vector<Integer> candidates;
    for (auto z : numeric_roots(squarefree)) {
        if (std::abs(z.imag()) > 1e-3 * std::max(1.0, std::abs(z.real()))) continue;
        const double base = std::round(z.real());
        for (int off = -2; off <= 2; ++off) {
            Integer y;
            mpz_set_d(y.get_mpz_t(), base + off);
            candidates.push_back(y);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    Polynomial rest = scaled;
    for (const auto& y : candidates) {
        const Rational ry(y);
        int mult = 0;
        while (rest.size() > 1 && evaluate(rest, ry) == 0) {
            rest = divide(rest, Polynomial{-ry, Rational(1)}).first;
            ++mult;
        }
        if (mult) out.roots.push_back({Rational(y) / Rational(d), mult});
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const PolynomialRoot& a, const PolynomialRoot& b) { return a.value < b.value; });
    out.residual_degree = static_cast<int>(rest.size()) - 1;
    return out;
}

Rational determinant(RationalMatrix a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n) throw domain_error("determinant of a non-square matrix");
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw domain_error("solve needs a square system");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            std::swap(b[piv], b[c]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            b[i] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
    return b;
}

std::vector<std::vector<Rational>> nullspace(RationalMatrix a)
{
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::uint64_t> large_primes(std::size_t count)
{
    static std::mutex lock;
    static std::vector<std::uint64_t> cache;
    std::lock_guard<std::mutex> guard(lock);
    std::uint64_t candidate = cache.empty() ? (std::uint64_t{1} << 62) - 1 : cache.back() - 2;
    while (cache.size() < count) {
        Integer z(std::to_string(candidate));
        if (mpz_probab_prime_p(z.get_mpz_t(), 40) > 0) cache.push_back(candidate);
        candidate -= 2;
    }
    return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

RankCertificate exact_rank(const kernels::SparseColumns& m, bool use_parallel)
{
    const std::size_t rows = m.rows, cols = m.columns.size();
    RankCertificate cert;
    if (rows == 0 || cols == 0) return cert;

    // Hadamard: a nonzero r x r minor is at most the product of the r largest
    // column (or row) norms, r <= min(rows, cols).
    const std::size_t r = std::min(rows, cols);
    std::vector<double> col_bits, row_bits;
    std::vector<std::size_t> row_count(rows, 0);
    for (const auto& col : m.columns) {
        col_bits.push_back(col.empty() ? 0.0 : 0.5 * std::log2(static_cast<double>(col.size())));
        for (auto i : col) ++row_count[i];
    }
    for (auto c : row_count) row_bits.push_back(c == 0 ? 0.0 : 0.5 * std::log2(static_cast<double>(c)));
    auto top = [r](std::vector<double> v) {
        std::sort(v.begin(), v.end(), std::greater<>());
        double s = 0;
        for (std::size_t i = 0; i < std::min(r, v.size()); ++i) s += v[i];
        return s;
    };
    cert.hadamard_bits = std::min(top(col_bits), top(row_bits));

    std::vector<std::uint64_t> dense(rows * cols, 0);
    for (std::size_t j = 0; j < cols; ++j)
        for (auto i : m.columns[j]) dense[i * cols + j] = 1;

    std::size_t used = 0;
    while (cert.prime_product_bits <= cert.hadamard_bits + 1.0) {
        const std::uint64_t p = large_primes(used + 1).back();
        const std::size_t rk = use_parallel ? kernels::parallel::rank_mod_p(dense, rows, cols, p)
                                            : kernels::serial::rank_mod_p(dense, rows, cols, p);
        cert.rank = std::max(cert.rank, rk);
        cert.prime_product_bits += std::log2(static_cast<double>(p));
        ++used;
        // A full-rank residue already settles the question.
        if (cert.rank == r) break;
    }
    cert.primes_used = used;
    return cert;
}

} // namespace pmscheme
