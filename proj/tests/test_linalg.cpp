#include "doctest.h"

#include "pmscheme/linalg.hpp"

using namespace pmscheme;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows)
{
    RationalMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("characteristic polynomial")
{
    auto p = characteristic_polynomial(from_rows({{0, 48}, {8, 40}}));
    // x^2 - 40x - 384 = (x - 48)(x + 8)
    REQUIRE(p.size() == 3);
    CHECK(p[0] == -384);
    CHECK(p[1] == -40);
    CHECK(p[2] == 1);
    auto roots = rational_roots(p);
    REQUIRE(roots.roots.size() == 2);
    CHECK(roots.roots[0].value == -8);
    CHECK(roots.roots[1].value == 48);
    CHECK(roots.residual_degree == 0);
}

TEST_CASE("rational roots with multiplicity and irrational remainder")
{
    // (x - 1/2)^2 (x + 3) (x^2 - 2)
    Polynomial a{Rational(-1, 2), 1};
    Polynomial p{1};
    auto mul = [](const Polynomial& x, const Polynomial& y) {
        Polynomial r(x.size() + y.size() - 1);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
        return r;
    };
    p = mul(mul(mul(a, a), Polynomial{3, 1}), Polynomial{-2, 0, 1});
    auto f = rational_roots(p);
    REQUIRE(f.roots.size() == 2);
    CHECK(f.roots[0].value == -3);
    CHECK(f.roots[0].multiplicity == 1);
    CHECK(f.roots[1].value == Rational(1, 2));
    CHECK(f.roots[1].multiplicity == 2);
    CHECK(f.residual_degree == 2);
}

TEST_CASE("determinant, solve and nullspace")
{
    auto m = from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    CHECK(determinant(m) == 18);
    auto x = solve(m, {3, 5, 5});
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    CHECK((*x)[2] == 1);
    auto singular = from_rows({{1, 2}, {2, 4}});
    CHECK(determinant(singular) == 0);
    CHECK_FALSE(solve(singular, {1, 1}));
    auto ns = nullspace(singular);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == -2);
    CHECK(ns[0][1] == 1);
}

TEST_CASE("exact rank")
{
    kernels::SparseColumns n;
    n.rows = 4;
    n.columns = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}};
    // a chord on the 4-cycle incidence (rank 3) creates an odd cycle: full rank
    auto cert = exact_rank(n);
    CHECK(cert.rank == 4);
    n.columns.pop_back();
    CHECK(exact_rank(n).rank == 3);
    CHECK(exact_rank(n, false).rank == 3);
    auto primes = large_primes(4);
    CHECK(primes[0] < (std::uint64_t{1} << 62));
    CHECK(primes[0] > primes[1]);
}
