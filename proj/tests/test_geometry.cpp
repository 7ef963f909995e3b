#include "doctest.h"

#include "pmscheme/errors.hpp"
#include "pmscheme/geometry.hpp"

#include <set>

using namespace pmscheme;

TEST_CASE("finite field axioms for small fields")
{
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 3}, {3, 2}, {2, 6}, {5, 2}, {7, 1}}) {
        const FiniteField f(p, m);
        const std::uint32_t q = f.size();
        CHECK(f.order(f.primitive()) == q - 1);
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.mul(a, b) == f.mul_slow(a, b));
                CHECK(f.add(a, b) == f.add(b, a));
                for (std::uint32_t c = 0; c < q; c += 3)
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
    CHECK(FiniteField(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK_THROWS_AS(FiniteField(4, 2), domain_error);
    CHECK_THROWS_AS(FiniteField(2, 21), capacity_error);
}

TEST_CASE("prime powers")
{
    CHECK(prime_power(8) == std::make_pair(2u, 3u));
    CHECK(prime_power(9) == std::make_pair(3u, 2u));
    CHECK(prime_power(7) == std::make_pair(7u, 1u));
    CHECK_FALSE(prime_power(12));
    CHECK_FALSE(prime_power(1));
}

TEST_CASE("Singer difference sets")
{
    const auto fano = singer_difference_set(2, 2);
    CHECK(fano.v == 7);
    CHECK(fano.elements.size() == 3);
    const auto counts = difference_counts(fano);
    for (std::uint32_t g = 1; g < 7; ++g) CHECK(counts[g] == 1);
    CHECK(singer_difference_set(4, 2).v == 21);
    CHECK(singer_difference_set(4, 2).elements.size() == 5);
    CHECK(singer_difference_set(8, 2).elements.size() == 9);
    CHECK(singer_difference_set(3, 2).v == 13);
    const auto hyper = singer_difference_set(2, 3);
    CHECK(hyper.v == 15);
    CHECK(hyper.lambda == 3);
    CHECK_THROWS_AS(singer_difference_set(6, 2), domain_error);
    CHECK_THROWS_AS(singer_difference_set(2, 20), capacity_error);
}

TEST_CASE("planes, ovals and lines through zero")
{
    for (std::uint32_t n : {2u, 4u, 8u, 16u}) {
        INFO(n);
        const auto ds = singer_difference_set(n, 2);
        const auto plane = develop_plane(ds);
        CHECK(plane.lines.size() == ds.v);
        CHECK(plane.exhaustive == (ds.v <= 100));
        for (auto& through : plane.lines_through) CHECK(through.size() == n + 1);
        const auto oval = negated(ds);
        const auto oc = verify_oval(plane, oval);
        CHECK(oc.is_oval);
        CHECK(oc.max_meet == 2);
        const auto lz = lemma_lines_with_zero(plane, ds);
        CHECK(lz.passed());
        CHECK(lz.lines_through_zero == n + 1);
        CHECK(lz.clause_b_points == ds.v - oval.size() - 1);
        // a full line is never an oval
        CHECK_FALSE(verify_oval(plane, plane.lines[0]).is_oval);
    }
    CHECK_THROWS_AS(develop_plane(singer_difference_set(2, 3)), domain_error);
}

TEST_CASE("clique construction")
{
    const auto c2 = build_clique(2);
    CHECK(c2.k == 3);
    CHECK(c2.matchings.size() == 15);
    CHECK(std::set<PerfectMatching>(c2.matchings.begin(), c2.matchings.end()).size() == 15);

    const auto c3 = build_clique(3);
    CHECK(c3.k == 5);
    CHECK(c3.matchings.size() == 63);
    CHECK(c3.size_excluding_zero == 63);
    CHECK(c3.size_including_zero == 64);
    CHECK(c3.matchings.size() * 15 == 945);
    for (std::size_t i = 0; i < c3.matchings.size(); ++i) {
        CHECK(c3.matchings[i].partner(9) != 9);
        for (std::size_t j = i + 1; j < c3.matchings.size(); ++j)
            CHECK(intersection_size(c3.matchings[i], c3.matchings[j]) <= 1);
    }
    CHECK(build_clique(4).matchings.size() == 255);
    CHECK_THROWS_AS(build_clique(1), domain_error);
    CHECK_THROWS_AS(build_clique(5), capacity_error);
}
