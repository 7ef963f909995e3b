#include "doctest.h"

#include "pmscheme/errors.hpp"
#include "pmscheme/matching.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace pmscheme;

TEST_CASE("enumeration counts and order")
{
    CHECK(enumerate_matchings(1).size() == 1);
    CHECK(enumerate_matchings(1)[0].to_string() == "1-2");
    CHECK(enumerate_matchings(3).size() == 15);
    auto m5 = enumerate_matchings(5);
    CHECK(m5.size() == 945);
    std::set<std::string> distinct;
    for (auto& m : m5) distinct.insert(m.to_string());
    CHECK(distinct.size() == 945);

    auto m3 = enumerate_matchings(3);
    CHECK(m3.front().to_string() == "1-2,3-4,5-6");
    CHECK(m3[1].to_string() == "1-2,3-5,4-6");
    CHECK(m3.back().to_string() == "1-6,2-5,3-4");
    CHECK_THROWS_AS(enumerate_matchings(kEnumerationCap + 1), capacity_error);
}

TEST_CASE("rank and unrank follow the enumeration order")
{
    for (int k = 1; k <= 5; ++k) {
        std::uint64_t i = 0;
        for_each_matching(k, [&](const PerfectMatching& m) {
            CHECK(matching_rank(m) == i);
            CHECK(matching_unrank(k, i) == m);
            ++i;
            return true;
        });
    }
    CHECK_THROWS_AS(matching_unrank(3, 15), domain_error);
}

TEST_CASE("parse and print")
{
    auto p = PerfectMatching::parse("3-4,1-2,6-5");
    CHECK(p.to_string() == "1-2,3-4,5-6");
    CHECK(p.partner(4) == 5);
    CHECK_THROWS_AS(PerfectMatching::parse("1-2,2-3"), domain_error);
    CHECK_THROWS_AS(PerfectMatching::parse("1-2,3-7,5-6"), domain_error);
    CHECK_THROWS_AS(PerfectMatching::parse("1,2"), domain_error);
}

TEST_CASE("union shape")
{
    auto p = PerfectMatching::parse("1-2,3-4,5-6");
    auto q = PerfectMatching::parse("1-3,2-4,5-6");
    CHECK(union_shape(p, p) == IntegerPartition{2, 2, 2});
    CHECK(union_shape(p, q) == IntegerPartition{4, 2});
    CHECK(intersection_size(p, q) == 1);
    CHECK(intersection_size(p, p) == 3);
    CHECK_THROWS_AS(union_shape(p, PerfectMatching::parse("1-2,3-4")), domain_error);

    std::map<IntegerPartition, int> counts;
    auto all = enumerate_matchings(3);
    for (auto& a : all)
        for (auto& b : all) ++counts[union_shape(a, b)];
    CHECK(counts[IntegerPartition{2, 2, 2}] == 15);
    CHECK(counts[IntegerPartition{4, 2}] == 15 * 6);
    CHECK(counts[IntegerPartition{6}] == 15 * 8);
}

TEST_CASE("union shape symmetry and intersection consistency")
{
    for (int k = 1; k <= 4; ++k) {
        auto all = enumerate_matchings(k);
        for (auto& a : all)
            for (auto& b : all) {
                auto s = union_shape(a, b);
                CHECK(s == union_shape(b, a));
                CHECK(s.size() == 2 * k);
                CHECK(s.is_even());
            }
    }
    std::mt19937_64 rng(12345);
    const std::uint64_t total = matching_count(6).get_ui();
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    for (int trial = 0; trial < 10000; ++trial) {
        auto a = matching_unrank(6, pick(rng));
        auto b = matching_unrank(6, pick(rng));
        CHECK(intersection_size(a, b) == union_shape(a, b).count(2));
    }
}

TEST_CASE("union shape is invariant under relabelling")
{
    std::mt19937_64 rng(7);
    std::vector<int> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    auto all = enumerate_matchings(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        auto& a = all[static_cast<std::size_t>(trial * 4 % 945)];
        auto& b = all[static_cast<std::size_t>(trial * 7 % 945)];
        CHECK(union_shape(permute(a, perm), permute(b, perm)) == union_shape(a, b));
    }
}
