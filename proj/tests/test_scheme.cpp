#include "doctest.h"

#include "pmscheme/errors.hpp"
#include "pmscheme/scheme.hpp"

#include <algorithm>
#include <set>

using namespace pmscheme;

TEST_CASE("class degrees at 2k = 8")
{
    CHECK(class_degree(4, {8}) == 48);
    CHECK(class_degree(4, {6, 2}) == 32);
    CHECK(class_degree(4, {4, 4}) == 12);
    CHECK(class_degree(4, {4, 2, 2}) == 12);
    CHECK(class_degree(4, {2, 2, 2, 2}) == 1);
    CHECK_THROWS_AS(class_degree(4, {5, 3}), domain_error);
    CHECK_THROWS_AS(class_degree(4, {6}), domain_error);
}

TEST_CASE("degrees sum to the vertex count and match the closed form")
{
    for (int k = 1; k <= 7; ++k) {
        Integer total = 0;
        for (auto& c : scheme_classes(k)) {
            CHECK(c.degree == class_degree_formula(k, c.shape));
            total += c.degree;
        }
        CHECK(total == double_factorial(2 * k - 1));
    }
    for (int k = 5; k <= 8; ++k) {
        const Integer dd = double_factorial(2 * k);
        CHECK(class_degree(k, two_row(2 * k, 0)) == dd / (2 * k));
        std::vector<int> p{2 * k - 2, 2};
        CHECK(class_degree(k, IntegerPartition(p)) == dd / (2 * (2 * k - 2)));
        CHECK(class_degree(k, two_row(2 * k - 4, 4)) == dd / (4 * (2 * k - 4)));
        if (k != 6) CHECK(class_degree(k, two_row(2 * k - 6, 6)) == dd / (6 * (2 * k - 6)));
    }
}

TEST_CASE("neighbour generation agrees with filtering")
{
    for (int k = 1; k <= 4; ++k) {
        auto all = enumerate_matchings(k);
        for (std::size_t i = 0; i < all.size(); i += (k == 4 ? 13 : 1))
            for (auto& shape : even_partitions(2 * k)) {
                auto gen = neighbors(all[i], shape);
                auto flt = neighbors_by_filter(all[i], shape);
                std::sort(gen.begin(), gen.end());
                CHECK(std::adjacent_find(gen.begin(), gen.end()) == gen.end());
                std::sort(flt.begin(), flt.end());
                CHECK(gen == flt);
            }
    }
    auto p = PerfectMatching::parse("1-2,3-4,5-6");
    CHECK(neighbors(p, {2, 2, 2}) == std::vector<PerfectMatching>{p});
    CHECK(neighbors(p, {6}).size() == 8);
    CHECK(neighbors(PerfectMatching::parse("1-2,3-4,5-6,7-8"), {4, 4}).size() == 12);
}

TEST_CASE("neighbour generation at k = 6 yields distinct members of the class")
{
    auto p = matching_unrank(6, 4321);
    for (auto& shape : even_partitions(12)) {
        std::set<std::string> seen;
        bool shapes_ok = true;
        for_each_neighbor(p, shape, [&](const PerfectMatching& q) {
            seen.insert(q.to_string());
            shapes_ok = shapes_ok && union_shape(p, q) == shape;
            return true;
        });
        CHECK(shapes_ok);
        CHECK(Integer(static_cast<unsigned long>(seen.size())) == class_degree_formula(6, shape));
    }
}

TEST_CASE("derangement graphs")
{
    auto g = mt_adjacency(3, 1);
    CHECK(g.degree == 8);
    CHECK(mt_adjacency(3, 2).degree == 14);
    // [4,2,2] shares two edges, so M_2(8) keeps only [8], [6,2], [4,4]
    CHECK(mt_adjacency(4, 2).degree == 48 + 32 + 12);
    CHECK(mt_adjacency(4, 3).degree == 48 + 32 + 12 + 12);
    CHECK_THROWS_AS(mt_adjacency(3, 4), domain_error);
    // non-adjacency in M_2 means sharing at least two edges
    auto all = enumerate_matchings(4);
    auto g2 = mt_adjacency(4, 2);
    for (std::size_t i = 0; i < all.size(); i += 3)
        for (std::size_t j = 0; j < all.size(); j += 5) {
            auto s = union_shape(all[i], all[j]);
            bool adjacent = std::find(g2.classes.begin(), g2.classes.end(), s) != g2.classes.end();
            CHECK(adjacent == (intersection_size(all[i], all[j]) <= 1));
        }
}

TEST_CASE("dense scheme")
{
    DenseScheme s(5);
    CHECK(s.vertex_count() == 945);
    for (std::size_t c = 0; c < s.classes().size(); ++c) {
        bool constant = true;
        for (std::size_t i = 0; i < s.vertex_count(); ++i) {
            unsigned long row = 0;
            for (std::size_t j = 0; j < s.vertex_count(); ++j) row += s(i, j) == c;
            constant = constant && Integer(row) == s.classes()[c].degree;
        }
        CHECK(constant);
    }
    CHECK_THROWS_AS(DenseScheme(6), capacity_error);
}

TEST_CASE("Bose-Mesner identities")
{
    for (int k = 1; k <= 4; ++k) {
        auto rep = bose_mesner_checks(k);
        CHECK(rep.passed);
        CHECK(rep.failures.empty());
    }
    CHECK_THROWS_AS(bose_mesner_checks(5), capacity_error);
}
