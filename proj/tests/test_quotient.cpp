#include "doctest.h"

#include "pmscheme/closed_forms.hpp"
#include "pmscheme/errors.hpp"
#include "pmscheme/quotient.hpp"
#include "pmscheme/scheme.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace pmscheme;

namespace {

RationalMatrix matrix(std::vector<std::vector<long>> rows)
{
    RationalMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

bool same(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

} // namespace

TEST_CASE("orbit counts of Young subgroups")
{
    CHECK(orbit_partition(4, {6, 2}).orbit_count() == 2);
    CHECK(orbit_partition(4, {4, 4}).orbit_count() == 3);
    CHECK(orbit_partition(4, {4, 2, 2}).orbit_count() == 6);
    CHECK(orbit_partition(4, {8}).orbit_count() == 1);
    for (int k = 2; k <= 6; ++k)
        for (auto& lambda : even_partitions(2 * k)) {
            const OrbitPartition o(k, lambda);
            Integer total = 0;
            for (std::size_t i = 0; i < o.orbit_count(); ++i) total += o.orbit_size(i);
            CHECK(total == double_factorial(2 * k - 1));
        }
}

TEST_CASE("orbit keys agree with brute-force orbits")
{
    // Orbits of Sym(lambda) generated by block transpositions.
    for (int k = 2; k <= 4; ++k)
        for (auto& lambda : even_partitions(2 * k)) {
            const OrbitPartition o(k, lambda);
            const auto all = enumerate_matchings(k);
            std::map<std::uint64_t, int> label;
            int next = 0;
            for (auto& p : all) {
                if (label.count(matching_rank(p))) continue;
                std::vector<PerfectMatching> stack{p};
                label[matching_rank(p)] = next;
                while (!stack.empty()) {
                    const PerfectMatching cur = stack.back();
                    stack.pop_back();
                    for (int a = 0; a < 2 * k; ++a)
                        for (int b = a + 1; b < 2 * k; ++b) {
                            if (o.block_of()[a] != o.block_of()[b]) continue;
                            std::vector<int> perm(2 * k);
                            std::iota(perm.begin(), perm.end(), 0);
                            std::swap(perm[a], perm[b]);
                            const auto img = permute(cur, perm);
                            if (label.emplace(matching_rank(img), next).second) stack.push_back(img);
                        }
                }
                ++next;
            }
            CHECK(static_cast<std::size_t>(next) == o.orbit_count());
            std::map<int, int> key_for_label;
            for (auto& p : all) {
                const int orbit = o.orbit_of(p);
                auto [it, fresh] = key_for_label.emplace(label[matching_rank(p)], orbit);
                CHECK(it->second == orbit);
            }
            for (std::size_t i = 0; i < o.orbit_count(); ++i) {
                CHECK(o.orbit_of(o.representative(i)) == static_cast<int>(i));
                if (o.second_representative(i)) CHECK(o.orbit_of(*o.second_representative(i)) == static_cast<int>(i));
            }
        }
}

TEST_CASE("small quotient matrices")
{
    CHECK(same(quotient_matrix(4, {8}, {6, 2}).entries, matrix({{0, 48}, {8, 40}})));
    CHECK(same(quotient_matrix(5, {6, 4}, {8, 2}).entries, matrix({{0, 160}, {20, 140}})));
    const auto id = quotient_matrix(4, identity_shape(4), {4, 2, 2}).entries;
    for (std::size_t i = 0; i < id.rows(); ++i)
        for (std::size_t j = 0; j < id.cols(); ++j) CHECK(id(i, j) == (i == j ? 1 : 0));
    CHECK(same(quotient_matrix(5, {6, 4}, {8, 2}, false).entries, quotient_matrix(5, {6, 4}, {8, 2}, true).entries));
}

TEST_CASE("printed quotient formulas hold at k = 7")
{
    for (auto& f : closed_forms::quotient_fixtures(7)) {
        INFO(f.name);
        CHECK(same(quotient_matrix(7, f.class_shape, f.subgroup).entries, f.entries));
    }
    CHECK_THROWS_AS(closed_forms::quotient_fixtures(5), domain_error);
}

TEST_CASE("equal parts at k = 6 halve the [6,6] class")
{
    for (auto& f : closed_forms::quotient_fixtures(6)) {
        INFO(f.name);
        const auto q = quotient_matrix(6, f.class_shape, f.subgroup).entries;
        if (f.class_shape != IntegerPartition{6, 6}) {
            CHECK(same(q, f.entries));
        } else if (f.subgroup == IntegerPartition{10, 2}) {
            RationalMatrix half = f.entries;
            for (std::size_t i = 0; i < half.rows(); ++i)
                for (std::size_t j = 0; j < half.cols(); ++j) half(i, j) /= 2;
            CHECK(same(q, half));
        }
    }
}

TEST_CASE("combined quotient is linear in the weights")
{
    const OrbitPartition o(5, {6, 4});
    const auto a = quotient_matrix(o, {10}).entries;
    const auto b = quotient_matrix(o, {8, 2}).entries;
    const auto c = combined_quotient(o, {{{10}, make_rational(1, 2)}, {{8, 2}, 3}});
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) CHECK(c(i, j) == a(i, j) / 2 + 3 * b(i, j));
}

TEST_CASE("admissible modules and the standard chain")
{
    const auto adm = admissible_modules({4, 2, 2});
    CHECK(adm == std::vector<IntegerPartition>{{8}, {6, 2}, {4, 4}, {4, 2, 2}});
    CHECK(admissible_modules({8}) == std::vector<IntegerPartition>{{8}});
    CHECK(standard_chain(4) == std::vector<IntegerPartition>{{8}, {6, 2}, {4, 4}, {4, 2, 2}});
    CHECK(standard_chain(7) == std::vector<IntegerPartition>{{14}, {12, 2}, {10, 4}, {8, 6}, {10, 2, 2}});
}

TEST_CASE("eigenvalue extraction at k = 5")
{
    const auto ev = extract_eigenvalues(5, {10}, standard_chain(5));
    CHECK(ev.at({10}) == 384);
    CHECK(ev.at({8, 2}) == -48);
    CHECK(ev.at({6, 4}) == -8);
    const auto ev2 = extract_eigenvalues(5, {6, 4}, {{10}, {8, 2}});
    CHECK(ev2.at({10}) == 160);
    CHECK(ev2.at({8, 2}) == -20);
}

TEST_CASE("full table at 2k = 8 matches the printed table")
{
    FullTableDiagnostics diag;
    const auto t = full_char_table_small(4, &diag);
    const std::vector<IntegerPartition> cls{{8}, {6, 2}, {4, 4}, {4, 2, 2}, {2, 2, 2, 2}};
    const std::map<IntegerPartition, std::vector<long>> printed{
        {{8}, {48, 32, 12, 12, 1}},     {{6, 2}, {-8, 4, -2, 5, 1}},      {{4, 4}, {-2, -8, 7, 2, 1}},
        {{4, 2, 2}, {4, -2, -2, -1, 1}}, {{2, 2, 2, 2}, {-6, 8, 3, -6, 1}},
    };
    for (auto& [mu, row] : printed)
        for (std::size_t c = 0; c < cls.size(); ++c) CHECK(t.at(mu, cls[c]) == row[c]);
    CHECK(t.multiplicity({6, 2}) == 20);
    CHECK(table_consistency_failures(t).empty());
    CHECK(verify_table_dense(t).empty());
    CHECK(diag.clusters == 5);
}

TEST_CASE("full tables for k <= 5 pass exact verification")
{
    for (int k = 1; k <= 5; ++k) {
        INFO(k);
        const auto t = full_char_table_small(k);
        CHECK(t.complete());
        CHECK(table_consistency_failures(t).empty());
        CHECK(verify_table_dense(t).empty());
    }
}

TEST_CASE("a corrupted table is rejected")
{
    auto t = full_char_table_small(4);
    t.set({6, 2}, {4, 4}, -3);
    CHECK_FALSE(table_consistency_failures(t).empty());
    CHECK_FALSE(verify_table_dense(t).empty());
}

TEST_CASE("partial table agrees with the full table at k = 5 on shared cells")
{
    const auto full = full_char_table_small(5);
    for (auto& cls : std::vector<IntegerPartition>{{10}, {8, 2}, {6, 4}}) {
        const auto ev = extract_eigenvalues(5, cls, standard_chain(5));
        for (auto& [mu, value] : ev) CHECK(full.at(mu, cls) == value);
    }
}

TEST_CASE("partial table at k = 7 matches the closed forms")
{
    const auto r = partial_char_table(7);
    CHECK(r.all_match);
    int compared = 0;
    for (auto& c : r.cells)
        if (c.closed_form) {
            CHECK(c.matches);
            ++compared;
        }
    CHECK(compared == 21);
}

TEST_CASE("4-set spanning vectors at k = 4")
{
    const auto r = spanning_set_rank_4sets(4);
    CHECK(r.rank == 35);
    CHECK(r.expected_rank == 35);
    CHECK(r.direct_diagonal == r.diagonal);
    CHECK(r.odd_meets_vanish);
    CHECK(r.constant_by_meet);
    CHECK(r.passed);
}

TEST_CASE("conjecture probe at k = 4")
{
    const auto rep = conjecture_check(full_char_table_small(4));
    const auto it = std::find_if(rep.rows.begin(), rep.rows.end(),
                                 [](const ConjectureRow& r) { return r.module == IntegerPartition{6, 2}; });
    REQUIRE(it != rep.rows.end());
    CHECK(it->argmax_class == IntegerPartition{4, 2, 2});
    CHECK(it->max_value == 5);
    CHECK_FALSE(it->max_at_own_class);
    CHECK_FALSE(it->observation.empty());
}
