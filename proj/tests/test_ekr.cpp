#include "doctest.h"

#include "pmscheme/ekr.hpp"
#include "pmscheme/errors.hpp"
#include "pmscheme/geometry.hpp"
#include "pmscheme/scheme.hpp"

using namespace pmscheme;

TEST_CASE("canonical cocliques")
{
    CHECK(canonical_coclique(4, {{0, 1}, {2, 3}}).size() == 3);
    CHECK(canonical_coclique(3, {{0, 1}, {2, 3}}).size() == 1);
    const auto c5 = canonical_coclique(5, {{0, 1}, {4, 7}});
    CHECK(c5.size() == 15);
    for (auto& p : c5) {
        CHECK(p.partner(0) == 1);
        CHECK(p.partner(4) == 7);
    }
    std::size_t filtered = 0;
    for_each_matching(5, [&](const PerfectMatching& p) {
        filtered += p.partner(0) == 1 && p.partner(4) == 7;
        return true;
    });
    CHECK(filtered == 15);
    CHECK_THROWS_AS(canonical_coclique(4, {{0, 1}, {1, 2}}), domain_error);
}

TEST_CASE("ratio bound arithmetic")
{
    CHECK(ratio_bound(945, 62, -1) == 15);
    CHECK(ratio_bound(945, make_rational(62, 15), make_rational(-1, 15)) == 15);
    CHECK_THROWS_AS(ratio_bound(10, 3, 0), domain_error);
}

TEST_CASE("weight coefficients")
{
    for (int k = 5; k <= 30; ++k) {
        const auto w = solve_weight_coefficients(k);
        const Rational base(double_factorial(2 * k - 6));
        CHECK(w.a1 == 1 / (4 * base));
        CHECK(w.a2 == 1 / base);
        CHECK(w.a3 == 1 / base);
        CHECK(w.determinant != 0);
        CHECK(generic_weighted_matrix(k).row_sum() == (2 * k - 1) * (2 * k - 3) - 1);
    }
    CHECK(solve_weight_coefficients(10).a1 == make_rational(1, 2580480));
    CHECK(solve_weight_coefficients(10).a2 == make_rational(1, 645120));
    CHECK(solve_weight_coefficients(5).a1 == make_rational(1, 32));
    for (int k = 5; k <= 50; ++k) CHECK(weight_system_determinant(k) != 0);
    CHECK_THROWS_AS(solve_weight_coefficients(4), domain_error);
}

TEST_CASE("explicit small matrices")
{
    for (int k : explicit_small_matrix_ks()) {
        const auto m = explicit_small_matrix(k);
        CHECK(m.supported_on_m2());
        CHECK(m.row_sum() == (2 * k - 1) * (2 * k - 3) - 1);
    }
    CHECK_THROWS_AS(explicit_small_matrix(6), domain_error);
}

TEST_CASE("weighted matrices are tight for k <= 5")
{
    const std::vector<std::vector<long>> expected{{14, -1, -1}, {34, -1, -1, -1, 4}};
    for (int k = 3; k <= 5; ++k) {
        INFO(k);
        const auto r = verify_weighted_matrix(k);
        CHECK(r.dense_verified);
        CHECK(r.certificate.valid);
        CHECK(r.certificate.d == (2 * k - 1) * (2 * k - 3) - 1);
        CHECK(r.certificate.tau == -1);
        CHECK(r.certificate.bound == Rational(double_factorial(2 * k - 5)));
    }
    const auto r4 = verify_weighted_matrix(4);
    CHECK(r4.module_eigenvalues.at({8}) == 34);
    CHECK(r4.module_eigenvalues.at({6, 2}) == -1);
    CHECK(r4.module_eigenvalues.at({4, 4}) == -1);
    CHECK(r4.module_eigenvalues.at({4, 2, 2}) == -1);
    CHECK(r4.module_eigenvalues.at({2, 2, 2, 2}) == 4);
}

TEST_CASE("generic matrix on the target modules")
{
    for (int k = 6; k <= 7; ++k) {
        INFO(k);
        const auto r = verify_weighted_matrix(k);
        CHECK(r.certificate.valid);
        CHECK(r.module_eigenvalues.at(two_row(2 * k - 2, 2)) == -1);
        CHECK(r.module_eigenvalues.at(two_row(2 * k - 4, 4)) == -1);
        CHECK(r.module_eigenvalues.at({2 * k - 4, 2, 2}) == -1);
        CHECK(*r.module_2k6_6_eigenvalue == *r.module_2k6_6_closed_form);
    }
    CHECK(*verify_weighted_matrix(6).module_2k6_6_eigenvalue == make_rational(-7, 2));
    // closed-form path only
    const auto r20 = verify_weighted_matrix(20);
    CHECK(r20.certificate.valid);
    CHECK(r20.certificate.tau == -1);
    CHECK(*r20.module_2k6_6_eigenvalue > -1);
}

TEST_CASE("clique projection at 2k = 10")
{
    const auto c = build_clique(3);
    const auto p = clique_projection(5, c.matchings);
    CHECK(p.psd);
    CHECK(p.row_sum == make_rational(62, 15));
    CHECK(*p.least_eigenvalue == make_rational(-1, 15));
    CHECK(*p.bound == 15);
    CHECK(p.m.supported_on_m2());
    CHECK(p.m_hat.coefficient(identity_shape(5)) == make_rational(1, 15));

    const auto p3 = clique_projection(3, build_clique(2).matchings);
    CHECK(*p3.bound == 1);

    // two matchings sharing two edges are not a clique
    CHECK_THROWS_AS(clique_projection(4, canonical_coclique(4, {{0, 1}, {2, 3}})), domain_error);
}

TEST_CASE("trace bound report")
{
    for (int k = 10; k <= 20; ++k) {
        const auto r = trace_bound_row(k);
        CHECK(r.m_formulas_match_hooks);
        CHECK(r.diag_m2 == r.diag_m2_closed);
        CHECK(r.rhs_printed_poly == r.rhs_direct_poly);
    }
    CHECK(trace_bound_row(10).m1 == 170);
    const auto rep = trace_bound_report(15, 40);
    for (auto& r : rep.rows) CHECK(r.holds_2k8_8);
    CHECK(*rep.threshold_2k8_8 == 15);
}

TEST_CASE("span of two-edge stars")
{
    const auto s4 = span_dimension_check(4);
    CHECK(s4.vectors == 210);
    CHECK(s4.rank == 91);
    CHECK(s4.expected == 91);
    CHECK(s4.passed);
    const auto s3 = span_dimension_check(3);
    CHECK_FALSE(s3.asserted);
}

TEST_CASE("exact maximum cocliques")
{
    const auto r3 = max_coclique(3);
    CHECK(r3.alpha == 1);
    const auto r4 = max_coclique(4);
    CHECK(r4.alpha == 3);
    CHECK(r4.all_canonical);
    CHECK(r4.maximum_cocliques == 210);
    CHECK_FALSE(r4.inconclusive);
    CHECK(max_coclique(4, 5).inconclusive);
    for (int k = 3; k <= 5; ++k) CHECK(verify_main_theorem(k).valid);
}
