#include "pmscheme/scheme.hpp"

#include "pmscheme/errors.hpp"
#include "pmscheme/kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>

namespace pmscheme {

IntegerPartition identity_shape(int k)
{
    return IntegerPartition(std::vector<int>(static_cast<std::size_t>(k), 2));
}

void require_class_shape(int k, const IntegerPartition& shape)
{
    if (shape.size() != 2 * k || !shape.is_even())
        throw domain_error(shape.to_string() + " is not an even partition of " + std::to_string(2 * k));
}

namespace {

std::vector<int> half_parts(const IntegerPartition& shape)
{
    std::vector<int> halves;
    for (int p : shape.parts()) halves.push_back(p / 2);
    return halves;
}

// Groups P's edges into cycle supports, then closes each support into an
// alternating cycle in every possible way.
class Overlay {
public:
    Overlay(const PerfectMatching& p, const IntegerPartition& shape,
            const std::function<bool(const PerfectMatching&)>& visit)
        : p_(p), edges_(p.edges()), visit_(visit)
    {
        for (int h : half_parts(shape)) ++remaining_[h];
    }

    void run()
    {
        std::vector<int> group;
        choose_groups((1u << edges_.size()) - 1u);
    }

private:
    const PerfectMatching& p_;
    std::vector<PerfectMatching::Edge> edges_;
    const std::function<bool(const PerfectMatching&)>& visit_;
    std::map<int, int> remaining_;
    std::vector<std::vector<int>> groups_;
    std::array<std::uint8_t, kMaxVertices> partner_{};
    bool stopped_ = false;

    void choose_groups(std::uint32_t free)
    {
        if (stopped_) return;
        if (free == 0) {
            arrange(0);
            return;
        }
        const int first = std::countr_zero(free);
        const std::uint32_t rest = free & ~(1u << first);
        for (auto& [size, count] : remaining_) {
            if (count == 0) continue;
            --count;
            std::vector<int> group{first};
            choose_members(rest, rest, size - 1, group);
            ++count;
            if (stopped_) return;
        }
    }

    // Pick `need` more edges from `pool` (ascending), then recurse on the rest.
    void choose_members(std::uint32_t free, std::uint32_t pool, int need, std::vector<int>& group)
    {
        if (stopped_) return;
        if (need == 0) {
            std::uint32_t left = free;
            for (std::size_t i = 1; i < group.size(); ++i) left &= ~(1u << group[i]);
            groups_.push_back(group);
            choose_groups(left);
            groups_.pop_back();
            return;
        }
        while (pool && std::popcount(pool) >= need) {
            const int e = std::countr_zero(pool);
            pool &= ~(1u << e);
            group.push_back(e);
            choose_members(free, pool, need - 1, group);
            group.pop_back();
            if (stopped_) return;
        }
    }

    void arrange(std::size_t g)
    {
        if (stopped_) return;
        if (g == groups_.size()) {
            if (!visit_(PerfectMatching::from_partners(p_.k(), partner_))) stopped_ = true;
            return;
        }
        const std::vector<int>& group = groups_[g];
        const int m = static_cast<int>(group.size());
        std::vector<int> order(group.begin() + 1, group.end());
        do {
            for (std::uint32_t flips = 0; flips < (1u << (m - 1)); ++flips) {
                const int x0 = edges_[static_cast<std::size_t>(group[0])].first;
                int y = edges_[static_cast<std::size_t>(group[0])].second;
                for (int j = 0; j < m - 1; ++j) {
                    auto [a, b] = edges_[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
                    if (flips >> j & 1u) std::swap(a, b);
                    link(y, a);
                    y = b;
                }
                link(y, x0);
                arrange(g + 1);
                if (stopped_) return;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }

    void link(int a, int b)
    {
        partner_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
        partner_[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
    }
};

} // namespace

void for_each_neighbor(const PerfectMatching& p, const IntegerPartition& shape,
                       const std::function<bool(const PerfectMatching&)>& visit)
{
    require_class_shape(p.k(), shape);
    Overlay(p, shape, visit).run();
}

std::vector<PerfectMatching> neighbors(const PerfectMatching& p, const IntegerPartition& shape)
{
    std::vector<PerfectMatching> out;
    for_each_neighbor(p, shape, [&](const PerfectMatching& q) {
        out.push_back(q);
        return true;
    });
    return out;
}

std::vector<PerfectMatching> neighbors_by_filter(const PerfectMatching& p, const IntegerPartition& shape)
{
    require_class_shape(p.k(), shape);
    const std::uint64_t code = partition_code(half_parts(shape));
    std::vector<PerfectMatching> out;
    for_each_matching(p.k(), [&](const PerfectMatching& q) {
        if (union_shape_code(p, q) == code) out.push_back(q);
        return true;
    });
    return out;
}

Integer class_degree_formula(int k, const IntegerPartition& shape)
{
    require_class_shape(k, shape);
    Integer denom = 1;
    std::map<int, int> mult;
    for (int h : half_parts(shape)) {
        denom *= h;
        ++mult[h];
    }
    for (auto [h, c] : mult) denom *= factorial(c);
    Integer num = factorial(k) * power(2, static_cast<unsigned long>(k - static_cast<int>(shape.length())));
    return num / denom;
}

Integer class_degree(int k, const IntegerPartition& shape)
{
    require_class_shape(k, shape);
    // Counting by generation stays cheap up to k = 8 (largest class 5,040,000).
    if (k > 8) return class_degree_formula(k, shape);
    std::vector<PerfectMatching::Edge> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    const PerfectMatching p(k, edges);
    std::uint64_t count = 0;
    for_each_neighbor(p, shape, [&](const PerfectMatching&) {
        ++count;
        return true;
    });
    return Integer(static_cast<unsigned long>(count));
}

std::vector<SchemeClass> scheme_classes(int k)
{
    std::vector<SchemeClass> out;
    for (auto& shape : even_partitions(2 * k)) out.push_back({shape, class_degree(k, shape)});
    return out;
}

DerangementGraph mt_adjacency(int k, int t)
{
    if (t < 1 || t > k) throw domain_error("t must be in 1..k");
    DerangementGraph g;
    g.k = k;
    g.t = t;
    g.degree = 0;
    for (auto& shape : even_partitions(2 * k)) {
        if (shape.count(2) <= t - 1) {
            g.classes.push_back(shape);
            g.degree += class_degree(k, shape);
        }
    }
    return g;
}

DenseScheme::DenseScheme(int k) : k_(k)
{
    if (k < 1 || k > kDenseCap) throw capacity_error("dense scheme is capped at k = " + std::to_string(kDenseCap));
    classes_ = scheme_classes(k);
    matchings_ = enumerate_matchings(k);
    n_ = matchings_.size();
    std::vector<std::uint64_t> codes;
    for (auto& c : classes_) codes.push_back(partition_code(half_parts(c.shape)));
    pair_class_ = kernels::parallel::pair_class_matrix(matchings_, kernels::ClassCodeIndex(codes));
}

std::size_t DenseScheme::class_index(const IntegerPartition& shape) const
{
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].shape == shape) return i;
    throw domain_error(shape.to_string() + " is not a class at k = " + std::to_string(k_));
}

std::vector<std::uint8_t> DenseScheme::class_matrix(std::size_t c) const
{
    std::vector<std::uint8_t> m(pair_class_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = pair_class_[i] == c ? 1 : 0;
    return m;
}

BoseMesnerReport bose_mesner_checks(int k)
{
    if (k < 1 || k > 4) throw capacity_error("Bose-Mesner checks run for k <= 4");
    const DenseScheme s(k);
    const std::size_t n = s.vertex_count();
    const std::size_t r = s.classes().size();
    BoseMesnerReport rep;
    rep.k = k;
    auto name = [&](std::size_t c) { return "A" + s.classes()[c].shape.to_string(); };
    auto fail = [&](std::string what, std::string a, std::string b) {
        rep.passed = false;
        rep.failures.push_back({std::move(what), std::move(a), std::move(b)});
    };

    std::vector<std::vector<std::uint8_t>> a;
    for (std::size_t c = 0; c < r; ++c) a.push_back(s.class_matrix(c));

    rep.checks.push_back("schur_orthogonality");
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t d = c + 1; d < r; ++d)
            for (std::size_t i = 0; i < n * n; ++i)
                if (a[c][i] && a[d][i]) {
                    fail("schur_orthogonality", name(c), name(d));
                    break;
                }

    rep.checks.push_back("sum_is_all_ones");
    for (std::size_t i = 0; i < n * n; ++i) {
        int total = 0;
        for (std::size_t c = 0; c < r; ++c) total += a[c][i];
        if (total != 1) {
            fail("sum_is_all_ones", "entry", std::to_string(i / n) + "," + std::to_string(i % n));
            break;
        }
    }

    rep.checks.push_back("identity_class");
    const std::size_t id = s.class_index(identity_shape(k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a[id][i * n + j] != (i == j ? 1 : 0)) {
                fail("identity_class", name(id), "I");
                i = n;
                break;
            }

    rep.checks.push_back("symmetric");
    rep.checks.push_back("constant_row_sums");
    for (std::size_t c = 0; c < r; ++c) {
        bool sym = true, rows = true;
        for (std::size_t i = 0; i < n; ++i) {
            unsigned long sum = 0;
            for (std::size_t j = 0; j < n; ++j) {
                sum += a[c][i * n + j];
                if (a[c][i * n + j] != a[c][j * n + i]) sym = false;
            }
            if (Integer(sum) != s.classes()[c].degree) rows = false;
        }
        if (!sym) fail("symmetric", name(c), name(c) + "^T");
        if (!rows) fail("constant_row_sums", name(c), "degree " + to_string(s.classes()[c].degree));
    }

    rep.checks.push_back("commute");
    rep.checks.push_back("closed_under_product");
    auto product = [&](std::size_t c, std::size_t d) {
        std::vector<int> out(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (a[c][i * n + l])
                    for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a[d][l * n + j];
        return out;
    };
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t d = c; d < r; ++d) {
            const auto cd = product(c, d);
            if (c != d && cd != product(d, c)) fail("commute", name(c), name(d));
            // A_c A_d must be constant on every class
            std::vector<int> value(r, -1);
            for (std::size_t i = 0; i < n * n; ++i) {
                int& v = value[s.pair_classes()[i]];
                if (v < 0) v = cd[i];
                else if (v != cd[i]) {
                    fail("closed_under_product", name(c), name(d));
                    break;
                }
            }
        }
    return rep;
}

} // namespace pmscheme
