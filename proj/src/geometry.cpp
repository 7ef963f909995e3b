#include "pmscheme/geometry.hpp"

#include "pmscheme/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace pmscheme {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
        if (e & 1u) r = r * b % p;
    return static_cast<std::uint32_t>(r);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inverse_mod(m.back(), p);
    while (a.size() > dm) {
        const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
        trim(a);
    }
    return a;
}

Poly poly_from_index(std::uint64_t index, std::uint32_t p, std::uint32_t len)
{
    Poly out(len);
    for (auto& c : out) {
        c = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return out;
}

bool irreducible(const Poly& f, std::uint32_t p)
{
    const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
    if (m <= 1) return true;
    for (std::uint32_t deg = 1; deg <= m / 2; ++deg) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g = poly_from_index(idx, p, deg);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t m) : p_(p), m_(m), q_(1)
{
    if (m == 0 || p < 2) throw domain_error("field needs a prime p and degree m >= 1");
    const auto pp = prime_power(p);
    if (!pp || pp->second != 1) throw domain_error(std::to_string(p) + " is not prime");
    for (std::uint32_t i = 0; i < m; ++i) {
        if (std::uint64_t{q_} * p > kFieldCap) throw capacity_error("field size exceeds 2^20");
        q_ *= p;
    }
    for (std::uint64_t idx = 0; idx < q_; ++idx) {
        Poly f = poly_from_index(idx, p, m);
        f.push_back(1);
        if (irreducible(f, p)) {
            modulus_ = std::move(f);
            break;
        }
    }

    // Tables are built from mul_slow, so alpha_ search uses it directly.
    const std::uint64_t group = q_ - 1;
    const auto factors = prime_factors(group);
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = 1;
        for (; e; e >>= 1, a = mul_slow(a, a))
            if (e & 1u) r = mul_slow(r, a);
        return r;
    };
    for (std::uint32_t g = 1; g < q_; ++g) {
        bool primitive = true;
        for (auto r : factors)
            if (slow_pow(g, group / r) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            alpha_ = g;
            break;
        }
    }
    if (alpha_ == 0) throw construction_error("no primitive element found");
    log_.assign(q_, 0);
    antilog_.assign(group, 0);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < group; ++i) {
        antilog_[i] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = mul_slow(x, alpha_);
    }
    if (x != 1) throw construction_error("primitive element has the wrong order");
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const
{
    if (p_ == 2) return a ^ b;
    std::uint32_t r = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const
{
    if (p_ == 2) return a;
    std::uint32_t r = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const
{
    if (a == 0 || b == 0) return 0;
    return antilog_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
}

std::uint32_t FiniteField::inv(std::uint32_t a) const
{
    if (a == 0) throw domain_error("zero has no inverse");
    return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const
{
    if (e == 0) return 1;
    if (a == 0) return 0;
    return antilog_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

std::uint64_t FiniteField::order(std::uint32_t a) const
{
    if (a == 0) throw domain_error("zero has no multiplicative order");
    std::uint64_t ord = q_ - 1;
    for (auto r : prime_factors(q_ - 1))
        while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
    return ord;
}

std::uint32_t FiniteField::mul_slow(std::uint32_t a, std::uint32_t b) const
{
    const Poly pa = poly_from_index(a, p_, m_), pb = poly_from_index(b, p_, m_);
    Poly prod(2 * m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
    const Poly r = poly_mod(prod, modulus_, p_);
    std::uint32_t out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
    return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t n)
{
    if (n < 2) return std::nullopt;
    std::uint32_t p = n;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    std::uint32_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) return std::nullopt;
    return std::make_pair(p, e);
}

DifferenceSet singer_difference_set(std::uint32_t n, std::uint32_t d)
{
    const auto pp = prime_power(n);
    if (!pp) throw domain_error(std::to_string(n) + " is not a prime power");
    if (d < 1) throw domain_error("d must be positive");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i <= d; ++i) {
        size *= n;
        if (size > kFieldCap) throw capacity_error("field size n^(d+1) exceeds 2^20");
    }
    const FiniteField f(pp->first, pp->second * (d + 1));
    DifferenceSet ds;
    ds.n = n;
    ds.d = d;
    ds.v = static_cast<std::uint32_t>((size - 1) / (n - 1));
    for (std::uint32_t i = 0; i < ds.v; ++i) {
        const std::uint32_t x = f.exp(i);
        std::uint32_t tr = 0, y = x;
        for (std::uint32_t j = 0; j <= d; ++j) {
            tr = f.add(tr, y);
            y = f.pow(y, n);
        }
        if (tr == 0) ds.elements.push_back(i);
    }
    std::uint64_t nd = 1;
    for (std::uint32_t i = 0; i < d; ++i) nd *= n;
    std::uint64_t nd1 = nd / n;
    ds.lambda = static_cast<std::uint32_t>((nd1 - 1) / (n - 1));
    if (ds.elements.size() != (nd - 1) / (n - 1))
        throw construction_error("trace-zero set has " + std::to_string(ds.elements.size()) + " elements");
    const auto counts = difference_counts(ds);
    for (std::uint32_t g = 1; g < ds.v; ++g)
        if (counts[g] != ds.lambda)
            throw construction_error("difference " + std::to_string(g) + " occurs " + std::to_string(counts[g]) +
                                     " times, expected " + std::to_string(ds.lambda));
    return ds;
}

std::vector<std::uint32_t> difference_counts(const DifferenceSet& ds)
{
    std::vector<std::uint32_t> counts(ds.v, 0);
    for (auto a : ds.elements)
        for (auto b : ds.elements)
            if (a != b) ++counts[(a + ds.v - b) % ds.v];
    return counts;
}

ProjectivePlane develop_plane(const DifferenceSet& ds)
{
    const auto counts = difference_counts(ds);
    for (std::uint32_t g = 1; g < ds.v; ++g)
        if (counts[g] != 1) throw domain_error("developing a plane needs a difference set with lambda = 1");
    ProjectivePlane plane;
    plane.order = ds.n;
    plane.v = ds.v;
    plane.lines_through.assign(ds.v, {});
    for (std::uint32_t x = 0; x < ds.v; ++x) {
        std::vector<std::uint32_t> line;
        for (auto e : ds.elements) line.push_back((e + x) % ds.v);
        std::sort(line.begin(), line.end());
        for (auto pt : line) plane.lines_through[pt].push_back(x);
        plane.lines.push_back(std::move(line));
    }

    auto meet = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out.size();
    };
    // Lines through two points = intersection of their sorted line lists.
    auto check_pair = [&](std::uint32_t a, std::uint32_t b) {
        if (meet(plane.lines_through[a], plane.lines_through[b]) != 1)
            throw construction_error("points " + std::to_string(a) + ", " + std::to_string(b) +
                                     " do not lie on a unique line");
        if (meet(plane.lines[a], plane.lines[b]) != 1)
            throw construction_error("lines " + std::to_string(a) + ", " + std::to_string(b) +
                                     " do not meet in a unique point");
    };
    plane.exhaustive = ds.v <= 100;
    if (plane.exhaustive) {
        for (std::uint32_t a = 0; a < ds.v; ++a)
            for (std::uint32_t b = a + 1; b < ds.v; ++b) check_pair(a, b);
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::uint32_t> pick(0, ds.v - 1);
        for (int i = 0; i < 10000; ++i) {
            const auto a = pick(rng), b = pick(rng);
            if (a != b) check_pair(a, b);
        }
    }

    // (P3): four points, no three collinear; points 0, 1 and two greedy picks.
    auto collinear = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        for (auto l : plane.lines_through[a])
            if (on_line(plane, l, b) && on_line(plane, l, c)) return true;
        return false;
    };
    std::vector<std::uint32_t> quad{0, 1};
    for (std::uint32_t c = 2; c < ds.v && quad.size() < 4; ++c) {
        bool ok = true;
        for (std::size_t i = 0; i < quad.size() && ok; ++i)
            for (std::size_t j = i + 1; j < quad.size() && ok; ++j)
                if (collinear(quad[i], quad[j], c)) ok = false;
        if (ok) quad.push_back(c);
    }
    if (quad.size() < 4) throw construction_error("no four points in general position");
    return plane;
}

bool on_line(const ProjectivePlane& plane, std::uint32_t line, std::uint32_t point)
{
    const auto& l = plane.lines[line];
    return std::binary_search(l.begin(), l.end(), point);
}

std::vector<std::uint32_t> negated(const DifferenceSet& ds)
{
    std::vector<std::uint32_t> out;
    for (auto e : ds.elements) out.push_back((ds.v - e) % ds.v);
    std::sort(out.begin(), out.end());
    return out;
}

OvalCheck verify_oval(const ProjectivePlane& plane, const std::vector<std::uint32_t>& oval)
{
    OvalCheck r;
    for (std::uint32_t l = 0; l < plane.lines.size(); ++l) {
        std::uint32_t meet = 0;
        for (auto pt : oval)
            if (on_line(plane, l, pt)) ++meet;
        r.max_meet = std::max(r.max_meet, meet);
        if (meet > 2 && r.is_oval) {
            r.is_oval = false;
            r.offending_line = l;
        }
    }
    return r;
}

LinesWithZeroReport lemma_lines_with_zero(const ProjectivePlane& plane, const DifferenceSet& ds)
{
    LinesWithZeroReport r;
    const auto oval = negated(ds);
    const std::set<std::uint32_t> oval_set(oval.begin(), oval.end());
    const auto& zero_lines = plane.lines_through[0];
    r.lines_through_zero = zero_lines.size();

    // (a) D + x contains 0 exactly when x = -d.
    std::set<std::uint32_t> expected;
    for (auto d : ds.elements) expected.insert((ds.v - d) % ds.v);
    if (std::set<std::uint32_t>(zero_lines.begin(), zero_lines.end()) != expected) {
        r.clause_a = false;
        r.counterexamples.push_back("lines through 0 are not the translates D - d");
    }
    // (b)
    for (std::uint32_t s = 1; s < ds.v; ++s) {
        if (oval_set.count(s)) continue;
        ++r.clause_b_points;
        std::size_t shared = 0;
        for (auto l : zero_lines)
            if (on_line(plane, l, s)) ++shared;
        if (shared != 1) {
            r.clause_b = false;
            r.counterexamples.push_back("point " + std::to_string(s) + " shares " + std::to_string(shared) +
                                        " lines with 0");
        }
    }
    // (c)
    for (auto l : zero_lines) {
        std::size_t meet = 0;
        for (auto pt : oval)
            if (on_line(plane, l, pt)) ++meet;
        if (meet != 1) {
            r.clause_c = false;
            r.counterexamples.push_back("line " + std::to_string(l) + " through 0 meets the oval in " +
                                        std::to_string(meet) + " points");
        }
    }
    return r;
}

CliqueConstruction build_clique(std::uint32_t a)
{
    if (a < 2) throw domain_error("a must be at least 2");
    if ((std::uint64_t{1} << a) + 2 > static_cast<std::uint64_t>(2 * kEnumerationCap))
        throw capacity_error("2^a + 2 exceeds the matching cap of " + std::to_string(2 * kEnumerationCap) + " vertices");
    CliqueConstruction c;
    c.a = a;
    const std::uint32_t n = 1u << a;
    c.k = static_cast<int>(n / 2 + 1);
    c.ds = singer_difference_set(n, 2);
    const auto plane = develop_plane(c.ds);
    c.oval = negated(c.ds);
    const auto oc = verify_oval(plane, c.oval);
    if (!oc.is_oval) throw construction_error("-D meets line " + std::to_string(*oc.offending_line) + " in more than 2 points");

    const std::uint32_t v = c.ds.v;
    std::vector<int> label(v, -1);
    for (std::size_t i = 0; i < c.oval.size(); ++i) label[c.oval[i]] = static_cast<int>(i);
    label[0] = 2 * c.k - 1;

    // Edge of each line meeting O: its two oval points, or its oval point and 0.
    std::vector<std::optional<PerfectMatching::Edge>> edge(v);
    for (std::uint32_t l = 0; l < v; ++l) {
        std::vector<int> pts;
        for (auto pt : plane.lines[l])
            if (label[pt] >= 0 && pt != 0) pts.push_back(label[pt]);
        if (pts.size() == 2) edge[l] = std::make_pair(std::min(pts[0], pts[1]), std::max(pts[0], pts[1]));
        else if (pts.size() == 1) {
            if (!on_line(plane, l, 0)) throw construction_error("tangent line " + std::to_string(l) + " misses 0");
            edge[l] = std::make_pair(pts[0], 2 * c.k - 1);
        }
    }

    const std::set<std::uint32_t> oval_set(c.oval.begin(), c.oval.end());
    c.size_including_zero = v - c.oval.size();
    c.size_excluding_zero = c.size_including_zero - 1;
    c.index_set_note = "s ranges over Z_v minus (O and 0): s = 0 lies on every tangent line, so its edges all "
                       "share vertex 0 and do not form a matching; " +
                       std::to_string(c.size_excluding_zero) + " matchings = (2k-1)(2k-3)";
    for (std::uint32_t s = 1; s < v; ++s) {
        if (oval_set.count(s)) continue;
        std::vector<PerfectMatching::Edge> edges;
        for (auto l : plane.lines_through[s])
            if (edge[l]) edges.push_back(*edge[l]);
        try {
            c.matchings.emplace_back(c.k, edges);
        } catch (const domain_error& e) {
            throw construction_error("point " + std::to_string(s) + " does not give a perfect matching: " + e.what());
        }
        c.sources.push_back(s);
    }
    for (std::size_t i = 0; i < c.matchings.size(); ++i)
        for (std::size_t j = i + 1; j < c.matchings.size(); ++j)
            if (intersection_size(c.matchings[i], c.matchings[j]) > 1)
                throw construction_error("matchings from s = " + std::to_string(c.sources[i]) + " and s = " +
                                         std::to_string(c.sources[j]) + " share more than one edge");
    return c;
}

} // namespace pmscheme
