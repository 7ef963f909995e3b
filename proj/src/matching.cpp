#include "pmscheme/matching.hpp"

#include "pmscheme/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace pmscheme {

namespace {

constexpr std::uint8_t kUnset = 0xff;

void require_k(int k)
{
    if (k < 1 || 2 * k > kMaxVertices)
        throw domain_error("k must be in 1.." + std::to_string(kMaxVertices / 2) + ", got " + std::to_string(k));
}

} // namespace

PerfectMatching::PerfectMatching(int k, const std::vector<Edge>& edges) : k_(k)
{
    require_k(k);
    partner_.fill(kUnset);
    if (edges.size() != static_cast<std::size_t>(k))
        throw domain_error("a perfect matching of K_" + std::to_string(2 * k) + " needs " + std::to_string(k) +
                           " edges");
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= 2 * k || b >= 2 * k || a == b)
            throw domain_error("edge endpoint out of range");
        if (partner_[a] != kUnset || partner_[b] != kUnset) throw domain_error("edges are not disjoint");
        partner_[a] = static_cast<std::uint8_t>(b);
        partner_[b] = static_cast<std::uint8_t>(a);
    }
}

PerfectMatching PerfectMatching::from_partners(int k, const std::array<std::uint8_t, kMaxVertices>& partner)
{
    PerfectMatching m;
    m.k_ = k;
    m.partner_ = partner;
    return m;
}

PerfectMatching PerfectMatching::parse(const std::string& text)
{
    std::vector<Edge> edges;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw domain_error("malformed edge '" + item + "'");
        try {
            edges.emplace_back(std::stoi(item.substr(0, dash)) - 1, std::stoi(item.substr(dash + 1)) - 1);
        } catch (const std::exception&) {
            throw domain_error("malformed edge '" + item + "'");
        }
    }
    return PerfectMatching(static_cast<int>(edges.size()), edges);
}

std::vector<PerfectMatching::Edge> PerfectMatching::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(k_));
    for (int v = 0; v < 2 * k_; ++v)
        if (partner(v) > v) out.emplace_back(v, partner(v));
    return out;
}

std::string PerfectMatching::to_string() const
{
    std::string s;
    for (auto [a, b] : edges()) {
        if (!s.empty()) s += ",";
        s += std::to_string(a + 1) + "-" + std::to_string(b + 1);
    }
    return s;
}

bool PerfectMatching::operator==(const PerfectMatching& other) const noexcept
{
    if (k_ != other.k_) return false;
    return std::equal(partner_.begin(), partner_.begin() + 2 * k_, other.partner_.begin());
}

bool PerfectMatching::operator<(const PerfectMatching& other) const noexcept
{
    if (k_ != other.k_) return k_ < other.k_;
    return std::lexicographical_compare(partner_.begin(), partner_.begin() + 2 * k_, other.partner_.begin(),
                                        other.partner_.begin() + 2 * k_);
}

void for_each_matching(int k, const std::function<bool(const PerfectMatching&)>& visit)
{
    require_k(k);
    if (k > kEnumerationCap)
        throw capacity_error("enumeration is capped at k = " + std::to_string(kEnumerationCap));
    const int n = 2 * k;
    std::array<std::uint8_t, kMaxVertices> partner;
    partner.fill(kUnset);
    // Explicit stack: at depth d, first[d] is the smallest free vertex and
    // next[d] the candidate partner to try next.
    std::array<int, kMaxVertices / 2 + 1> first{}, chosen{};
    int depth = 0;
    auto smallest_free = [&] {
        for (int v = 0; v < n; ++v)
            if (partner[v] == kUnset) return v;
        return n;
    };
    first[0] = smallest_free();
    chosen[0] = first[0];
    for (;;) {
        // advance the choice at this depth
        int a = first[depth];
        int b = chosen[depth];
        if (b != a && partner[b] == a) {
            partner[a] = partner[b] = kUnset;
        }
        ++b;
        while (b < n && partner[b] != kUnset) ++b;
        if (b >= n) {
            if (depth == 0) return;
            --depth;
            continue;
        }
        chosen[depth] = b;
        partner[a] = static_cast<std::uint8_t>(b);
        partner[b] = static_cast<std::uint8_t>(a);
        if (depth + 1 == k) {
            if (!visit(PerfectMatching::from_partners(k, partner))) return;
            continue;
        }
        ++depth;
        first[depth] = smallest_free();
        chosen[depth] = first[depth];
    }
}

std::vector<PerfectMatching> enumerate_matchings(int k)
{
    std::vector<PerfectMatching> out;
    if (k <= 16 && k >= 1 && k <= kEnumerationCap) out.reserve(matching_count(k).get_ui());
    for_each_matching(k, [&](const PerfectMatching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

Integer matching_count(int k)
{
    if (k < 0) throw domain_error("negative k");
    return double_factorial(2 * k - 1);
}

std::uint64_t matching_rank(const PerfectMatching& p)
{
    const int k = p.k();
    const int n = 2 * k;
    std::uint32_t used = 0;
    std::uint64_t rank = 0;
    for (int step = 0; step < k; ++step) {
        int a = std::countr_one(used);
        int b = p.partner(a);
        // position of b among the free vertices greater than a
        int c = 0;
        for (int w = a + 1; w < b; ++w)
            if (!(used >> w & 1u)) ++c;
        rank += static_cast<std::uint64_t>(c) * double_factorial(n - 2 * step - 3).get_ui();
        used |= (1u << a) | (1u << b);
    }
    return rank;
}

PerfectMatching matching_unrank(int k, std::uint64_t index)
{
    require_k(k);
    if (Integer(static_cast<unsigned long>(index)) >= matching_count(k))
        throw domain_error("matching index " + std::to_string(index) + " out of range");
    const int n = 2 * k;
    std::uint32_t used = 0;
    std::array<std::uint8_t, kMaxVertices> partner;
    partner.fill(kUnset);
    for (int step = 0; step < k; ++step) {
        const std::uint64_t block = double_factorial(n - 2 * step - 3).get_ui();
        int c = static_cast<int>(index / block);
        index %= block;
        int a = std::countr_one(used);
        int b = a + 1;
        for (;; ++b) {
            if (used >> b & 1u) continue;
            if (c-- == 0) break;
        }
        partner[a] = static_cast<std::uint8_t>(b);
        partner[b] = static_cast<std::uint8_t>(a);
        used |= (1u << a) | (1u << b);
    }
    return PerfectMatching::from_partners(k, partner);
}

std::uint64_t union_shape_code(const PerfectMatching& p, const PerfectMatching& q) noexcept
{
    const int n = p.vertices();
    std::uint32_t seen = 0;
    std::array<int, kMaxVertices / 2> halves{};
    int count = 0;
    for (int v = 0; v < n; ++v) {
        if (seen >> v & 1u) continue;
        int len = 0;
        int cur = v;
        do {
            const int w = p.partner(cur);
            seen |= (1u << cur) | (1u << w);
            ++len;
            cur = q.partner(w);
        } while (cur != v);
        halves[static_cast<std::size_t>(count++)] = len;
    }
    std::sort(halves.begin(), halves.begin() + count, std::greater<>());
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < count; ++i) {
        code |= ((std::uint64_t{1} << halves[static_cast<std::size_t>(i)]) - 1) << bit;
        bit += halves[static_cast<std::size_t>(i)] + 1;
    }
    return code;
}

IntegerPartition union_shape(const PerfectMatching& p, const PerfectMatching& q)
{
    if (p.k() != q.k()) throw domain_error("union_shape of matchings on different vertex sets");
    const IntegerPartition halves = partition_from_code(union_shape_code(p, q));
    std::vector<int> parts;
    for (int h : halves.parts()) parts.push_back(2 * h);
    return IntegerPartition(std::move(parts));
}

int intersection_size(const PerfectMatching& p, const PerfectMatching& q)
{
    if (p.k() != q.k()) throw domain_error("intersection_size of matchings on different vertex sets");
    int shared = 0;
    for (int v = 0; v < p.vertices(); ++v)
        if (p.partner(v) > v && q.partner(v) == p.partner(v)) ++shared;
    return shared;
}

PerfectMatching permute(const PerfectMatching& p, const std::vector<int>& perm)
{
    std::array<std::uint8_t, kMaxVertices> partner;
    partner.fill(kUnset);
    for (int v = 0; v < p.vertices(); ++v)
        partner[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
            static_cast<std::uint8_t>(perm[static_cast<std::size_t>(p.partner(v))]);
    return PerfectMatching::from_partners(p.k(), partner);
}

} // namespace pmscheme
