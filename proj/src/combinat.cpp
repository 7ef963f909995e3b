#include "pmscheme/combinat.hpp"

#include "pmscheme/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace pmscheme {

IntegerPartition::IntegerPartition(std::initializer_list<int> parts)
    : IntegerPartition(std::vector<int>(parts))
{
}

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p <= 0) throw domain_error("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool IntegerPartition::is_even() const noexcept
{
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

int IntegerPartition::count(int value) const noexcept
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string IntegerPartition::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

IntegerPartition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(cur, &used);
        } catch (const std::exception&) {
            throw domain_error("malformed partition '" + text + "'");
        }
        if (used != cur.size()) throw domain_error("malformed partition '" + text + "'");
        parts.push_back(v);
        cur.clear();
    };
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
            cur.push_back(ch);
        } else if (ch == ',' || ch == ' ' || ch == '[' || ch == ']') {
            flush();
        } else {
            throw domain_error("malformed partition '" + text + "'");
        }
    }
    flush();
    if (parts.empty()) throw domain_error("empty partition '" + text + "'");
    return IntegerPartition(std::move(parts));
}

Integer double_factorial(long m)
{
    if (m < -1) throw domain_error("double factorial undefined below -1");
    if (m <= 0) return 1;
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<IntegerPartition>& out,
                    int step)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= step; p -= step) {
        if (p % step) continue;
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out, step);
        cur.pop_back();
    }
}

} // namespace

std::vector<IntegerPartition> partitions(int n)
{
    if (n < 0) throw domain_error("partitions of a negative number");
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    if (n == 0) return {IntegerPartition{}};
    partitions_rec(n, n, cur, out, 1);
    return out;
}

std::vector<IntegerPartition> even_partitions(int n)
{
    if (n < 2 || n % 2) throw domain_error("even_partitions needs an even n >= 2, got " + std::to_string(n));
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out, 2);
    return out;
}

bool dominance_ge(const IntegerPartition& mu, const IntegerPartition& lambda)
{
    if (mu.size() != lambda.size())
        throw domain_error("dominance between partitions of different sizes " + mu.to_string() + " and " +
                           lambda.to_string());
    int a = 0, b = 0;
    const std::size_t len = std::max(mu.length(), lambda.length());
    for (std::size_t i = 0; i < len; ++i) {
        a += i < mu.length() ? mu[i] : 0;
        b += i < lambda.length() ? lambda[i] : 0;
        if (a < b) return false;
    }
    return true;
}

IntegerPartition dual_partition(const IntegerPartition& lambda)
{
    if (lambda.length() == 0) return lambda;
    std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    return IntegerPartition(std::move(cols));
}

Integer hook_dimension(const IntegerPartition& lambda)
{
    const IntegerPartition conj = dual_partition(lambda);
    Integer hooks = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    Integer dim = factorial(lambda.size()) / hooks;
    return dim;
}

Integer f_lower_bound(int k)
{
    if (k < 4) throw domain_error("f_lower_bound needs k >= 4");
    return 2 * power(3, static_cast<unsigned long>(k));
}

IntegerPartition two_row(int first, int second)
{
    std::vector<int> parts;
    if (first > 0) parts.push_back(first);
    if (second > 0) parts.push_back(second);
    return IntegerPartition(std::move(parts));
}

std::uint64_t partition_code(const std::vector<int>& parts)
{
    std::uint64_t code = 0;
    int bit = 0;
    for (int p : parts) {
        for (int i = 0; i < p; ++i) code |= std::uint64_t{1} << bit++;
        ++bit;
    }
    return code;
}

IntegerPartition partition_from_code(std::uint64_t code)
{
    std::vector<int> parts;
    while (code) {
        int run = 0;
        while (code & 1) {
            ++run;
            code >>= 1;
        }
        parts.push_back(run);
        code >>= 1;
    }
    return IntegerPartition(std::move(parts));
}

} // namespace pmscheme
