#include "pmscheme/closed_forms.hpp"

#include "pmscheme/errors.hpp"

#include <initializer_list>

namespace pmscheme::closed_forms {

namespace {

Rational df(long m) { return Rational(double_factorial(m)); }

Rational q(long num, long den = 1) { return make_rational(num, den); }

// Polynomial in k with rational coefficients, highest degree first.
Rational poly(int k, std::initializer_list<Rational> coeffs)
{
    Rational r = 0;
    for (const auto& c : coeffs) r = r * k + c;
    return r;
}

RationalMatrix rows(std::initializer_list<std::initializer_list<Rational>> data)
{
    const std::size_t n = data.size();
    RationalMatrix m(n, data.begin()->size());
    std::size_t i = 0;
    for (const auto& row : data) {
        std::size_t j = 0;
        for (const auto& x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

int index_of(int k, const IntegerPartition& p)
{
    const std::vector<IntegerPartition> order{two_row(2 * k, 0), two_row(2 * k - 2, 2), two_row(2 * k - 4, 4),
                                              IntegerPartition{2 * k - 4, 2, 2}, two_row(2 * k - 6, 6)};
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == p) return static_cast<int>(i);
    return -1;
}

} // namespace

std::optional<Rational> table_entry(int k, const IntegerPartition& module, const IntegerPartition& cls)
{
    if (k < 6) return std::nullopt;
    const int m = index_of(k, module);
    const int c = index_of(k, cls);
    if (m < 0 || c < 0) return std::nullopt;
    const Rational K(k);
    const Rational dd = df(2 * k);
    switch (m) {
    case 0:
        switch (c) {
        case 0: return dd / (2 * K);
        case 1: return dd / (2 * (2 * K - 2));
        case 2: return dd / (4 * (2 * K - 4));
        case 3: return dd / (8 * (2 * K - 4));
        case 4: return dd / (6 * (2 * K - 6));
        }
        break;
    case 1:
        switch (c) {
        case 0: return -df(2 * k - 4);
        case 1: return df(2 * k - 4) / 2;
        case 2: return -2 * K * df(2 * k - 6) / 4;
        case 4: return -2 * K * df(2 * k - 4) / (6 * (2 * K - 6));
        }
        break;
    case 2:
        switch (c) {
        case 0: return -df(2 * k - 6);
        case 1: return -(5 * K - 12) * df(2 * k - 8);
        case 2: return (7 * K - 15) * df(2 * k - 8) / 2;
        case 4: return -2 * K * df(2 * k - 6) / (6 * (2 * K - 6));
        }
        break;
    case 3:
        switch (c) {
        case 0: return 2 * df(2 * k - 6);
        case 1: return -df(2 * k - 6);
        case 2: return -df(2 * k - 6) / 2;
        case 4: return 4 * K * df(2 * k - 6) / (6 * (2 * K - 6));
        }
        break;
    case 4:
        switch (c) {
        case 0: return -3 * df(2 * k - 8);
        case 1: return -3 * (3 * K - 10) * df(2 * k - 10);
        case 2: return -3 * poly(k, {9, -71, 140}) * df(2 * k - 12);
        case 4: return 6 * poly(k, {5, -38, 70}) * df(2 * k - 12);
        }
        break;
    }
    return std::nullopt;
}

RationalMatrix weight_system(int k)
{
    const Rational K(k);
    return rows({
        {-df(2 * k - 4), (K - 2) * df(2 * k - 6), -K * (K - 3) * df(2 * k - 8)},
        {-df(2 * k - 6), -(5 * K - 12) * df(2 * k - 8), q(1, 2) * (7 * K - 15) * df(2 * k - 8)},
        {2 * df(2 * k - 6), -df(2 * k - 6), -q(1, 2) * df(2 * k - 6)},
    });
}

std::vector<QuotientFixture> quotient_fixtures(int k)
{
    if (k < 6) throw domain_error("the printed quotient formulas are used for k >= 6");
    const Rational K(k);
    auto d = [&](long shift) { return df(2 * k - shift); };
    auto P = [&](std::initializer_list<Rational> c) { return poly(k, c); };
    const IntegerPartition c0 = two_row(2 * k, 0), c1 = two_row(2 * k - 2, 2), c2 = two_row(2 * k - 4, 4),
                           c3 = two_row(2 * k - 6, 6), s22{2 * k - 4, 2, 2};

    std::vector<QuotientFixture> out;
    out.push_back({"X[2k]/[2k-2,2]", c0, c1,
                   rows({{0, d(2)}, {d(4), (2 * K - 3) * d(4)}})});
    out.push_back({"X[2k-2,2]/[2k-2,2]", c1, c1,
                   rows({{d(4), (K - 1) * d(4)}, {q(1, 2) * d(4), q(1, 2) * (2 * K - 1) * d(4)}})});
    out.push_back({"X[2k-6,6]/[2k-2,2]", c3, c1,
                   rows({{0, d(0) / (6 * (2 * K - 6))},
                         {2 * K * d(4) / (6 * (2 * K - 6)), 2 * K * (2 * K - 3) * d(4) / (6 * (2 * K - 6))}})});
    out.push_back({"X[2k-4,4]/[2k-2,2]", c2, c1,
                   rows({{0, K * (K - 1) * d(6)}, {q(1, 2) * K * d(6), q(1, 2) * K * (2 * K - 3) * d(6)}})});

    out.push_back({"X[2k]/[2k-4,4]", c0, c2,
                   rows({{0, 4 * d(4), (2 * K - 6) * d(4)},
                         {2 * d(6), 2 * (5 * K - 12) * d(6), (2 * K - 6) * (2 * K - 5) * d(6)},
                         {3 * d(6), 6 * (2 * K - 5) * d(6), (2 * K - 7) * (2 * K - 5) * d(6)}})});
    out.push_back({"X[2k-2,2]/[2k-4,4]", c1, c2,
                   rows({{0, 4 * d(4), (K - 4) * d(4)},
                         {2 * d(6), (7 * K - 18) * d(6), P({2, -11, 16}) * d(6)},
                         {3 * (K - 4) * d(8), 6 * P({2, -11, 16}) * d(8), P({2, -9, 12}) * (2 * K - 7) * d(8)}})});
    out.push_back({"X[2k-4,4]/[2k-4,4]", c2, c2,
                   rows({{2 * d(6), d(4), (K - 1) * (K - 2) * d(6)},
                         {q(1, 2) * d(6), q(1, 2) * (5 * K - 2) * d(6), q(1, 2) * P({2, -7, 1}) * d(6)},
                         {q(3, 2) * (K - 1) * d(8), 3 * P({2, -7, 1}) * d(8),
                          P({2, -14, q(51, 2), q(-3, 2)}) * d(8)}})});

    out.push_back({"X[2k]/[2k-6,6]", c0, c3,
                   rows({{0, 24 * d(6), 12 * (2 * K - 8) * d(6), (2 * K - 8) * (2 * K - 10) * d(6)},
                         {8 * d(8), 8 * (8 * K - 27) * d(8), 2 * (13 * K - 45) * (2 * K - 8) * d(8),
                          (2 * K - 7) * (2 * K - 8) * (2 * K - 10) * d(8)},
                         {12 * d(8), 6 * (13 * K - 45) * d(8), 4 * (7 * K - 30) * (2 * K - 7) * d(8),
                          (2 * K - 7) * (2 * K - 9) * (2 * K - 10) * d(8)},
                         {15 * d(8), 45 * (2 * K - 7) * d(8), 15 * (2 * K - 7) * (2 * K - 9) * d(8),
                          (2 * K - 7) * (2 * K - 9) * (2 * K - 11) * d(8)}})});
    // The leading coefficient of the last diagonal entry is printed as "8^4";
    // 8k^4 is the value consistent with the row sum.
    out.push_back({"X[2k-2,2]/[2k-6,6]", c1, c3,
                   rows({{0, 24 * d(6), 6 * (3 * K - 14) * d(6), (K - 5) * (2 * K - 12) * d(6)},
                         {8 * d(8), 4 * (13 * K - 48) * d(8), P({34, -274, 564}) * d(8),
                          2 * P({2, -27, 123, -190}) * d(8)},
                         {6 * (3 * K - 14) * d(10), 6 * P({17, -137, 282}) * d(10),
                          2 * P({32, -390, 1627, -2334}) * d(10), P({8, -136, 886, -2642, 3060}) * d(10)},
                         {15 * (K - 6) * d(10), 45 * P({2, -17, 38}) * d(10), 15 * P({4, -48, 203, -306}) * d(10),
                          P({8, -132, 838, -2487, 2970}) * d(10)}})});
    out.push_back({"X[2k-4,4]/[2k-6,6]", c2, c3,
                   rows({{0, 12 * d(6), 3 * (2 * K - 8) * d(6), P({1, -7, 12}) * d(6)},
                         {4 * d(8), 10 * d(6), P({13, -79, 108}) * d(8), P({2, -21, 65, -52}) * d(8)},
                         {3 * d(8), 3 * P({13, -79, 108}) * d(10), P({28, -274, 792, -576}) * d(10),
                          P({4, -60, 311, -609, 276}) * d(10)},
                         {15 * P({1, -7, 12}) * d(12), 45 * P({2, -21, 65, -52}) * d(12),
                          15 * P({4, -60, 311, -609, 276}) * d(12),
                          P({8, -164, 1282, -4591, 6795, -1980}) * d(12)}})});
    out.push_back({"X[2k-6,6]/[2k-6,6]", c3, c3,
                   rows({{8 * d(8), 4 * d(6), 2 * (2 * K - 2) * d(6), q(2, 3) * P({1, -6, 2}) * d(6)},
                         {q(4, 3) * d(8), P({q(32, 3), -4}) * d(8), P({q(26, 3), q(-116, 3), 4}) * d(8),
                          P({q(4, 3), q(-38, 3), q(92, 3), q(-4, 3)}) * d(8)},
                         {2 * (2 * K - 2) * d(10), P({26, -116, 12}) * d(10),
                          P({q(56, 3), -164, q(1108, 3), -12}) * d(10),
                          P({q(8, 3), q(-112, 3), q(526, 3), q(-836, 3), 4}) * d(10)},
                         {10 * P({1, -6, 2}) * d(12), 60 * P({1, q(-19, 2), 23, -1}) * d(12),
                          40 * P({1, -14, q(263, 4), q(-209, 2), q(3, 2)}) * d(12),
                          P({q(16, 3), -104, q(2284, 3), -2486, q(9220, 3), -20}) * d(12)}})});

    out.push_back({"X[2k]/[2k-4,2,2]", c0, s22,
                   rows({{0, 0, 0, 0, 4 * d(4), (2 * K - 6) * d(4)},
                         {0, 0, d(4), 2 * d(6), 4 * (2 * K - 5) * d(6), (2 * K - 5) * (2 * K - 6) * d(6)},
                         {0, d(4), 0, 2 * d(6), 4 * (2 * K - 5) * d(6), (2 * K - 5) * (2 * K - 6) * d(6)},
                         {0, d(4), d(4), 0, 2 * d(4), (2 * K - 6) * d(4)},
                         {d(6), (2 * K - 5) * d(6), (2 * K - 5) * d(6), d(6), (6 * K - 14) * d(6),
                          (2 * K - 5) * (2 * K - 6) * d(6)},
                         {d(6), (2 * K - 5) * d(6), (2 * K - 5) * d(6), 2 * d(6), 4 * (2 * K - 5) * d(6),
                          (2 * K - 5) * (2 * K - 7) * d(6)}})});
    out.push_back({"X[2k-2,2]/[2k-4,2,2]", c1, s22,
                   rows({{0, d(4), d(4), 0, 2 * d(4), (K - 4) * d(4)},
                         {d(6), (2 * K - 5) * d(6), (K - 3) * d(6), d(6), 2 * (2 * K - 5) * d(6),
                          P({2, -11, 16}) * d(6)},
                         {d(6), (K - 3) * d(6), (2 * K - 5) * d(6), d(6), 2 * (2 * K - 5) * d(6),
                          P({2, -11, 16}) * d(6)},
                         {0, q(1, 2) * d(4), q(1, 2) * d(4), 0, 3 * d(4), (K - 4) * d(4)},
                         {q(1, 2) * d(6), q(1, 2) * (2 * K - 5) * d(6), q(1, 2) * (2 * K - 5) * d(6),
                          q(3, 2) * d(6), (5 * K - 13) * d(6), P({2, -11, 16}) * d(6)},
                         {(K - 4) * d(8), P({2, -11, 16}) * d(8), P({2, -11, 16}) * d(8), (2 * K - 8) * d(8),
                          4 * P({2, -11, 16}) * d(8), P({2, -9, 12}) * (2 * K - 7) * d(8)}})});
    out.push_back({"X[2k-4,4]/[2k-4,2,2]", c2, s22,
                   rows({{0, 0, 0, 2 * d(6), d(4), q(1, 4) * d(2)},
                         {0, 0, q(1, 2) * K * d(6), q(1, 2) * d(6), (2 * K - 1) * d(6), q(1, 2) * P({2, -7, 1}) * d(6)},
                         {0, q(1, 2) * K * d(6), 0, q(1, 2) * d(6), (2 * K - 1) * d(6), q(1, 2) * P({2, -7, 1}) * d(6)},
                         {d(6), q(1, 4) * d(4), q(1, 4) * d(4), d(6), q(1, 2) * d(4), q(1, 4) * d(2)},
                         {q(1, 4) * d(6), q(1, 4) * (2 * K - 1) * d(6), q(1, 4) * (2 * K - 1) * d(6), q(1, 4) * d(6),
                          q(1, 2) * (3 * K - 1) * d(6), q(1, 2) * P({2, -7, 1}) * d(6)},
                         {q(1, 2) * (K - 1) * d(8), q(1, 2) * P({2, -7, 1}) * d(8), q(1, 2) * P({2, -7, 1}) * d(8),
                          (K - 1) * d(8), 2 * P({2, -7, 1}) * d(8), P({2, -14, q(51, 2), q(-3, 2)}) * d(8)}})});
    return out;
}

} // namespace pmscheme::closed_forms
