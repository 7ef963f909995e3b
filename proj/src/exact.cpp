#include "pmscheme/exact.hpp"

#include "pmscheme/errors.hpp"

#include <cctype>

namespace pmscheme {

std::string to_string(const Rational& q)
{
    Rational c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw domain_error("empty rational");
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw domain_error("malformed rational '" + text + "'");
    Integer n(num[0] == '+' ? num.substr(1) : num);
    Integer d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw domain_error("zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n)
{
    if (n < 0) throw domain_error("factorial of negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer power(long base, unsigned long exp)
{
    Integer b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

} // namespace pmscheme
