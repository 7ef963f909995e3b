#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace pmscheme {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms with q > 0; integers keep the "/1".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p/q" or "p". Throws domain_error on malformed input or q == 0.
Rational parse_rational(const std::string& text);

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer binomial(long n, long k);
Integer factorial(long n);
Integer power(long base, unsigned long exp);

} // namespace pmscheme
