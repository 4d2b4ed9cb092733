#pragma once

#include <gmpxx.h>

#include <string>

namespace transversal {

/// Exact rational scalar. GMP keeps gcd(|num|, den) = 1 and den >= 1
/// after canonicalize(), which every constructor below guarantees.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Accepts "n", "-n" or "n/d" with d > 0 after canonicalization.
Rational rational_from_string(const std::string& text);

std::string rational_to_string(const Rational& r);

inline bool is_zero(const Rational& r)
{
    return sgn(r) == 0;
}

}  // namespace transversal
