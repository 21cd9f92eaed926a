#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

namespace pclab {

// Every quantity in the library is an exact integer.  No floating point,
// no rounding, anywhere.
using Coefficient = mpz_class;

// 7-adic valuation.  nullopt encodes pi(0) = +infinity.
std::optional<long> valuation7(const Coefficient& n);

// Splits a nonzero n as u * 7^e with 7 not dividing u; returns {e, u}.
std::pair<long, Coefficient> split_pow7(const Coefficient& n);

Coefficient pow7(unsigned long e);

// Renders n in the factored style of the printed tables: "82*7", "7^20",
// "5*7^13", plain decimal when 7 does not divide n, "0" for zero.
std::string factored7(const Coefficient& n);

// Inverse of a modulo m (m > 0).  Throws std::domain_error when gcd(a,m) != 1.
Coefficient mod_inverse(const Coefficient& a, const Coefficient& m);

// floor(num / den) for den > 0, correct for negative num.
long floor_div(long num, long den);

}  // namespace pclab
