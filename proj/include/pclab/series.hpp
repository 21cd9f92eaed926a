#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pclab/coeff.hpp"

namespace pclab {

/*
 * Truncated formal power series in q over exact integers.  A series of
 * precision N carries the coefficients of q^0 .. q^{N-1}; everything beyond
 * is unknown, not zero.  All operations are pure; values are freely shared
 * between threads.
 *
 * Binary operations truncate to the shorter operand.  Mixed-precision
 * operands trip an assert in debug builds, so internal code truncates
 * explicitly before combining.
 */
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t precision);

    static TruncatedSeries one(std::size_t precision);
    static TruncatedSeries monomial(std::size_t exponent, std::size_t precision);

    std::size_t precision() const noexcept { return coeffs_.size(); }
    const Coefficient& operator[](std::size_t n) const { return coeffs_[n]; }
    Coefficient& coeff(std::size_t n) { return coeffs_[n]; }
    const std::vector<Coefficient>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;

private:
    std::vector<Coefficient> coeffs_;
};

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries neg(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, const Coefficient& c);

// Cauchy product, schoolbook.  Within the library every series stays small
// enough (N <= a few thousand) that this is the right tool; swap in a
// subquadratic convolution here if that ever changes.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse.  Requires constant term +1 or -1.
TruncatedSeries inverse(const TruncatedSeries& a);

// a^e; negative e inverts once and then raises to -e.
TruncatedSeries power(const TruncatedSeries& a, long e);

// First n coefficients (n <= precision).
TruncatedSeries truncated(const TruncatedSeries& a, std::size_t n);

// Multiplication by q^e; precision grows to N + e.
TruncatedSeries shift(const TruncatedSeries& a, std::size_t e);

// Coefficients along the progression an + b: result[n] = a[b + step*n].
// Result precision is ceil((N - b) / step); b must lie below N.
TruncatedSeries extract_progression(const TruncatedSeries& s, std::size_t step,
                                    std::size_t b);

// Keeps coefficients at exponents divisible by 7, zeroes the rest.
TruncatedSeries huff7(const TruncatedSeries& s);

// q -> q^m; precision grows to N * m (the gaps are known zeroes).
TruncatedSeries substitute_power(const TruncatedSeries& s, std::size_t m);

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

// Index of the first differing coefficient over the shared precision.
std::optional<std::size_t> first_difference(const TruncatedSeries& a,
                                            const TruncatedSeries& b);

// "1 - q - q^2 + q^5 + ..." for diagnostics; prints at most max_terms.
std::string to_string(const TruncatedSeries& s, std::size_t max_terms = 12);

}  // namespace pclab
