#include "pclab/series.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace pclab {

namespace {

std::size_t common_precision(const TruncatedSeries& a, const TruncatedSeries& b)
{
    assert(a.precision() == b.precision() &&
           "mixed-precision operands; truncate explicitly");
    return std::min(a.precision(), b.precision());
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t precision) : coeffs_(precision)
{
    if (precision == 0)
        throw std::invalid_argument("TruncatedSeries: precision must be positive");
}

TruncatedSeries TruncatedSeries::one(std::size_t precision)
{
    TruncatedSeries s(precision);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t exponent, std::size_t precision)
{
    TruncatedSeries s(precision);
    if (exponent < precision)
        s.coeffs_[exponent] = 1;
    return s;
}

bool TruncatedSeries::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.precision() != b.precision())
        return false;
    return !first_difference(a, b).has_value();
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    std::size_t n = common_precision(a, b);
    TruncatedSeries r(n);
    for (std::size_t i = 0; i < n; ++i)
        r.coeff(i) = a[i] + b[i];
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b)
{
    std::size_t n = common_precision(a, b);
    TruncatedSeries r(n);
    for (std::size_t i = 0; i < n; ++i)
        r.coeff(i) = a[i] - b[i];
    return r;
}

TruncatedSeries neg(const TruncatedSeries& a)
{
    TruncatedSeries r(a.precision());
    for (std::size_t i = 0; i < a.precision(); ++i)
        r.coeff(i) = -a[i];
    return r;
}

TruncatedSeries scale(const TruncatedSeries& a, const Coefficient& c)
{
    TruncatedSeries r(a.precision());
    if (c == 0)
        return r;
    for (std::size_t i = 0; i < a.precision(); ++i)
        r.coeff(i) = a[i] * c;
    return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    std::size_t n = common_precision(a, b);
    TruncatedSeries r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        const mpz_srcptr ai = a[i].get_mpz_t();
        for (std::size_t j = 0; j + i < n; ++j) {
            if (b[j] == 0)
                continue;
            mpz_addmul(r.coeff(i + j).get_mpz_t(), ai, b[j].get_mpz_t());
        }
    }
    return r;
}

TruncatedSeries inverse(const TruncatedSeries& a)
{
    if (a[0] != 1 && a[0] != -1)
        throw std::domain_error("inverse: constant term must be +1 or -1");
    std::size_t n = a.precision();
    TruncatedSeries r(n);
    const Coefficient c0 = a[0];  // equals its own inverse
    r.coeff(0) = c0;
    Coefficient acc;
    for (std::size_t m = 1; m < n; ++m) {
        acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (a[k] == 0)
                continue;
            mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), r[m - k].get_mpz_t());
        }
        r.coeff(m) = -c0 * acc;
    }
    return r;
}

TruncatedSeries power(const TruncatedSeries& a, long e)
{
    if (e < 0)
        return power(inverse(a), -e);
    TruncatedSeries base = a;
    TruncatedSeries r = TruncatedSeries::one(a.precision());
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1)
            r = mul(r, base);
        k >>= 1;
        if (k > 0)
            base = mul(base, base);
    }
    return r;
}

TruncatedSeries truncated(const TruncatedSeries& a, std::size_t n)
{
    if (n > a.precision())
        throw std::invalid_argument("truncated: cannot extend precision");
    TruncatedSeries r(n);
    for (std::size_t i = 0; i < n; ++i)
        r.coeff(i) = a[i];
    return r;
}

TruncatedSeries shift(const TruncatedSeries& a, std::size_t e)
{
    TruncatedSeries r(a.precision() + e);
    for (std::size_t i = 0; i < a.precision(); ++i)
        r.coeff(i + e) = a[i];
    return r;
}

TruncatedSeries extract_progression(const TruncatedSeries& s, std::size_t step,
                                    std::size_t b)
{
    if (step == 0 || b >= step)
        throw std::invalid_argument("extract_progression: need 0 <= b < step");
    if (b >= s.precision())
        throw std::invalid_argument("extract_progression: residue beyond precision");
    std::size_t n = (s.precision() - b + step - 1) / step;
    TruncatedSeries r(n);
    for (std::size_t i = 0; i < n; ++i)
        r.coeff(i) = s[b + step * i];
    return r;
}

TruncatedSeries huff7(const TruncatedSeries& s)
{
    TruncatedSeries r(s.precision());
    for (std::size_t i = 0; i < s.precision(); i += 7)
        r.coeff(i) = s[i];
    return r;
}

TruncatedSeries substitute_power(const TruncatedSeries& s, std::size_t m)
{
    if (m == 0)
        throw std::invalid_argument("substitute_power: exponent multiplier must be >= 1");
    if (m == 1)
        return s;
    TruncatedSeries r(s.precision() * m);
    for (std::size_t i = 0; i < s.precision(); ++i)
        r.coeff(i * m) = s[i];
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return add(a, b);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return sub(a, b);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return mul(a, b);
}

std::optional<std::size_t> first_difference(const TruncatedSeries& a,
                                            const TruncatedSeries& b)
{
    std::size_t n = std::min(a.precision(), b.precision());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i])
            return i;
    return std::nullopt;
}

std::string to_string(const TruncatedSeries& s, std::size_t max_terms)
{
    std::ostringstream out;
    std::size_t printed = 0;
    for (std::size_t i = 0; i < s.precision() && printed < max_terms; ++i) {
        if (s[i] == 0)
            continue;
        Coefficient c = s[i];
        if (printed == 0) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        if (i == 0) {
            out << c.get_str();
        } else {
            if (c != 1)
                out << c.get_str() << "*";
            out << "q";
            if (i > 1)
                out << "^" << i;
        }
        ++printed;
    }
    if (printed == 0)
        return "0";
    if (printed == max_terms)
        out << " + ...";
    out << " + O(q^" << s.precision() << ")";
    return out.str();
}

}  // namespace pclab
