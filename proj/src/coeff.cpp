#include "pclab/coeff.hpp"

#include <stdexcept>

namespace pclab {

std::optional<long> valuation7(const Coefficient& n)
{
    if (n == 0)
        return std::nullopt;
    mpz_class unit;
    mp_bitcnt_t e = mpz_remove(unit.get_mpz_t(), n.get_mpz_t(), mpz_class(7).get_mpz_t());
    return static_cast<long>(e);
}

std::pair<long, Coefficient> split_pow7(const Coefficient& n)
{
    if (n == 0)
        throw std::domain_error("split_pow7: zero has no finite valuation");
    Coefficient unit;
    mp_bitcnt_t e = mpz_remove(unit.get_mpz_t(), n.get_mpz_t(), mpz_class(7).get_mpz_t());
    return {static_cast<long>(e), unit};
}

Coefficient pow7(unsigned long e)
{
    Coefficient r;
    mpz_ui_pow_ui(r.get_mpz_t(), 7, e);
    return r;
}

std::string factored7(const Coefficient& n)
{
    if (n == 0)
        return "0";
    auto [e, u] = split_pow7(n);
    if (e == 0)
        return u.get_str();
    std::string p = (e == 1) ? "7" : "7^" + std::to_string(e);
    if (u == 1)
        return p;
    if (u == -1)
        return "-" + p;
    return u.get_str() + "*" + p;
}

Coefficient mod_inverse(const Coefficient& a, const Coefficient& m)
{
    Coefficient r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: argument not invertible");
    return r;
}

long floor_div(long num, long den)
{
    long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

}  // namespace pclab
