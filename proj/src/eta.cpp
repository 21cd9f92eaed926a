#include "pclab/eta.hpp"

#include <stdexcept>

namespace pclab {

TruncatedSeries eta_series(std::size_t r, std::size_t N)
{
    if (r == 0)
        throw std::invalid_argument("eta_series: scale must be >= 1");
    TruncatedSeries s(N);
    s.coeff(0) = 1;
    // f_1 = sum_{k in Z} (-1)^k q^{k(3k-1)/2}; substitute q -> q^r.
    for (std::size_t k = 1;; ++k) {
        std::size_t g1 = r * (k * (3 * k - 1) / 2);
        std::size_t g2 = r * (k * (3 * k + 1) / 2);
        if (g1 >= N)
            break;
        int sign = (k % 2 == 0) ? 1 : -1;
        s.coeff(g1) = sign;
        if (g2 < N)
            s.coeff(g2) = sign;
    }
    return s;
}

TruncatedSeries compile(const EtaQuotientSpec& spec, std::size_t N)
{
    if (spec.q_prefactor >= N)
        throw std::invalid_argument("compile: q prefactor at or beyond precision");
    TruncatedSeries r = TruncatedSeries::one(N);
    for (const auto& f : spec.factors) {
        if (f.exponent == 0)
            continue;
        TruncatedSeries base = eta_series(f.scale, N);
        long e = f.exponent;
        if (e < 0) {
            base = inverse(base);
            e = -e;
        }
        r = mul(r, power(base, e));
    }
    if (spec.q_prefactor > 0)
        r = truncated(shift(r, spec.q_prefactor), N);
    return r;
}

}  // namespace pclab
