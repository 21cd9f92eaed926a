#pragma once

#include <cstddef>
#include <vector>

#include "pclab/series.hpp"

namespace pclab {

// q-expansion of f_r = prod_{m>=1} (1 - q^{rm}), via the pentagonal number
// expansion of f_1 with q -> q^r.  Total function: any r >= 1, N >= 1.
TruncatedSeries eta_series(std::size_t r, std::size_t N);

// Symbolic q^e * prod_r f_r^{z_r}.  Negative exponents are compiled by
// inverting f_r once and raising the inverse, so each factor costs one
// inversion at most.
struct EtaQuotientSpec {
    struct Factor {
        std::size_t scale;  // the r of f_r
        long exponent;      // z_r, may be negative
    };

    std::size_t q_prefactor = 0;
    std::vector<Factor> factors;
};

// Expands the quotient to precision N.  Requires q_prefactor < N.
TruncatedSeries compile(const EtaQuotientSpec& spec, std::size_t N);

}  // namespace pclab
