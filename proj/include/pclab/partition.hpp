#pragma once

#include <cstdint>
#include <vector>

#include "pclab/coeff.hpp"

namespace pclab {

/*
 * Ground-truth oracle for p(n) and the 2-color counts p_{1,ell}(n).
 * Deliberately independent of the series module: p(n) comes from Euler's
 * pentagonal recurrence and p_{1,ell} from convolving p-values, with a
 * direct dynamic program cross-check on a small prefix.
 */

struct PartitionTable {
    std::vector<Coefficient> values;  // values[n] = p(n)

    long max_n() const { return static_cast<long>(values.size()) - 1; }
    const Coefficient& at(long n) const { return values.at(static_cast<std::size_t>(n)); }
};

PartitionTable partition_count(long nmax);

struct TwoColorTable {
    long ell = 0;
    std::vector<Coefficient> values;  // values[n] = p_{1,ell}(n)

    long max_n() const { return static_cast<long>(values.size()) - 1; }
    const Coefficient& at(long n) const { return values.at(static_cast<std::size_t>(n)); }
};

// Convolution of p-values; cross-checked against the two-colored-part DP
// for n <= min(nmax, 60).  Throws std::logic_error if the two disagree.
TwoColorTable two_color_count(long ell, long nmax);
TwoColorTable two_color_count(const PartitionTable& p, long ell, long nmax);

// Single value p_{1,ell}(n) from an existing p-table (n <= p.max_n()).
Coefficient two_color_at(const PartitionTable& p, long ell, long n);

// Independent route for the cross-check: unbounded-knapsack count over part
// sizes {1,2,3,...} plus a second color on multiples of ell.
std::vector<Coefficient> two_color_direct_dp(long ell, long nmax);

// Tables reduced mod 7^w, for congruence scans at scale.  w <= 11 keeps all
// intermediate products inside 64 bits.
struct ModPartitionTable {
    unsigned w = 0;
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> values;

    long max_n() const { return static_cast<long>(values.size()) - 1; }
};

ModPartitionTable partition_count_mod(long nmax, unsigned w);

struct ModTwoColorTable {
    long ell = 0;
    unsigned w = 0;
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> values;

    long max_n() const { return static_cast<long>(values.size()) - 1; }
};

ModTwoColorTable two_color_count_mod(long ell, long nmax, unsigned w);

// lambda_k: the unique 0 < x < 7^k with 24x == 1 (mod 7^k).
Coefficient lambda(unsigned k);

}  // namespace pclab
