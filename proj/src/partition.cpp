#include "pclab/partition.hpp"

#include <stdexcept>

namespace pclab {

namespace {

// Generalized pentagonal numbers g with g <= nmax, with the sign of the
// pentagonal theorem term attached: f_1 = 1 + sum_k sign_k q^{g_k}.
struct PentTerm {
    long g;
    int sign;
};

std::vector<PentTerm> pentagonal_terms(long nmax)
{
    std::vector<PentTerm> t;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        if (g1 > nmax)
            break;
        int sign = (k % 2 == 0) ? 1 : -1;
        t.push_back({g1, sign});
        long g2 = k * (3 * k + 1) / 2;
        if (g2 <= nmax)
            t.push_back({g2, sign});
    }
    return t;
}

}  // namespace

PartitionTable partition_count(long nmax)
{
    if (nmax < 0)
        throw std::invalid_argument("partition_count: nmax must be >= 0");
    PartitionTable t;
    t.values.resize(static_cast<std::size_t>(nmax) + 1);
    t.values[0] = 1;
    auto pent = pentagonal_terms(nmax);
    // p(n) = -sum sign_k p(n - g_k), from f_1 * sum p(n) q^n = 1.
    for (long n = 1; n <= nmax; ++n) {
        Coefficient& pn = t.values[static_cast<std::size_t>(n)];
        for (const auto& [g, sign] : pent) {
            if (g > n)
                break;
            if (sign > 0)
                pn -= t.values[static_cast<std::size_t>(n - g)];
            else
                pn += t.values[static_cast<std::size_t>(n - g)];
        }
    }
    return t;
}

Coefficient two_color_at(const PartitionTable& p, long ell, long n)
{
    if (ell < 1)
        throw std::invalid_argument("two_color_at: ell must be >= 1");
    if (n < 0 || n > p.max_n())
        throw std::out_of_range("two_color_at: argument outside the p-table");
    Coefficient acc = 0;
    for (long t = 0; ell * t <= n; ++t)
        mpz_addmul(acc.get_mpz_t(), p.at(t).get_mpz_t(), p.at(n - ell * t).get_mpz_t());
    return acc;
}

std::vector<Coefficient> two_color_direct_dp(long ell, long nmax)
{
    std::vector<Coefficient> dp(static_cast<std::size_t>(nmax) + 1);
    dp[0] = 1;
    for (long s = 1; s <= nmax; ++s)
        for (long n = s; n <= nmax; ++n)
            dp[static_cast<std::size_t>(n)] += dp[static_cast<std::size_t>(n - s)];
    for (long s = ell; s <= nmax; s += ell)
        for (long n = s; n <= nmax; ++n)
            dp[static_cast<std::size_t>(n)] += dp[static_cast<std::size_t>(n - s)];
    return dp;
}

TwoColorTable two_color_count(const PartitionTable& p, long ell, long nmax)
{
    if (ell < 1)
        throw std::invalid_argument("two_color_count: ell must be >= 1");
    if (nmax > p.max_n())
        throw std::invalid_argument("two_color_count: p-table too short");
    TwoColorTable t;
    t.ell = ell;
    t.values.resize(static_cast<std::size_t>(nmax) + 1);
    for (long n = 0; n <= nmax; ++n)
        t.values[static_cast<std::size_t>(n)] = two_color_at(p, ell, n);

    long check_to = std::min(nmax, 60L);
    auto dp = two_color_direct_dp(ell, check_to);
    for (long n = 0; n <= check_to; ++n)
        if (dp[static_cast<std::size_t>(n)] != t.values[static_cast<std::size_t>(n)])
            throw std::logic_error("two_color_count: convolution and DP disagree at n=" +
                                   std::to_string(n));
    return t;
}

TwoColorTable two_color_count(long ell, long nmax)
{
    return two_color_count(partition_count(nmax), ell, nmax);
}

ModPartitionTable partition_count_mod(long nmax, unsigned w)
{
    if (w == 0 || w > 11)
        throw std::invalid_argument("partition_count_mod: need 1 <= w <= 11");
    ModPartitionTable t;
    t.w = w;
    t.modulus = 1;
    for (unsigned i = 0; i < w; ++i)
        t.modulus *= 7;
    t.values.assign(static_cast<std::size_t>(nmax) + 1, 0);
    t.values[0] = 1 % t.modulus;
    auto pent = pentagonal_terms(nmax);
    const std::uint64_t m = t.modulus;
    for (long n = 1; n <= nmax; ++n) {
        std::uint64_t acc = 0;
        for (const auto& [g, sign] : pent) {
            if (g > n)
                break;
            std::uint64_t v = t.values[static_cast<std::size_t>(n - g)];
            acc += (sign > 0) ? (m - v) : v;
        }
        t.values[static_cast<std::size_t>(n)] = acc % m;
    }
    return t;
}

ModTwoColorTable two_color_count_mod(long ell, long nmax, unsigned w)
{
    if (ell < 1)
        throw std::invalid_argument("two_color_count_mod: ell must be >= 1");
    auto p = partition_count_mod(nmax, w);
    ModTwoColorTable t;
    t.ell = ell;
    t.w = w;
    t.modulus = p.modulus;
    t.values.assign(static_cast<std::size_t>(nmax) + 1, 0);
    const std::uint64_t m = t.modulus;
    for (long n = 0; n <= nmax; ++n) {
        std::uint64_t acc = 0;
        // modulus < 2^31, so each product fits and the running sum stays
        // far below 2^64 for any desk-scale nmax
        for (long k = 0; ell * k <= n; ++k)
            acc += (p.values[static_cast<std::size_t>(k)] *
                    p.values[static_cast<std::size_t>(n - ell * k)]) % m;
        t.values[static_cast<std::size_t>(n)] = acc % m;
    }
    return t;
}

Coefficient lambda(unsigned k)
{
    if (k == 0)
        throw std::invalid_argument("lambda: k must be >= 1");
    return mod_inverse(24, pow7(k));
}

}  // namespace pclab
