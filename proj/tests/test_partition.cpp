#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pclab/eta.hpp"
#include "pclab/partition.hpp"
#include "pclab/series.hpp"

using namespace pclab;

TEST_CASE("partition numbers")
{
    auto p = partition_count(250);
    CHECK(p.at(0) == 1);
    CHECK(p.at(1) == 1);
    CHECK(p.at(5) == 7);
    CHECK(p.at(10) == 42);
    CHECK(p.at(100) == Coefficient("190569292"));

    // Chowla: p(243) is divisible by 7^2 but not 7^3
    auto [e, u] = split_pow7(p.at(243));
    CHECK(e == 2);

    // monotone
    for (long n = 1; n <= 250; ++n)
        CHECK(p.at(n) >= p.at(n - 1));
}

TEST_CASE("partition table agrees with the series inverse")
{
    auto p = partition_count(120);
    auto s = inverse(eta_series(1, 121));
    for (long n = 0; n <= 120; ++n)
        CHECK(p.at(n) == s[static_cast<std::size_t>(n)]);
}

TEST_CASE("two-color counts")
{
    auto t = two_color_count(7, 80);
    CHECK(t.at(0) == 1);
    CHECK(t.at(5) == 7);
    CHECK(t.at(7) == 16);  // p(0)p(7) + p(1)p(0)

    auto p = partition_count(80);
    for (long n = 0; n < 7; ++n)
        CHECK(t.at(n) == p.at(n));  // below ell the color never appears

    std::vector<long> first8;
    for (long n = 0; n <= 7; ++n)
        first8.push_back(static_cast<long>(t.at(n).get_si()));
    CHECK(first8 == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 16});

    // definitional convolution
    for (long n = 0; n <= 80; ++n) {
        Coefficient acc = 0;
        for (long k = 0; 7 * k <= n; ++k)
            acc += p.at(k) * p.at(n - 7 * k);
        CHECK(acc == t.at(n));
    }
}

TEST_CASE("direct DP route equals the convolution")
{
    for (long ell : {7L, 49L}) {
        auto dp = two_color_direct_dp(ell, 60);
        auto t = two_color_count(ell, 60);
        for (long n = 0; n <= 60; ++n)
            CHECK(dp[static_cast<std::size_t>(n)] == t.at(n));
    }
}

TEST_CASE("two-color tables match the compiled series for ell in {7,49,343}")
{
    std::size_t n = 150;
    auto p = partition_count(static_cast<long>(n));
    for (long ell : {7L, 49L, 343L}) {
        auto s = compile({0, {{1, -1}, {static_cast<std::size_t>(ell), -1}}}, n);
        for (long i = 0; i < static_cast<long>(n); ++i)
            CHECK(two_color_at(p, ell, i) == s[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("lambda values")
{
    CHECK(lambda(1) == 5);
    CHECK(lambda(2) == 47);
    CHECK(lambda(3) == 243);
    CHECK(lambda(4) == 2301);
    for (unsigned k = 1; k <= 6; ++k) {
        Coefficient l = lambda(k);
        CHECK(l > 0);
        CHECK(l < pow7(k));
        CHECK((24 * l) % pow7(k) == 1);
    }
}

TEST_CASE("modular tables agree with the exact ones")
{
    auto p = partition_count(400);
    auto pm = partition_count_mod(400, 5);
    Coefficient mod = pow7(5);
    for (long n = 0; n <= 400; ++n) {
        Coefficient r;
        mpz_mod(r.get_mpz_t(), p.at(n).get_mpz_t(), mod.get_mpz_t());
        CHECK(r == Coefficient(pm.values[static_cast<std::size_t>(n)]));
    }

    auto t = two_color_count(p, 49, 400);
    auto tm = two_color_count_mod(49, 400, 5);
    for (long n = 0; n <= 400; ++n) {
        Coefficient r;
        mpz_mod(r.get_mpz_t(), t.at(n).get_mpz_t(), mod.get_mpz_t());
        CHECK(r == Coefficient(tm.values[static_cast<std::size_t>(n)]));
    }

    CHECK_THROWS_AS(partition_count_mod(10, 0), std::invalid_argument);
    CHECK_THROWS_AS(partition_count_mod(10, 12), std::invalid_argument);
}

TEST_CASE("classical congruences on small ranges")
{
    auto p = partition_count(3000);
    for (long n = 0; 7 * n + 5 <= 3000; ++n)
        CHECK(mpz_divisible_ui_p(p.at(7 * n + 5).get_mpz_t(), 7));
    for (long n = 0; 49 * n + 47 <= 3000; ++n)
        CHECK(mpz_divisible_ui_p(p.at(49 * n + 47).get_mpz_t(), 49));
}
