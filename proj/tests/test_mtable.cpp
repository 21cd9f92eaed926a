#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pclab/mtable.hpp"

using namespace pclab;

TEST_CASE("seed entries as printed")
{
    MTable m;
    CHECK(m.at(1, 1) == 7);
    CHECK(m.at(1, 2) == 49);
    CHECK(m.at(2, 2) == 9 * 49);
    CHECK(m.at(3, 4) == 24 * pow7(5));
    CHECK(m.at(4, 2) == 82 * 7);
    CHECK(m.at(5, 9) == 5 * pow7(13));
    CHECK(m.at(7, 13) == pow7(20));
    CHECK(m.at(7, 14) == pow7(20));
    CHECK(m.at(6, 8) == 7830 * pow7(10));
}

TEST_CASE("recurrence values")
{
    MTable m;
    CHECK(m.at(8, 1) == 0);
    CHECK(m.at(8, 2) == 0);
    CHECK(m.at(8, 3) == 2464);
    CHECK(m.at(9, 3) == 255);
    CHECK(m.recurrence_value(8, 3) == 2464);
    CHECK(m.recurrence_value(9, 3) == 255);
    CHECK(m.recurrence_value(8, 1) == 0);
    CHECK_THROWS_AS(m.recurrence_value(7, 3), std::invalid_argument);
    CHECK_THROWS_AS(m.recurrence_value(1, 1), std::invalid_argument);
}

TEST_CASE("support shortcuts agree with the raw recurrence")
{
    MTable m;
    for (long i = 8; i <= 20; ++i)
        for (long j = 3; j <= 2 * i + 3; ++j)
            CHECK(m.at(i, j) == m.recurrence_value(i, j));
    // the vanishing wedge: i >= 4j
    CHECK(m.at(16, 4) == 0);
    CHECK(m.recurrence_value(16, 4) == 0);
    CHECK(m.at(40, 10) == 0);
    // beyond the row support: j > 2i
    CHECK(m.at(8, 17) == 0);
    CHECK(m.recurrence_value(8, 17) == 0);
}

TEST_CASE("row boundaries")
{
    MTable m;
    for (long i = 4; i <= 30; ++i)
        CHECK(m.at(i, 1) == 0);
    for (long i = 8; i <= 30; ++i)
        CHECK(m.at(i, 2) == 0);
    // last two entries of each seeded row follow the boundary pattern
    for (long i = 4; i <= 7; ++i) {
        CHECK(m.at(i, 2 * i) == pow7(static_cast<unsigned long>(3 * i - 1)));
        CHECK(m.at(i, 2 * i - 1) == i * pow7(static_cast<unsigned long>(3 * i - 2)));
    }
}

TEST_CASE("series derivation reproduces the printed rows")
{
    MTable m;
    auto d1 = derive_m_row_from_series(1, 2, derivation_precision(2));
    CHECK(d1.values[0] == 7);
    CHECK(d1.values[1] == 49);

    auto d2 = derive_m_row_from_series(2, 4, derivation_precision(4));
    CHECK(d2.values[0] == 10);
    CHECK(d2.values[1] == 9 * 49);
    CHECK(d2.values[2] == 2 * pow7(4));
    CHECK(d2.values[3] == pow7(5));
    CHECK(d2.residual_zero);

    auto d8 = derive_m_row_from_series(8, 3, derivation_precision(3));
    CHECK(d8.values[2] == m.at(8, 3));

    CHECK_THROWS_AS(derive_m_row_from_series(1, 10, 20), std::invalid_argument);
}

TEST_CASE("huffing lemma expansions")
{
    MTable m;
    CHECK(verify_huff_lemma(HuffVariant::FourI, 1, 300, m).pass);
    CHECK(verify_huff_lemma(HuffVariant::FourIPlusOne, 1, 300, m).pass);
    CHECK(verify_huff_lemma(HuffVariant::FourIPlusTwo, 2, 400, m).pass);

    // a corrupted table entry must be caught, with the exponent reported
    MTable bad;
    bad.set_entry(4, 3, bad.at(4, 3) + 1);
    auto check = verify_huff_lemma(HuffVariant::FourI, 1, 300, bad);
    CHECK_FALSE(check.pass);
    CHECK(check.first_mismatch_exponent.has_value());
}

TEST_CASE("valuation floor")
{
    CHECK(MTable::pi_lower_bound(1, 2) == 2);   // tight at m_{1,2} = 7^2
    CHECK(MTable::pi_lower_bound(8, 3) == 1);   // tight at 2464 = 7 * 352
    CHECK(MTable::pi_lower_bound(4, 2) == 1);   // tight at 82 * 7
    CHECK(MTable::pi_lower_bound(7, 13) == 19); // 7^20 clears it
    CHECK(MTable::pi_lower_bound(5, 1) == -1);  // negative floor handled
    CHECK(split_pow7(Coefficient(2464)).first == 1);
}
