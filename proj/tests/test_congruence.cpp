#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pclab/congruence.hpp"

using namespace pclab;

TEST_CASE("seven-adic valuation")
{
    CHECK(SevenValuation::of(0).infinite);
    CHECK(SevenValuation::of(0).str() == "inf");
    CHECK(SevenValuation::of(49).e == 2);
    CHECK(SevenValuation::of(13825).e == 1);
    CHECK(SevenValuation::of(-343).e == 3);
    CHECK(SevenValuation::of(12).e == 0);
    CHECK(SevenValuation::of(49).at_least(2));
    CHECK_FALSE(SevenValuation::of(49).at_least(3));
    CHECK(SevenValuation::of(0).at_least(1000));
}

TEST_CASE("claims carry the right progressions")
{
    auto c10 = claims_for(1, 0);
    REQUIRE(c10.size() == 6);

    CHECK(c10[0].family == 1);
    CHECK(c10[0].ell == 7);
    CHECK(c10[0].progression_a == 7);
    CHECK(c10[0].residue_b == 5);
    CHECK(c10[0].seven_power == 1);
    CHECK(c10[0].id() == "c1.k1.b0");

    CHECK(c10[1].ell == 49);
    CHECK(c10[1].progression_a == 7);
    CHECK(c10[1].residue_b == 5);
    CHECK(c10[1].seven_power == 1);

    CHECK(c10[2].progression_a == 49);
    CHECK(c10[2].residue_b == 47);
    CHECK(c10[2].seven_power == 2);

    std::vector<long> c4b;
    for (std::size_t i = 3; i < 6; ++i) {
        CHECK(c10[i].family == 4);
        CHECK(c10[i].progression_a == 343);
        CHECK(c10[i].seven_power == 3);
        c4b.push_back(static_cast<long>(c10[i].residue_b.get_si()));
    }
    CHECK(c4b == std::vector<long>{194, 243, 341});

    auto c11 = claims_for(1, 1);
    CHECK(c11[0].progression_a == 49);
    CHECK(c11[0].residue_b == 33);
    CHECK(c11[0].seven_power == 1);

    auto c20 = claims_for(2, 0);
    CHECK(c20[0].ell == 343);
    CHECK(c20[0].progression_a == 343);
    CHECK(c20[0].residue_b == 243);
    CHECK(c20[0].seven_power == 2);
}

TEST_CASE("published p_{1,49} progressions coincide with c2/c3 at k=1")
{
    for (unsigned beta = 0; beta <= 5; ++beta)
        CHECK(matches_published_p49_progressions(beta));
}

TEST_CASE("congruence scan, positive and negative")
{
    long nmax = 3000;
    auto p = partition_count(nmax);
    auto t7 = two_color_count_mod(7, nmax, 6);

    auto claims = claims_for(1, 0);
    auto r = verify_congruence(claims[0], t7, &p, nmax, 10);
    CHECK(r.pass);
    CHECK(r.instances == (nmax - 5) / 7 + 1);
    CHECK(r.spot_checked > 0);
    REQUIRE(r.min_val_seen.has_value());
    CHECK(*r.min_val_seen >= 1);

    // strengthening the modulus beyond the true family must fail with a witness
    CongruenceClaim too_strong = claims[0];
    too_strong.seven_power = 3;
    too_strong.modulus = pow7(3);
    auto bad = verify_congruence(too_strong, t7, &p, nmax, 0);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.counterexample_n.has_value());
    long arg = 7 * *bad.counterexample_n + 5;
    CHECK_FALSE(mpz_divisible_p(two_color_at(p, 7, arg).get_mpz_t(),
                                pow7(3).get_mpz_t()));

    // a trivial modulus always passes
    CongruenceClaim trivial = claims[0];
    trivial.seven_power = 0;
    trivial.modulus = 1;
    CHECK(verify_congruence(trivial, t7, &p, nmax, 0).pass);

    // out-of-range residue: zero instances, vacuously true
    auto deep = claims_for(2, 1);
    auto t2401 = two_color_count_mod(2401, 500, 6);
    auto vac = verify_congruence(deep[2], t2401, nullptr, 500, 0);
    CHECK(vac.pass);
    CHECK(vac.instances == 0);
}

TEST_CASE("generating function identities at small precision")
{
    MTable m;
    auto p = partition_count(8000);

    auto h1 = verify_gf_identity(SeriesId::H1, 1, 0, 60, m, p);
    CHECK(h1.pass);
    CHECK(h1.compared == 60);
    CHECK(h1.prog.a == 7);
    CHECK(h1.prog.b == 5);

    auto h2 = verify_gf_identity(SeriesId::H2, 1, 0, 60, m, p);
    CHECK(h2.pass);
    CHECK(h2.prog.a == 49);
    CHECK(h2.prog.b == 47);

    auto g1 = verify_gf_identity(SeriesId::G1, 1, 0, 40, m, p);
    CHECK(g1.pass);
    CHECK(g1.prog.ell == 7);

    auto g3 = verify_gf_identity(SeriesId::G3, 1, 0, 40, m, p);
    CHECK(g3.pass);
    CHECK(g3.prog.b == 5);

    auto g4 = verify_gf_identity(SeriesId::G4, 1, 0, 40, m, p);
    CHECK(g4.pass);
    CHECK(g4.prog.a == 49);
    CHECK(g4.prog.b == 47);

    // the RHS constant terms are the leading vector entries
    CHECK(gf_rhs(SeriesId::G1, 1, 0, 10, m)[0] == 7);
    CHECK(gf_rhs(SeriesId::G3, 1, 0, 10, m)[0] == 7);

    // oracle too small: vacuous
    auto tiny = partition_count(10);
    auto vac = verify_gf_identity(SeriesId::G4, 1, 0, 40, m, tiny);
    CHECK(vac.pass);
    CHECK(vac.compared == 0);

    // a corrupted M entry propagates into x_2 and breaks H2
    MTable bad;
    bad.set_entry(4, 2, bad.at(4, 2) + 1);
    auto broken = verify_gf_identity(SeriesId::H2, 1, 0, 60, bad, p);
    CHECK_FALSE(broken.pass);
    CHECK(broken.first_mismatch.has_value());
}

TEST_CASE("valuation lemma sweep")
{
    MTable m;
    auto sweep = check_valuation_lemmas(m, 2, 2, 6);
    CHECK(sweep.equalities_pass);
    CHECK(sweep.failed == 0);
    // exactly the two documented x_1 corners (both y-family base sweeps, j=2)
    CHECK(sweep.warned == 2);
    long errata = 0;
    for (const auto& inst : sweep.instances) {
        if (inst.known_erratum) {
            ++errata;
            CHECK(inst.k == 1);
            CHECK(inst.subscript == 1);
            CHECK(inst.j == 2);
            CHECK(inst.bound == 3);
            REQUIRE(inst.actual.has_value());
            CHECK(*inst.actual == 2);
        } else {
            CHECK(inst.pass);
        }
    }
    CHECK(errata == 2);

    // spec spot values
    bool found = false;
    for (const auto& inst : sweep.instances)
        if (inst.lemma == "y-even-even-s" && inst.k == 1 && inst.subscript == 2 &&
            inst.j == 1) {
            found = true;
            CHECK(inst.bound == 2);
            CHECK(*inst.actual == 2);  // pi(124754) = 2
        }
    CHECK(found);

    CHECK_THROWS_AS(check_valuation_lemmas(m, 3, 2, 6), std::invalid_argument);
}

TEST_CASE("valuation floor over the computed extent")
{
    MTable m;
    for (long i = 1; i <= 40; ++i)
        for (long j = 1; j <= 2 * i; ++j)
            m.at(i, j);
    auto sweep = check_m_valuation_floor(m);
    CHECK(sweep.violations == 0);
    CHECK(sweep.checked > 1000);
    CHECK(sweep.min_slack_set);
    CHECK(sweep.min_slack >= 0);
}

TEST_CASE("frobenius reduction steps")
{
    MTable m;
    auto r10 = verify_frobenius_reduction(1, 0, 120, m);
    CHECK(r10.pass());
    CHECK_FALSE(r10.reduction_window);

    auto r11 = verify_frobenius_reduction(1, 1, 100, m);
    CHECK(r11.pass());

    auto r20 = verify_frobenius_reduction(2, 0, 100, m);
    CHECK(r20.pass());

    auto r21 = verify_frobenius_reduction(2, 1, 80, m);
    CHECK(r21.pass());
    CHECK(r21.reduction_window);
}
