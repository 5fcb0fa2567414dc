#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgsig/cg_signatures.hpp"
#include "cgsig/errors.hpp"
#include "cgsig/knot.hpp"

#include <random>

using namespace cgsig;

namespace {

std::mt19937 rng(0xC65165u);

mpq_class random_rational(int num_bound, int den_bound) {
    std::uniform_int_distribution<int> dn(-num_bound, num_bound), dd(1, den_bound);
    mpq_class v(dn(rng), dd(rng));
    v.canonicalize();
    return v;
}

} // namespace

TEST_CASE("character enumeration order and index inversion") {
    // base-q odometer, last coordinate fastest
    CHECK(character_at(3, 2, 0).coeffs == std::vector<unsigned>{0, 0});
    CHECK(character_at(3, 2, 1).coeffs == std::vector<unsigned>{0, 1});
    CHECK(character_at(3, 2, 2).coeffs == std::vector<unsigned>{0, 2});
    CHECK(character_at(3, 2, 3).coeffs == std::vector<unsigned>{1, 0});
    CHECK(character_at(3, 2, 8).coeffs == std::vector<unsigned>{2, 2});
    CHECK_THROWS_AS(character_at(3, 2, 9), PreconditionError);

    for (unsigned long i = 0; i < 125; ++i) {
        Character chi = character_at(5, 3, mpz_class(i));
        CHECK(character_index(chi) == i);
    }
    CHECK(character_at(5, 3, 0).is_trivial());
    CHECK_FALSE(character_at(5, 3, 7).is_trivial());
}

TEST_CASE("signature estimates: construction and interval arithmetic") {
    SignatureEstimate e(mpq_class(3, 5), 1);
    CHECK(e.contains(mpq_class(3, 5)));
    CHECK(e.contains(mpq_class(8, 5)));
    CHECK(e.contains(mpq_class(-2, 5)));
    CHECK_FALSE(e.contains(2));
    CHECK_THROWS_AS(SignatureEstimate(0, -1), PreconditionError);

    SignatureEstimate sum = e + SignatureEstimate(2, mpq_class(1, 2));
    CHECK(sum.center == mpq_class(13, 5));
    CHECK(sum.slack == mpq_class(3, 2));

    SignatureEstimate neg = -e;
    CHECK(neg.center == mpq_class(-3, 5));
    CHECK(neg.slack == 1);

    // |v| >= center - slack when the interval stays positive
    CHECK(SignatureEstimate(10, 1).abs_lower_bound() == 9);
    CHECK(SignatureEstimate(-10, 1).abs_lower_bound() == 9);
    // straddling zero certifies nothing
    CHECK(SignatureEstimate(mpq_class(1, 2), 1).abs_lower_bound() == 0);
    CHECK(SignatureEstimate(0, 0).abs_lower_bound() == 0);
}

TEST_CASE("estimate containment is preserved by the arithmetic (random)") {
    int cases = 0;
    std::uniform_int_distribution<int> lam(-100, 100);
    while (cases < 220) {
        SignatureEstimate a(random_rational(20, 9), abs(random_rational(10, 9)));
        SignatureEstimate b(random_rational(20, 9), abs(random_rational(10, 9)));
        // random points inside each interval
        mpq_class xa = a.center + a.slack * lam(rng) / 100;
        mpq_class xb = b.center + b.slack * lam(rng) / 100;
        REQUIRE(a.contains(xa));
        REQUIRE(b.contains(xb));
        CHECK((a + b).contains(xa + xb));
        CHECK((-a).contains(-xa));
        mpq_class bound = a.abs_lower_bound();
        CHECK(abs(xa) >= bound);
        ++cases;
    }
    CHECK(cases >= 200);
}

TEST_CASE("tristram-levine: frozen values and scaling") {
    SeifertMatrix t25 = torus_2_5_seifert(), f8 = figure_eight_seifert();
    int expected[] = {-2, -4, -4, -2};
    for (unsigned k = 1; k <= 4; ++k) {
        CHECK(tristram_levine(t25, 1, 5, k) == expected[k - 1]);
        CHECK(tristram_levine(f8, 1, 5, k) == 0);
    }
    CHECK(tristram_levine(t25, 1, 5, 0) == 0);   // trivial root
    CHECK(tristram_levine(t25, 1, 5, 10) == 0);  // k reduced mod q
    CHECK(tristram_levine(t25, 7, 5, 1) == -14); // multiplicity scales linearly
    CHECK(tristram_levine(t25, 0, 5, 2) == 0);
    CHECK(tristram_levine(t25, 1, 2, 1) == -4);
    CHECK(tristram_levine(unknot_seifert(), 9, 5, 1) == 0);

    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 2, 99);
    CHECK(tristram_levine(t25, big, 5, 2) == -4 * big);

    CHECK_THROWS_AS(tristram_levine(t25, 1, 4, 1), PreconditionError);
    CHECK_THROWS_AS(tristram_levine(t25, 1, 10, 1), PreconditionError);
    CHECK_THROWS_AS(tristram_levine(t25, -1, 5, 1), PreconditionError);
}

TEST_CASE("surgery formula: frozen values") {
    CHECK(cf_hopf_signature(-2, 2, 5, 1, 2) == mpq_class(1, 5));
    CHECK(cf_hopf_signature(-2, 2, 5, 2, 4) == mpq_class(-1, 5));
    CHECK(cf_hopf_signature(-2, 2, 5, 3, 1) == mpq_class(-1, 5));
    CHECK(cf_hopf_signature(-2, 2, 5, 4, 3) == mpq_class(1, 5));
    // a positive-definite linking matrix shifts by its signature
    CHECK(cf_hopf_signature(2, 2, 5, 1, 1) == mpq_class(-27, 25));
    // other cover orders
    CHECK(cf_hopf_signature(-2, 2, 7, 1, 2) == mpq_class(1, 49));

    CHECK_THROWS_AS(cf_hopf_signature(-2, 2, 5, 0, 1), ZeroMeridianValueError);
    CHECK_THROWS_AS(cf_hopf_signature(-2, 2, 5, 1, 5), ZeroMeridianValueError);
    CHECK_THROWS_AS(cf_hopf_signature(-2, 2, 4, 1, 2), PreconditionError);
    CHECK_THROWS_AS(cf_hopf_signature(1, 1, 5, 1, 2), PreconditionError);
}

TEST_CASE("surgery formula: conjugation symmetry (random)") {
    const unsigned qs[] = {3, 5, 7, 11, 13};
    std::uniform_int_distribution<int> ab(-9, 9);
    int cases = 0;
    while (cases < 220) {
        mpz_class a = ab(rng), b = ab(rng);
        if (a * b == 1)
            continue;
        unsigned q = qs[cases % 5];
        std::uniform_int_distribution<unsigned> nn(1, q - 1);
        unsigned n1 = nn(rng), n2 = nn(rng);
        CHECK(cf_hopf_signature(a, b, q, n1, n2) ==
              cf_hopf_signature(a, b, q, q - n1, q - n2));
        ++cases;
    }
    CHECK(cases >= 200);
}

TEST_CASE("base estimates through the cover generator") {
    SatelliteKnot base(figure_eight_seifert(), HopfSurgery(-2, 2), {});
    CHECK(base_cg_estimate(base, 5, 0) == SignatureEstimate(0, 0));
    CHECK(base_cg_estimate(base, 5, 1) == SignatureEstimate(mpq_class(1, 5), 1));
    CHECK(base_cg_estimate(base, 5, 2) == SignatureEstimate(mpq_class(-1, 5), 1));
    CHECK(base_cg_estimate(base, 5, 3) == SignatureEstimate(mpq_class(-1, 5), 1));
    CHECK(base_cg_estimate(base, 5, 4) == SignatureEstimate(mpq_class(1, 5), 1));
    // the claimed order must match the actual cover group
    CHECK_THROWS_AS(base_cg_estimate(base, 7, 1), PreconditionError);

    // the t = 2 base lives over Z/17
    SatelliteBase b2 = two_bridge_base(2);
    SatelliteKnot k2(b2.seifert, b2.surgery, {});
    CHECK(base_cg_estimate(k2, 17, 0) == SignatureEstimate(0, 0));
    SignatureEstimate e1 = base_cg_estimate(k2, 17, 1);
    CHECK(e1.slack == 1);
    CHECK(abs(e1.center) < 2); // envelope for the defect of a rank-2 form
}

TEST_CASE("satellite estimates add companion corrections at the right sites") {
    SatelliteKnot summand = build_infected_base(two_bridge_base(1), torus_2_5_seifert(), 8);
    // c = 1: +2*8*TL(site 2) - 2*8*TL(site 1) = 16(-4) - 16(-2) = -32, plus base 1/5
    CHECK(satellite_cg_estimate(summand, 5, 1) ==
          SignatureEstimate(mpq_class(-159, 5), 1));
    CHECK(satellite_cg_estimate(summand, 5, 2) == SignatureEstimate(mpq_class(159, 5), 1));
    CHECK(satellite_cg_estimate(summand, 5, 3) == SignatureEstimate(mpq_class(159, 5), 1));
    CHECK(satellite_cg_estimate(summand, 5, 4) ==
          SignatureEstimate(mpq_class(-159, 5), 1));
    CHECK(satellite_cg_estimate(summand, 5, 0) == SignatureEstimate(0, 0));

    // with unknot companions the corrections vanish
    SatelliteKnot trivial = build_infected_base(two_bridge_base(1), unknot_seifert(), 8);
    SatelliteKnot bare(figure_eight_seifert(), HopfSurgery(-2, 2), {});
    for (unsigned c = 0; c < 5; ++c)
        CHECK(satellite_cg_estimate(trivial, 5, c) == satellite_cg_estimate(bare, 5, c));
}

TEST_CASE("sum estimates: additivity and coefficient routing") {
    KnotSum family = build_family(FamilySpec(1, {0}));
    Character chi{5, {1, 0, 2, 0}};
    SignatureEstimate whole = sum_cg_estimate(family, chi);
    SignatureEstimate parts = satellite_cg_estimate(family.summands[0], 5, 1) +
                              satellite_cg_estimate(family.summands[1], 5, 0) +
                              satellite_cg_estimate(family.summands[2], 5, 2) +
                              satellite_cg_estimate(family.summands[3], 5, 0);
    CHECK(whole == parts);

    Character wrong{5, {1, 0}};
    CHECK_THROWS_AS(sum_cg_estimate(family, wrong), DimensionMismatchError);
}

TEST_CASE("per-summand tables match the pointwise estimates") {
    KnotSum family = build_family(FamilySpec(1, {0}));
    auto tables = summand_signature_tables(family, 5);
    REQUIRE(tables.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(tables[i].size() == 5);
        for (unsigned c = 0; c < 5; ++c)
            CHECK(tables[i][c] == satellite_cg_estimate(family.summands[i], 5, c));
    }
    // frozen first row
    CHECK(tables[0][1].center == mpq_class(-159, 5));
    CHECK(tables[0][2].center == mpq_class(159, 5));
    // the centers scale with the multiplicity from row to row
    CHECK(tables[1][1].center == mpq_class(-32 * 4, 1) + mpq_class(1, 5));
}

TEST_CASE("ordinary signature sums the symmetrized base forms") {
    KnotSum family = build_family(FamilySpec(1, {0}));
    CHECK(ordinary_signature(family) == 0); // amphichiral base: signature zero

    SatelliteKnot torus_base(torus_2_5_seifert(), HopfSurgery(-2, 2), {});
    KnotSum mixed;
    mixed.summands = {torus_base, family.summands[0]};
    CHECK(ordinary_signature(mixed) == -4);
}

TEST_CASE("full character table in canonical order") {
    KnotSum one;
    one.summands = {build_infected_base(two_bridge_base(1), torus_2_5_seifert(), 8)};
    auto table = cg_signature_table(one, 5);
    REQUIRE(table.size() == 5);
    for (unsigned long i = 0; i < 5; ++i) {
        CHECK(table[i].chi == character_at(5, 1, mpz_class(i)));
        CHECK(table[i].estimate == satellite_cg_estimate(one.summands[0], 5, i));
    }

    KnotSum family = build_family(FamilySpec(1, {0}));
    auto big = cg_signature_table(family, 5);
    CHECK(big.size() == 625);
    CHECK(big[0].estimate == SignatureEstimate(0, 0));

    // the table guard refuses runaway sizes
    KnotSum runaway;
    for (int i = 0; i < 10; ++i)
        runaway.summands.push_back(family.summands[0]);
    CHECK_THROWS_AS(cg_signature_table(runaway, 5), PreconditionError);
}

TEST_CASE("mirror-symmetric construction gives antisymmetric tables (random)") {
    // For the parameter-t base, the deck transformation interchanges the two
    // axes; composing a character with it multiplies the generator value by
    // 2t and negates the signature. Checked on random satellites.
    std::uniform_int_distribution<int> mult(0, 1000), pick(0, 2);
    int cases = 0;
    while (cases < 210) {
        int which = pick(rng);
        SeifertMatrix comp = which == 0   ? torus_2_5_seifert()
                             : which == 1 ? figure_eight_seifert()
                                          : unknot_seifert();
        SatelliteKnot k = build_infected_base(two_bridge_base(1), comp, mult(rng));
        std::uniform_int_distribution<unsigned> cc(1, 4);
        unsigned c = cc(rng);
        SignatureEstimate at_c = satellite_cg_estimate(k, 5, c);
        SignatureEstimate at_2c = satellite_cg_estimate(k, 5, (2 * c) % 5);
        CHECK(at_2c.center == -at_c.center);
        CHECK(at_2c.slack == at_c.slack);
        ++cases;
    }
    CHECK(cases >= 200);

    // a few larger-parameter bases with plain companions
    for (unsigned t : {2u, 3u}) {
        unsigned q = 4 * t * t + 1;
        SatelliteKnot k = build_infected_base(two_bridge_base(t), unknot_seifert(), 3);
        for (unsigned c = 1; c < q; c += 3) {
            SignatureEstimate at_c = satellite_cg_estimate(k, q, c);
            SignatureEstimate at_2tc = satellite_cg_estimate(k, q, (2 * t * c) % q);
            CHECK(at_2tc.center == -at_c.center);
        }
    }
}
