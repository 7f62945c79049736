#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "slab/besov.hpp"

#include "../src/det_rng.hpp"
#include "../src/lab_util.hpp"

using namespace slab;

TEST_CASE("besov parameter guards") {
    CHECK_THROWS_AS(BesovParams(1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(BesovParams(1.0, 1.0, -2.0), std::invalid_argument);
    CHECK_NOTHROW(BesovParams(-0.5, 1.0, std::numeric_limits<double>::infinity()));
}

TEST_CASE("single monomial picks up the dyadic weight exactly") {
    // z^(2^n) sits entirely on block n with unit block norm
    for (int n = 1; n <= 6; ++n) {
        AnalyticSymbol f = AnalyticSymbol::monomial(1L << n);
        for (double s : {0.5, 1.0, 2.0}) {
            double expect = std::pow(2.0, n * s);
            CHECK(besov_norm(f, BesovParams(s, 1.0, 1.0)) ==
                  doctest::Approx(expect).epsilon(1e-9));
        }
    }
    // frequency 1 lives on block 0: weight 1 at every s
    CHECK(besov_norm(AnalyticSymbol::monomial(1), BesovParams(3.0, 1.0, 2.0)) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("besov norm is homogeneous") {
    detail::DetRng rng(41, 0);
    AnalyticSymbol f = detail::random_poly(25, rng);
    BesovParams params(0.75, 0.5, 1.5);
    double base = besov_norm(f, params);
    AnalyticSymbol g = f;
    g *= cpx(0, 3);
    CHECK(besov_norm(g, params) == doctest::Approx(3.0 * base).epsilon(1e-10));
}

TEST_CASE("aggregation exponent is monotone") {
    detail::DetRng rng(43, 1);
    AnalyticSymbol f = detail::random_poly(40, rng);
    double s = 0.5, p = 1.0;
    double q_half = besov_norm(f, BesovParams(s, p, 0.5));
    double q_one = besov_norm(f, BesovParams(s, p, 1.0));
    double q_two = besov_norm(f, BesovParams(s, p, 2.0));
    double q_inf = besov_norm(f, BesovParams(s, p, std::numeric_limits<double>::infinity()));
    CHECK(q_half >= q_one * (1.0 - 1e-12));
    CHECK(q_one >= q_two * (1.0 - 1e-12));
    CHECK(q_two >= q_inf * (1.0 - 1e-12));
}

TEST_CASE("block table rows recombine to the norm") {
    detail::DetRng rng(47, 2);
    TrigPolynomial f(-30, std::vector<cpx>(61));
    for (long k = -30; k <= 30; ++k) f.set_coeff(k, detail::random_coeff(rng));

    BesovParams params(0.8, 1.0, 1.25);
    std::vector<BesovBlockRow> rows = besov_block_table(f, params);
    REQUIRE(!rows.empty());
    std::vector<double> weighted;
    for (const auto& r : rows) {
        CHECK(r.weighted == doctest::Approx(std::pow(2.0, std::abs(r.n) * params.s) * r.block_lp)
                                .epsilon(1e-12));
        weighted.push_back(r.weighted);
    }
    CHECK(lp_combine(weighted, params.q) == doctest::Approx(besov_norm(f, params)).epsilon(1e-12));
}

TEST_CASE("lacunary score sums amplitude-weighted frequencies") {
    // p = 1/2 puts the aggregation exponent at 1; amplitudes 2^-j / j^2 make
    // the score the plain partial sum of 1/j^2
    LacunarySymbolSpec spec;
    double expect = 0.0;
    for (int j = 1; j <= 5; ++j) {
        spec.frequencies.push_back(1L << j);
        spec.amplitudes.push_back(cpx(std::ldexp(1.0, -j) / (j * j), 0.0));
        expect += 1.0 / (j * j);
    }
    LacunaryScore sc = lacunary_membership(spec, PExponent(0.5), 2.0, 1);
    CHECK(sc.in_mp);
    CHECK(sc.rho == 2.0);
    CHECK(sc.groups == 1);
    CHECK(sc.score == doctest::Approx(expect).epsilon(1e-12));

    // auto-search lands on some passing pair for the same spectrum
    LacunaryScore sc2 = lacunary_membership(spec, PExponent(0.5));
    CHECK(sc2.score == doctest::Approx(sc.score).epsilon(1e-12));

    // p = 1 aggregates with sup
    LacunaryScore sup = lacunary_membership(spec, PExponent(1.0), 2.0, 1);
    CHECK(sup.score == doctest::Approx(0.5).epsilon(1e-12));

    // 33 consecutive integers in [32, 64]: a ratio-1.1 chain there holds at
    // most 8 of them, so even four groups cannot cover the run
    LacunarySymbolSpec bad;
    for (long k = 32; k <= 64; ++k) {
        bad.frequencies.push_back(k);
        bad.amplitudes.push_back(cpx(1.0));
    }
    CHECK_THROWS_AS(lacunary_membership(bad, PExponent(0.5)), std::invalid_argument);

    LacunarySymbolSpec mism;
    mism.frequencies = {1, 2};
    mism.amplitudes = {cpx(1.0)};
    CHECK_THROWS_AS(lacunary_membership(mism, PExponent(0.5)), std::invalid_argument);
}

TEST_CASE("gap score rejects spectrum outside the intervals") {
    GapProfile profile;
    profile.xi = {4, 16};
    profile.eta = {8, 32};
    profile.d = 2.0;
    profile.D = 2.0;

    AnalyticSymbol ok = AnalyticSymbol::monomial(5);
    ok += AnalyticSymbol::monomial(20, cpx(2, 0));
    double score = gap_necessary_score(ok, profile, PExponent(0.5));
    CHECK(score > 0.0);
    // two far-apart monomials: blocks see 1*w(5) at n=2..3 and 2*w(20) at n=4..5,
    // so the score is bounded by the triangle sum of the pieces
    double upper = besov_norm(ok, BesovParams(1.0, 0.5, 1.0));
    CHECK(score <= upper * (1.0 + 1e-12));

    AnalyticSymbol leak = ok;
    leak.set_coeff(10, cpx(1, 0));
    CHECK_THROWS_WITH_AS(gap_necessary_score(leak, profile, PExponent(0.5)),
                         doctest::Contains("k=10"), std::invalid_argument);
}

TEST_CASE("finite difference seminorm closed form on z") {
    // f = z: rotation differences give |zeta-1|^(1-s), maximized at zeta = -1
    TrigPolynomial f(0, {cpx(0, 0), cpx(1, 0)});
    double v = finite_difference_besov(f, 0.5, 1.0, 64);
    CHECK(v == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(finite_difference_besov(f, 1.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(finite_difference_besov(f, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(finite_difference_besov(f, 0.5, 1.0, 32), std::invalid_argument);
}

TEST_CASE("finite difference stays within a constant of the block norm") {
    detail::DetRng rng(53, 3);
    AnalyticSymbol f = detail::random_poly(30, rng);
    double s = 0.5, p = 1.0;
    double fd = finite_difference_besov(TrigPolynomial(f), s, p, 256);
    double blocks = besov_norm(f, BesovParams(s, p, std::numeric_limits<double>::infinity()));
    REQUIRE(blocks > 0.0);
    double ratio = fd / blocks;
    CHECK(ratio > 1.0 / 64.0);
    CHECK(ratio < 64.0);
}
