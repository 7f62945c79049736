#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "slab/symbols.hpp"

#include "../src/det_rng.hpp"
#include "../src/lab_util.hpp"

using namespace slab;

TEST_CASE("analytic symbol basics") {
    AnalyticSymbol zero;
    CHECK(zero.degree() == 0);
    CHECK(zero.coeff(0) == cpx(0.0));
    CHECK(zero.coeff(-3) == cpx(0.0));

    AnalyticSymbol m = AnalyticSymbol::monomial(3, cpx(0, 2));
    CHECK(m.degree() == 3);
    CHECK(m.coeff(3) == cpx(0, 2));
    CHECK(m.coeff(2) == cpx(0.0));
    CHECK_THROWS_AS(AnalyticSymbol::monomial(-1), std::invalid_argument);

    // eval at a circle point: z^3 * 2i at z = i gives 2i * (-i) = 2
    CHECK(std::abs(m.eval(cpx(0, 1)) - cpx(2, 0)) < 1e-15);

    m.set_coeff(5, cpx(1, 0));
    CHECK(m.degree() == 5);
    m += AnalyticSymbol::monomial(5, cpx(-1, 0));
    CHECK(m.degree() == 3);
}

TEST_CASE("trig polynomial frequency window") {
    TrigPolynomial t(-2, {cpx(1, 0), cpx(0, 0), cpx(2, 0), cpx(0, 0), cpx(1, 0)});
    CHECK(t.lo() == -2);
    CHECK(t.hi() == 2);
    CHECK(t.max_abs_freq() == 2);
    CHECK(t.coeff(-2) == cpx(1, 0));
    CHECK(t.coeff(5) == cpx(0, 0));
    CHECK(t.real_valued());

    t.set_coeff(-2, cpx(0, 1));
    CHECK_FALSE(t.real_valued());

    // 1 + 2cos(2t) at t = 0 is 3
    TrigPolynomial u(-2, {cpx(1, 0), cpx(0, 0), cpx(1, 0), cpx(0, 0), cpx(1, 0)});
    CHECK(std::abs(u.eval(cpx(1, 0)) - cpx(3, 0)) < 1e-14);
}

TEST_CASE("smooth cutoff identities") {
    CHECK(smooth_sigma(-1.0) == 0.0);
    CHECK(smooth_sigma(0.0) == 0.0);
    CHECK(smooth_sigma(1.0) == doctest::Approx(std::exp(-1.0)));

    for (double t : {0.1, 0.3, 0.5, 0.9})
        CHECK(smooth_step(t) + smooth_step(1.0 - t) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(smooth_step(0.5) == doctest::Approx(0.5));

    CHECK(omega_plateau_eval(0.0) == 1.0);
    CHECK(omega_plateau_eval(1.0) == 1.0);
    CHECK(omega_plateau_eval(-0.7) == 1.0);
    CHECK(omega_plateau_eval(2.0) == 0.0);
    CHECK(omega_plateau_eval(2.4) == 0.0);
    double mid = omega_plateau_eval(1.5);
    CHECK(mid > 0.0);
    CHECK(mid < 1.0);

    CHECK(v_bump_eval(1.0) == doctest::Approx(1.0));
    CHECK(v_bump_eval(0.5) == 0.0);
    CHECK(v_bump_eval(2.0) == 0.0);
    CHECK(v_bump_eval(0.25) == 0.0);
    CHECK(v_bump_eval(1.3) > 0.0);
}

TEST_CASE("dyadic weights partition every frequency") {
    CHECK_THROWS_AS(dyadic_weight(-1, 0), std::invalid_argument);
    CHECK(dyadic_weight(0, 0) == 1.0);
    CHECK(dyadic_weight(1, 0) == 1.0);
    CHECK(dyadic_weight(0, 1) == 0.0);
    // exact powers of two sit on a single block
    for (int n = 1; n <= 10; ++n) {
        CHECK(dyadic_weight(1L << n, n) == 1.0);
        CHECK(dyadic_weight(1L << n, n + 1) == 0.0);
    }
    // every k splits over at most two blocks and the weights sum to one exactly
    for (long k = 0; k <= 3000; ++k) {
        double total = 0.0;
        int nonzero = 0;
        for (int n = 0; n <= 14; ++n) {
            double w = dyadic_weight(k, n);
            if (w != 0.0) ++nonzero;
            total += w;
        }
        CHECK(total == 1.0);
        CHECK(nonzero <= 2);
    }
}

TEST_CASE("dyadic blocks reconstruct the symbol") {
    detail::DetRng rng(3, 7);
    TrigPolynomial f(-40, std::vector<cpx>(81));
    for (long k = -40; k <= 40; ++k) f.set_coeff(k, detail::random_coeff(rng));

    TrigPolynomial sum;
    for (int n = -7; n <= 7; ++n) sum += dyadic_block(f, n);
    for (long k = -40; k <= 40; ++k)
        CHECK(std::abs(sum.coeff(k) - f.coeff(k)) < 1e-12);

    // block 0 holds exactly the frequencies |k| <= 1
    TrigPolynomial b0 = dyadic_block(f, 0);
    CHECK(b0.coeff(0) == f.coeff(0));
    CHECK(b0.coeff(1) == f.coeff(1));
    CHECK(b0.coeff(-1) == f.coeff(-1));
    CHECK(b0.coeff(2) == cpx(0.0));

    // negative blocks mirror positive frequencies
    TrigPolynomial b2 = dyadic_block(f, 2);
    TrigPolynomial bm2 = dyadic_block(f, -2);
    CHECK(std::abs(b2.coeff(4) - f.coeff(4) * dyadic_weight(4, 2)) < 1e-15);
    CHECK(std::abs(bm2.coeff(-4) - f.coeff(-4) * dyadic_weight(4, 2)) < 1e-15);
    CHECK(b2.coeff(-4) == cpx(0.0));
}

TEST_CASE("analytic dyadic block matches the two-sided one") {
    detail::DetRng rng(9, 1);
    AnalyticSymbol f = detail::random_poly(33, rng);
    for (int n = 0; n <= 6; ++n) {
        AnalyticSymbol a = dyadic_block(f, n);
        TrigPolynomial t = dyadic_block(TrigPolynomial(f), n);
        for (long k = 0; k <= 40; ++k) CHECK(std::abs(a.coeff(k) - t.coeff(k)) < 1e-15);
    }
}

TEST_CASE("hankel and toeplitz builders index correctly") {
    AnalyticSymbol psi({cpx(1, 0), cpx(2, 0), cpx(3, 0), cpx(4, 0)});
    ComplexMatrix h = hankel_matrix(psi, 3, 2);
    REQUIRE(h.rows() == 3);
    REQUIRE(h.cols() == 2);
    CHECK(h(0, 0) == cpx(1, 0));
    CHECK(h(1, 1) == cpx(3, 0));
    CHECK(h(2, 1) == cpx(4, 0));
    CHECK(h(2, 0) == cpx(3, 0));

    TrigPolynomial t(-1, {cpx(5, 0), cpx(6, 0), cpx(7, 0)});
    ComplexMatrix m = toeplitz_matrix(t, 3);
    CHECK(m(0, 0) == cpx(6, 0));
    CHECK(m(1, 0) == cpx(7, 0));  // j - k = 1
    CHECK(m(0, 1) == cpx(5, 0));  // j - k = -1
    CHECK(m(2, 0) == cpx(0, 0));

    ComplexMatrix r = toeplitz_matrix(t, 2, 4);
    REQUIRE(r.rows() == 2);
    REQUIRE(r.cols() == 4);
    CHECK(r(1, 0) == cpx(7, 0));
    CHECK(r(0, 3) == cpx(0, 0));
}

TEST_CASE("hankel split halves recompose the window") {
    detail::DetRng rng(21, 4);
    AnalyticSymbol psi = detail::random_poly(9, rng);
    auto [low, rest] = split_hankel_lower(psi, 6);
    ComplexMatrix whole = hankel_matrix(psi, 6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            CHECK(low(i, j) + rest(i, j) == whole(i, j));
            if (i <= j) CHECK(low(i, j) == cpx(0.0));
        }
}

TEST_CASE("sampled polynomial takes profile values at k/m") {
    SmoothCutoffSpec omega = SmoothCutoffSpec::omega_plateau();
    long m = 8;
    TrigPolynomial f = sampled_polynomial(omega, m);
    CHECK(f.coeff(0) == cpx(1, 0));
    CHECK(f.coeff(m) == cpx(1, 0));                       // omega(1) = 1
    CHECK(std::abs(f.coeff(12) - cpx(omega_plateau_eval(1.5), 0)) < 1e-15);
    CHECK(f.coeff(2 * m) == cpx(0.0));
    CHECK(f.coeff(-m) == cpx(1, 0));
    CHECK(f.max_abs_freq() < 2 * m);
}

TEST_CASE("dirichlet kernel and its normalized square") {
    TrigPolynomial d = dirichlet_kernel(4);
    for (long k = -4; k <= 4; ++k) CHECK(d.coeff(k) == cpx(1, 0));
    CHECK(d.coeff(5) == cpx(0.0));
    // l2 norm is sqrt(2n+1)
    CHECK(lp_norm(d, 2.0).value == doctest::Approx(3.0).epsilon(1e-9));
    // sup is attained at z = 1
    CHECK(sup_norm(d) == doctest::Approx(9.0).epsilon(1e-9));

    TrigPolynomial q = fejer_square(4);
    CHECK(std::abs(q.coeff(0) - cpx(1, 0)) < 1e-12);  // central coefficient is 1
    CHECK(lp_norm(q, 1.0).value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(q.eval(cpx(1, 0)) - cpx(9, 0)) < 1e-10);
}

TEST_CASE("phi witness is normalized in l1 with unit center coefficient") {
    for (int n : {1, 2, 3}) {
        AnalyticSymbol phi = phi_witness(n, 1);
        long center = 1L << (2 * n);  // 4^n
        CHECK(std::abs(phi.coeff(center) - cpx(1, 0)) < 1e-12);
        double l1 = lp_norm(phi, 1.0).value;
        CHECK(l1 == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(phi.degree() == center + (1L << (n + 1)));
    }
    // higher powers only shrink the l1 norm
    AnalyticSymbol phi2 = phi_witness(2, 2);
    CHECK(lp_norm(phi2, 1.0).value <= 1.0 + 1e-6);
}

TEST_CASE("lp quadrature closed forms") {
    AnalyticSymbol mono = AnalyticSymbol::monomial(12);
    for (double p : {0.5, 1.0, 2.0})
        CHECK(lp_norm(mono, p).value == doctest::Approx(1.0).epsilon(1e-12));

    // |1 + z| integrates to 4/pi
    AnalyticSymbol one_plus_z({cpx(1, 0), cpx(1, 0)});
    LpResult r = lp_norm(one_plus_z, 1.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(4.0 / M_PI).epsilon(1e-7));

    // l2 equals the coefficient l2 regardless of phases
    detail::DetRng rng(31, 2);
    AnalyticSymbol f = detail::random_poly(20, rng);
    double c2 = 0.0;
    for (long k = 0; k <= 20; ++k) c2 += std::norm(f.coeff(k));
    CHECK(lp_norm(f, 2.0).value == doctest::Approx(std::sqrt(c2)).epsilon(1e-10));
}

TEST_CASE("backward shift and arithmetic restriction") {
    AnalyticSymbol psi({cpx(1, 0), cpx(2, 0), cpx(3, 0), cpx(4, 0), cpx(5, 0)});
    AnalyticSymbol s1 = backward_shift(psi);
    CHECK(s1.coeff(0) == cpx(2, 0));
    CHECK(s1.coeff(3) == cpx(5, 0));
    CHECK(s1.degree() == 3);
    AnalyticSymbol s3 = backward_shift(psi, 3);
    CHECK(s3.coeff(0) == cpx(4, 0));
    CHECK(s3.degree() == 1);

    AnalyticSymbol r = arithmetic_restriction(psi, 2, 1);  // coefficients at 1, 3
    CHECK(r.coeff(0) == cpx(2, 0));
    CHECK(r.coeff(1) == cpx(4, 0));
    CHECK(r.degree() == 1);
}

TEST_CASE("gap cover accepts geometric and rejects arithmetic spacing") {
    GapProfile g = lacunary_cover({1, 2, 4, 8, 16, 32}, 2.0, 1);
    REQUIRE(!g.xi.empty());
    CHECK(g.d > 1.0);
    CHECK(g.D > 1.0);
    // every input frequency lands in some interval [xi_k, eta_k)
    for (long f : {1L, 2L, 4L, 8L, 16L, 32L}) {
        bool covered = false;
        for (std::size_t k = 0; k < g.xi.size(); ++k)
            if (f >= g.xi[k] && f < g.eta[k]) covered = true;
        CHECK(covered);
    }

    CHECK_THROWS_AS(lacunary_cover({1, 2, 3, 4, 5}, 2.0, 1), std::invalid_argument);
    // two interleaved geometric strands pass with N = 2
    CHECK_NOTHROW(lacunary_cover({1, 2, 3, 9, 27}, 3.0, 2));
}

TEST_CASE("lp grid doubling converges on kernels with zeros") {
    // |f|^p has corners at zeros of f; the quadrature must still settle
    for (double p : {0.7, 1.0}) {
        LpResult r = lp_norm(dirichlet_kernel(8), p);
        CHECK(r.converged);
        CHECK(r.last_rel_change < 1e-8);
    }
}
