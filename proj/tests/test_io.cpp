#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <string>

#include "slab/io.hpp"

#include "../src/det_rng.hpp"
#include "../src/lab_util.hpp"

using namespace slab;

TEST_CASE("doubles survive the text round trip exactly") {
    for (double v : {0.0, -1.0, 1.0 / 3.0, M_PI, 1e-300, 6.02214076e23, -0.1}) {
        double back = std::stod(format_double(v));
        CHECK(back == v);
    }
}

TEST_CASE("matrix round trip through a stream") {
    detail::DetRng rng(19, 0);
    ComplexMatrix m = detail::random_matrix(3, 4, rng);
    std::stringstream ss;
    write_matrix(ss, m);
    ComplexMatrix back = read_matrix(ss);
    REQUIRE(back.rows() == 3);
    REQUIRE(back.cols() == 4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(back(i, j) == m(i, j));
}

TEST_CASE("matrix reader tolerates comments and rejects junk") {
    std::istringstream good("# window dump\n2 2\n1 0\n# middle note\n0 0\n0 0\n0 -1\n");
    ComplexMatrix m = read_matrix(good);
    CHECK(m(0, 0) == cpx(1, 0));
    CHECK(m(1, 1) == cpx(0, -1));

    std::istringstream short_input("2 2\n1 0\n");
    CHECK_THROWS_AS(read_matrix(short_input), std::runtime_error);
    std::istringstream bad_header("two columns\n");
    CHECK_THROWS_AS(read_matrix(bad_header), std::runtime_error);
    std::istringstream bad_entry("1 1\nnot numbers\n");
    CHECK_THROWS_AS(read_matrix(bad_entry), std::runtime_error);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_matrix(empty), std::runtime_error);
}

TEST_CASE("symbol round trip keeps sparse frequencies") {
    TrigPolynomial f(-5, std::vector<cpx>(11));
    f.set_coeff(-5, cpx(0.25, -1));
    f.set_coeff(0, cpx(1e-17, 0));
    f.set_coeff(5, cpx(0, 3));
    std::stringstream ss;
    write_symbol(ss, f);
    TrigPolynomial back = read_symbol(ss);
    CHECK(back.coeff(-5) == f.coeff(-5));
    CHECK(back.coeff(0) == f.coeff(0));
    CHECK(back.coeff(5) == f.coeff(5));
    CHECK(back.coeff(2) == cpx(0.0));
    CHECK(back.lo() == -5);
    CHECK(back.hi() == 5);
}

TEST_CASE("symbol reader edge cases") {
    std::istringstream empty("# nothing here\n");
    TrigPolynomial zero = read_symbol(empty);
    CHECK(zero.max_abs_freq() == 0);
    CHECK(zero.coeff(0) == cpx(0.0));

    std::istringstream dup("3 1 0\n3 2 0\n");
    CHECK_THROWS_AS(read_symbol(dup), std::runtime_error);
    std::istringstream bad("1 2\n");
    CHECK_THROWS_AS(read_symbol(bad), std::runtime_error);
}

TEST_CASE("analytic reader rejects negative frequencies") {
    std::istringstream ok("0 1 0\n7 0 -2\n");
    AnalyticSymbol psi = read_analytic_symbol(ok);
    CHECK(psi.degree() == 7);
    CHECK(psi.coeff(7) == cpx(0, -2));

    std::istringstream neg("-1 1 0\n2 1 0\n");
    CHECK_THROWS_AS(read_analytic_symbol(neg), std::runtime_error);
}

TEST_CASE("measure round trip") {
    DiscreteMeasure mu;
    mu.theta = {0.0, 2.0943951023931953, 4.5};
    mu.w = {cpx(1, 0), cpx(-0.5, 0.25), cpx(0, 1e-8)};
    std::stringstream ss;
    write_measure(ss, mu);
    DiscreteMeasure back = read_measure(ss);
    REQUIRE(back.theta.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back.theta[i] == mu.theta[i]);
        CHECK(back.w[i] == mu.w[i]);
    }
}

TEST_CASE("file helpers create and reread") {
    std::string dir = "io_test_tmp";
    std::remove((dir + ".mat").c_str());
    detail::DetRng rng(23, 1);
    ComplexMatrix m = detail::random_matrix(2, 2, rng);
    write_matrix_file(dir + ".mat", m);
    ComplexMatrix back = read_matrix_file(dir + ".mat");
    CHECK(back(1, 1) == m(1, 1));
    std::remove((dir + ".mat").c_str());

    CHECK_THROWS_AS(read_matrix_file("definitely_missing_file.mat"), std::runtime_error);
    TrigPolynomial f(0, {cpx(1, 0), cpx(2, 0)});
    write_symbol_file(dir + ".sym", f);
    CHECK(read_symbol_file(dir + ".sym").coeff(1) == cpx(2, 0));
    CHECK(read_analytic_symbol_file(dir + ".sym").degree() == 1);
    std::remove((dir + ".sym").c_str());

    DiscreteMeasure mu;
    mu.theta = {1.0};
    mu.w = {cpx(2, 0)};
    write_measure_file(dir + ".meas", mu);
    CHECK(read_measure_file(dir + ".meas").w[0] == cpx(2, 0));
    std::remove((dir + ".meas").c_str());
}
