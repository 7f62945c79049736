#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "lab_util.hpp"
#include "slab/lab.hpp"

namespace slab {

namespace {

using detail::DetRng;
using detail::hankel_window;
using detail::plateau_atom;
using detail::random_matrix;
using detail::random_measure;
using detail::random_poly;

template <typename F>
void run_check(VerifyReport& rep, const std::string& name, F&& body) {
    VerifyCheck c;
    c.name = name;
    try {
        std::string detail;
        c.pass = body(detail);
        c.detail = detail;
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    rep.checks.push_back(std::move(c));
}

bool close_rel(double a, double b, double tol) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) <= tol * scale;
}

std::string pair_detail(double got, double want) {
    return "got " + format_real(got) + ", want " + format_real(want);
}

ComplexMatrix identity_matrix(std::size_t n) {
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = cpx(1.0);
    return a;
}

AscentOptions light_ascent() {
    AscentOptions o;
    o.max_sweeps = 8;
    o.golden_iters = 12;
    return o;
}

double frobenius(const ComplexMatrix& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) acc += std::norm(a(i, j));
    return std::sqrt(acc);
}

ComplexMatrix random_unitary_conjugate(const ComplexMatrix& a, DetRng& rng, bool left) {
    // product of random Givens rotations and phases applied to rows (or cols)
    std::size_t n = left ? a.rows() : a.cols();
    ComplexMatrix u = identity_matrix(n);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        double th = 2.0 * M_PI * rng.uniform();
        double ph = 2.0 * M_PI * rng.uniform();
        ComplexMatrix g = identity_matrix(n);
        g(r, r) = std::cos(th);
        g(r, r + 1) = -std::sin(th) * std::polar(1.0, ph);
        g(r + 1, r) = std::sin(th) * std::polar(1.0, -ph);
        g(r + 1, r + 1) = std::cos(th);
        ComplexMatrix t(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                cpx acc(0.0);
                for (std::size_t k = 0; k < n; ++k) acc += g(i, k) * u(k, j);
                t(i, j) = acc;
            }
        u = t;
    }
    std::size_t rows = a.rows(), cols = a.cols();
    ComplexMatrix out(rows, cols);
    if (left) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                cpx acc(0.0);
                for (std::size_t k = 0; k < rows; ++k) acc += u(i, k) * a(k, j);
                out(i, j) = acc;
            }
    } else {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                cpx acc(0.0);
                for (std::size_t k = 0; k < cols; ++k) acc += a(i, k) * u(k, j);
                out(i, j) = acc;
            }
    }
    return out;
}

// ---------------------------------------------------------------- core ----

VerifyReport verify_core() {
    VerifyReport rep;
    rep.suite = "core";

    run_check(rep, "p2-matches-frobenius", [](std::string& d) {
        DetRng rng(11, 1);
        for (int t = 0; t < 20; ++t) {
            std::size_t r = 1 + static_cast<std::size_t>(rng.uniform() * 10.0);
            std::size_t c = 1 + static_cast<std::size_t>(rng.uniform() * 8.0);
            ComplexMatrix a = random_matrix(r, c, rng);
            double s2 = schatten_norm(a, 2.0).value;
            double fr = frobenius(a);
            if (!close_rel(s2, fr, 1e-10)) {
                d = pair_detail(s2, fr);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "p-triangle", [](std::string& d) {
        DetRng rng(11, 2);
        for (double p : {1.0 / 3.0, 0.5, 1.0}) {
            for (int t = 0; t < 20; ++t) {
                std::size_t r = 1 + static_cast<std::size_t>(rng.uniform() * 10.0);
                std::size_t c = 1 + static_cast<std::size_t>(rng.uniform() * 10.0);
                ComplexMatrix a = random_matrix(r, c, rng);
                ComplexMatrix b = random_matrix(r, c, rng);
                double lhs = std::pow(schatten_norm(a + b, p).value, p);
                double rhs = std::pow(schatten_norm(a, p).value, p) +
                             std::pow(schatten_norm(b, p).value, p);
                if (lhs > rhs * (1.0 + 1e-9)) {
                    d = "p=" + format_real(p) + " " + pair_detail(lhs, rhs);
                    return false;
                }
            }
        }
        return true;
    });

    run_check(rep, "unitary-invariance", [](std::string& d) {
        DetRng rng(11, 3);
        for (int t = 0; t < 12; ++t) {
            ComplexMatrix a = random_matrix(8, 8, rng);
            ComplexMatrix b = random_unitary_conjugate(a, rng, true);
            b = random_unitary_conjugate(b, rng, false);
            for (double p : {0.5, 1.0, 2.0}) {
                double na = schatten_norm(a, p).value;
                double nb = schatten_norm(b, p).value;
                if (!close_rel(na, nb, 1e-9)) {
                    d = "p=" + format_real(p) + " " + pair_detail(nb, na);
                    return false;
                }
            }
        }
        return true;
    });

    run_check(rep, "entrywise-dominates", [](std::string& d) {
        DetRng rng(11, 4);
        for (int t = 0; t < 40; ++t) {
            std::size_t r = 1 + static_cast<std::size_t>(rng.uniform() * 8.0);
            std::size_t c = 1 + static_cast<std::size_t>(rng.uniform() * 8.0);
            ComplexMatrix a = random_matrix(r, c, rng);
            for (double e : {1.0 / 3.0, 0.5, 1.0, 1.5, 2.0}) {
                double lhs = schatten_norm(a, e).value;
                double rhs = entrywise_lr_norm(a, e);
                if (lhs > rhs * (1.0 + 1e-9)) {
                    d = "r=" + format_real(e) + " " + pair_detail(lhs, rhs);
                    return false;
                }
            }
        }
        return true;
    });

    run_check(rep, "entrywise-range-guard", [](std::string& d) {
        ComplexMatrix a = identity_matrix(2);
        bool threw_high = false, threw_low = false;
        try {
            entrywise_lr_norm(a, 2.5);
        } catch (const std::invalid_argument&) {
            threw_high = true;
        }
        try {
            entrywise_lr_norm(a, 0.0);
        } catch (const std::invalid_argument&) {
            threw_low = true;
        }
        if (!threw_high || !threw_low) {
            d = "out-of-range r accepted";
            return false;
        }
        return true;
    });

    run_check(rep, "tiny-value-floor", [](std::string& d) {
        ComplexMatrix a(2, 2);
        a(0, 0) = cpx(1.0);
        a(1, 1) = cpx(1e-20);
        SchattenValue v = schatten_norm(a, 0.5);
        if (v.floored == 0) {
            d = "floor metadata not set";
            return false;
        }
        if (!close_rel(v.value, 1.0, 1e-9)) {
            d = pair_detail(v.value, 1.0);
            return false;
        }
        return true;
    });

    run_check(rep, "homogeneity", [](std::string& d) {
        DetRng rng(11, 5);
        ComplexMatrix a = random_matrix(6, 5, rng);
        for (double p : {1.0 / 3.0, 0.5, 1.0}) {
            double base = schatten_norm(a, p).value;
            ComplexMatrix b = a;
            b *= cpx(3.0);
            double scaled = schatten_norm(b, p).value;
            if (!close_rel(scaled, 3.0 * base, 1e-12)) {
                d = "p=" + format_real(p) + " " + pair_detail(scaled, 3.0 * base);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "small-svd-agrees", [](std::string& d) {
        DetRng rng(11, 6);
        for (int t = 0; t < 50; ++t) {
            std::size_t r = 1 + static_cast<std::size_t>(rng.uniform() * 3.0);
            std::size_t c = 1 + static_cast<std::size_t>(rng.uniform() * 3.0);
            ComplexMatrix a = random_matrix(r, c, rng);
            std::vector<double> s1 = singular_values(a);
            std::vector<double> s2(std::min(r, c));
            small_singular_values(a, s2.data());
            if (s1.size() != s2.size()) {
                d = "size mismatch";
                return false;
            }
            for (std::size_t i = 0; i < s1.size(); ++i)
                if (!close_rel(s1[i], s2[i], 1e-9)) {
                    d = pair_detail(s2[i], s1[i]);
                    return false;
                }
        }
        return true;
    });

    run_check(rep, "rank-one-outer", [](std::string& d) {
        DetRng rng(11, 7);
        std::vector<cpx> u(5), v(4);
        double nu = 0.0, nv = 0.0;
        for (auto& z : u) {
            z = detail::random_coeff(rng);
            nu += std::norm(z);
        }
        for (auto& z : v) {
            z = detail::random_coeff(rng);
            nv += std::norm(z);
        }
        double want = std::sqrt(nu) * std::sqrt(nv);
        for (double p : {0.5, 1.0, 2.0}) {
            double got = schatten_norm(outer(u, v), p).value;
            if (!close_rel(got, want, 1e-10)) {
                d = "p=" + format_real(p) + " " + pair_detail(got, want);
                return false;
            }
        }
        return true;
    });

    return rep;
}

// ------------------------------------------------------------- symbols ----

VerifyReport verify_symbols() {
    VerifyReport rep;
    rep.suite = "symbols";

    run_check(rep, "dyadic-partition-exact", [](std::string& d) {
        for (long k = 1; k <= 4096; ++k) {
            double sum = 0.0;
            for (int n = 0; n <= 14; ++n) sum += dyadic_weight(k, n);
            if (sum != 1.0) {
                d = "k=" + std::to_string(k) + " sum=" + format_real(sum);
                return false;
            }
        }
        for (long k : {100000L, 1048573L, 1048576L}) {
            double sum = 0.0;
            for (int n = 0; n <= 22; ++n) sum += dyadic_weight(k, n);
            if (sum != 1.0) {
                d = "k=" + std::to_string(k) + " sum=" + format_real(sum);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "smooth-step-complement", [](std::string& d) {
        for (int i = 0; i <= 200; ++i) {
            double t = static_cast<double>(i) / 200.0;
            double s = smooth_step(t) + smooth_step(1.0 - t);
            if (std::abs(s - 1.0) > 1e-12) {
                d = "t=" + format_real(t) + " sum=" + format_real(s);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "one-plus-z-l1", [](std::string& d) {
        AnalyticSymbol f({cpx(1.0), cpx(1.0)});
        double got = lp_norm(f, 1.0).value;
        double want = 4.0 / M_PI;
        if (!close_rel(got, want, 1e-6)) {
            d = pair_detail(got, want);
            return false;
        }
        return true;
    });

    run_check(rep, "dirichlet-l2", [](std::string& d) {
        for (long n : {1L, 4L, 16L, 64L}) {
            double got = lp_norm(dirichlet_kernel(n), 2.0).value;
            double want = std::sqrt(2.0 * static_cast<double>(n) + 1.0);
            if (!close_rel(got, want, 1e-9)) {
                d = "n=" + std::to_string(n) + " " + pair_detail(got, want);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "dirichlet-sup", [](std::string& d) {
        for (long n : {1L, 8L, 32L}) {
            double got = sup_norm(dirichlet_kernel(n));
            double want = 2.0 * static_cast<double>(n) + 1.0;
            if (!close_rel(got, want, 1e-6)) {
                d = "n=" + std::to_string(n) + " " + pair_detail(got, want);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "dirichlet-lp-lower", [](std::string& d) {
        for (double p : {0.6, 0.75, 0.9})
            for (long n : {4L, 16L, 64L}) {
                double val = lp_norm(dirichlet_kernel(n), p).value;
                double mass = std::pow(val, p);
                double bound = std::pow(static_cast<double>(n), p - 1.0) / 3.0;
                if (mass < bound) {
                    d = "p=" + format_real(p) + " n=" + std::to_string(n) + " " +
                        pair_detail(mass, bound);
                    return false;
                }
            }
        return true;
    });

    run_check(rep, "builder-entries", [](std::string& d) {
        AnalyticSymbol psi({cpx(3.0), cpx(0.0, 2.0), cpx(-1.0), cpx(5.0)});
        ComplexMatrix h = hankel_matrix(psi, 3, 2);
        if (h(1, 1) != psi.coeff(2) || h(2, 1) != psi.coeff(3) || h(0, 0) != psi.coeff(0)) {
            d = "hankel entries off";
            return false;
        }
        TrigPolynomial t(-1, {cpx(7.0), cpx(1.0), cpx(0.0, -4.0)});
        ComplexMatrix tm = toeplitz_matrix(t, 3);
        if (tm(0, 1) != t.coeff(-1) || tm(2, 1) != t.coeff(1) || tm(1, 1) != t.coeff(0)) {
            d = "toeplitz entries off";
            return false;
        }
        return true;
    });

    run_check(rep, "split-hankel-parts", [](std::string& d) {
        DetRng rng(13, 1);
        AnalyticSymbol psi = random_poly(9, rng);
        std::size_t n = 6;
        auto [low, rest] = split_hankel_lower(psi, n);
        ComplexMatrix full = hankel_matrix(psi, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                cpx sum = low(i, j) + rest(i, j);
                if (std::abs(sum - full(i, j)) > 1e-15) {
                    d = "parts do not sum back";
                    return false;
                }
                if (i <= j && low(i, j) != cpx(0.0)) {
                    d = "lower part leaks onto/above the diagonal";
                    return false;
                }
            }
        return true;
    });

    run_check(rep, "block-reconstruction", [](std::string& d) {
        DetRng rng(13, 2);
        TrigPolynomial f(-200, [&] {
            std::vector<cpx> c(401);
            for (auto& z : c) z = detail::random_coeff(rng);
            return c;
        }());
        TrigPolynomial sum(0, {cpx(0.0)});
        for (int n = -9; n <= 9; ++n) sum += dyadic_block(f, n);
        for (long k = -200; k <= 200; ++k)
            if (std::abs(sum.coeff(k) - f.coeff(k)) > 1e-12) {
                d = "k=" + std::to_string(k);
                return false;
            }
        return true;
    });

    run_check(rep, "sampled-profile-entries", [](std::string& d) {
        long m = 16;
        TrigPolynomial f = sampled_polynomial(SmoothCutoffSpec::v_partition(), m);
        for (long k = -2 * m; k <= 2 * m; ++k) {
            double want = v_bump_eval(static_cast<double>(k) / static_cast<double>(m));
            if (std::abs(f.coeff(k) - cpx(want)) > 1e-15) {
                d = "k=" + std::to_string(k);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "integer-witness-normalized", [](std::string& d) {
        for (auto [n, N] : {std::pair<int, int>{3, 1}, {5, 1}, {4, 2}}) {
            AnalyticSymbol phi = phi_witness(n, N);
            double l1 = lp_norm(phi, 1.0).value;
            if (l1 > 1.0 + 1e-6) {
                d = "n=" + std::to_string(n) + " N=" + std::to_string(N) +
                    " l1=" + format_real(l1);
                return false;
            }
            if (N == 1) {
                long center = 1L << (2 * n);
                if (std::abs(phi.coeff(center) - cpx(1.0)) > 1e-12) {
                    d = "center coefficient != 1";
                    return false;
                }
            }
        }
        return true;
    });

    run_check(rep, "fejer-square-l1", [](std::string& d) {
        for (long n : {2L, 8L, 32L}) {
            double got = lp_norm(fejer_square(n), 1.0).value;
            if (!close_rel(got, 1.0, 1e-9)) {
                d = "n=" + std::to_string(n) + " " + pair_detail(got, 1.0);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "lacunary-cover-paths", [](std::string& d) {
        GapProfile prof = lacunary_cover({1, 2, 4, 8, 16}, 2.0, 1);
        if (prof.xi.empty()) {
            d = "geometric sequence not covered";
            return false;
        }
        GapProfile two = lacunary_cover({1, 2, 3, 9, 27}, 3.0, 2);
        (void)two;
        bool threw = false;
        try {
            lacunary_cover({1, 2, 3, 4, 5}, 2.0, 1);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        if (!threw) {
            d = "dense spectrum accepted as one geometric chain";
            return false;
        }
        return true;
    });

    run_check(rep, "shift-and-restriction", [](std::string& d) {
        AnalyticSymbol psi({cpx(1.0), cpx(2.0), cpx(3.0), cpx(4.0), cpx(5.0)});
        AnalyticSymbol sh = backward_shift(psi, 2);
        if (sh.degree() != 2 || sh.coeff(0) != cpx(3.0) || sh.coeff(2) != cpx(5.0)) {
            d = "shift mismatch";
            return false;
        }
        AnalyticSymbol even = arithmetic_restriction(psi, 2, 0);
        if (even.coeff(0) != cpx(1.0) || even.coeff(1) != cpx(3.0) || even.coeff(2) != cpx(5.0)) {
            d = "restriction mismatch";
            return false;
        }
        return true;
    });

    run_check(rep, "lp-grid-converged", [](std::string& d) {
        LpResult r = lp_norm(dirichlet_kernel(8), 0.7);
        if (!r.converged) {
            d = "grid refinement did not settle";
            return false;
        }
        return true;
    });

    return rep;
}

// --------------------------------------------------------------- besov ----

VerifyReport verify_besov() {
    VerifyReport rep;
    rep.suite = "besov";

    run_check(rep, "power-monomial-weight", [](std::string& d) {
        for (int n : {2, 5})
            for (double s : {0.5, 1.0})
                for (double p : {0.5, 1.0})
                    for (double q : {0.5, std::numeric_limits<double>::infinity()}) {
                        AnalyticSymbol f = AnalyticSymbol::monomial(1L << n);
                        double got = besov_norm(f, BesovParams(s, p, q));
                        double want = std::pow(2.0, n * s);
                        if (!close_rel(got, want, 1e-9)) {
                            d = "n=" + std::to_string(n) + " " + pair_detail(got, want);
                            return false;
                        }
                    }
        return true;
    });

    run_check(rep, "first-monomial", [](std::string& d) {
        double got = besov_norm(AnalyticSymbol::monomial(1), BesovParams(0.7, 0.5, 1.0));
        if (!close_rel(got, 1.0, 1e-12)) {
            d = pair_detail(got, 1.0);
            return false;
        }
        return true;
    });

    run_check(rep, "homogeneity", [](std::string& d) {
        DetRng rng(17, 1);
        AnalyticSymbol f = random_poly(40, rng);
        AnalyticSymbol g = f;
        g *= cpx(3.0);
        BesovParams params(0.5, 0.5, 0.75);
        double a = besov_norm(f, params), b = besov_norm(g, params);
        if (!close_rel(b, 3.0 * a, 1e-12)) {
            d = pair_detail(b, 3.0 * a);
            return false;
        }
        return true;
    });

    run_check(rep, "q-triangle", [](std::string& d) {
        DetRng rng(17, 2);
        for (double q : {0.5, 1.0}) {
            BesovParams params(0.5, q, q);
            for (int t = 0; t < 8; ++t) {
                AnalyticSymbol f = random_poly(30, rng);
                AnalyticSymbol g = random_poly(30, rng);
                AnalyticSymbol h = f;
                h += g;
                double lhs = std::pow(besov_norm(h, params), q);
                double rhs =
                    std::pow(besov_norm(f, params), q) + std::pow(besov_norm(g, params), q);
                if (lhs > rhs * (1.0 + 1e-9)) {
                    d = "q=" + format_real(q) + " " + pair_detail(lhs, rhs);
                    return false;
                }
            }
        }
        return true;
    });

    run_check(rep, "q-monotonicity", [](std::string& d) {
        DetRng rng(17, 3);
        AnalyticSymbol f = random_poly(50, rng);
        double prev = std::numeric_limits<double>::infinity();
        for (double q : {0.5, 1.0, 2.0, std::numeric_limits<double>::infinity()}) {
            double cur = besov_norm(f, BesovParams(0.5, 1.0, q));
            if (cur > prev * (1.0 + 1e-9)) {
                d = "q=" + format_real(q) + " " + pair_detail(cur, prev);
                return false;
            }
            prev = cur;
        }
        return true;
    });

    run_check(rep, "table-consistency", [](std::string& d) {
        DetRng rng(17, 4);
        AnalyticSymbol f = random_poly(60, rng);
        BesovParams params(0.4, 0.8, 1.3);
        std::vector<BesovBlockRow> rows = besov_block_table(f, params);
        std::vector<double> weighted;
        for (const auto& r : rows) weighted.push_back(r.weighted);
        double from_table = lp_combine(weighted, params.q);
        double direct = besov_norm(f, params);
        if (!close_rel(from_table, direct, 1e-12)) {
            d = pair_detail(from_table, direct);
            return false;
        }
        return true;
    });

    run_check(rep, "three-block-scaffold", [](std::string& d) {
        DetRng rng(17, 5);
        std::vector<cpx> c(33, cpx(0.0));
        for (long k = 8; k <= 32; ++k) c[static_cast<std::size_t>(k)] = detail::random_coeff(rng);
        AnalyticSymbol f{std::move(c)};
        BesovParams params(0.5, 0.5, 0.5);
        double norm = besov_norm(f, params);
        // crude per-block envelope: each weighted block is at most the whole norm
        // and the norm is at most the q-sum of three blocks at the top weight
        double lp = lp_norm(f, params.p).value;
        double top = std::pow(2.0, 5.0 * params.s) * lp;
        double lo = std::pow(2.0, 3.0 * params.s) * lp;
        double hi_bound = std::pow(3.0, 1.0 / params.q) * top;
        double ratio_hi = norm / hi_bound;
        if (norm > hi_bound * 16.0 || norm * 16.0 < lo / 16.0) {
            d = "norm=" + format_real(norm) + " envelope=" + format_real(hi_bound) +
                " ratio=" + format_real(ratio_hi);
            return false;
        }
        return true;
    });

    run_check(rep, "lacunary-partial-sums", [](std::string& d) {
        PExponent half(0.5);  // conjugate exponent 1: plain weighted sums
        double partial = 0.0;
        for (long J = 1; J <= 8; ++J) {
            LacunarySymbolSpec spec;
            for (long j = 1; j <= J; ++j) {
                spec.frequencies.push_back(1L << j);
                spec.amplitudes.push_back(
                    cpx(std::pow(2.0, -static_cast<double>(j)) /
                            (static_cast<double>(j) * static_cast<double>(j)),
                        0.0));
            }
            partial += 1.0 / (static_cast<double>(J) * static_cast<double>(J));
            LacunaryScore sc = lacunary_membership(spec, half, 2.0, 1);
            if (!sc.in_mp || !close_rel(sc.score, partial, 1e-12)) {
                d = "J=" + std::to_string(J) + " " + pair_detail(sc.score, partial);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "gap-support-guard", [](std::string& d) {
        GapProfile prof;
        prof.xi = {4, 16};
        prof.eta = {8, 32};
        AnalyticSymbol inside({cpx(0.0), cpx(0.0), cpx(0.0), cpx(0.0), cpx(1.0)});  // z^4
        double sc = gap_necessary_score(inside, prof, PExponent(0.5));
        if (!(sc > 0.0)) {
            d = "score vanished on supported symbol";
            return false;
        }
        bool threw = false;
        try {
            gap_necessary_score(AnalyticSymbol::monomial(9), prof, PExponent(0.5));
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        if (!threw) {
            d = "leaking spectrum accepted";
            return false;
        }
        return true;
    });

    run_check(rep, "difference-monomial", [](std::string& d) {
        double got = finite_difference_besov(TrigPolynomial(AnalyticSymbol::monomial(1)), 0.5, 1.0);
        double want = std::sqrt(2.0);
        if (!close_rel(got, want, 1e-12)) {
            d = pair_detail(got, want);
            return false;
        }
        return true;
    });

    run_check(rep, "difference-vs-blocks", [](std::string& d) {
        DetRng rng(17, 6);
        AnalyticSymbol f = random_poly(48, rng);
        double fd = finite_difference_besov(TrigPolynomial(f), 0.5, 1.0);
        double dy = besov_norm(f, BesovParams(0.5, 1.0, std::numeric_limits<double>::infinity()));
        double ratio = fd / dy;
        if (!(ratio > 1.0 / 64.0 && ratio < 64.0)) {
            d = "ratio=" + format_real(ratio);
            return false;
        }
        return true;
    });

    return rep;
}

// ---------------------------------------------------------- multiplier ----

VerifyReport verify_multiplier() {
    VerifyReport rep;
    rep.suite = "multiplier";

    run_check(rep, "identity-exact", [](std::string& d) {
        for (double p : {0.5, 2.0 / 3.0})
            for (std::size_t n : {2u, 3u, 4u}) {
                PExponent pe(p);
                MultiplierEstimate est =
                    mult_lower_rank1(identity_matrix(n), pe, 2, 71, light_ascent());
                double want = std::pow(static_cast<double>(n), 1.0 / pe.sharp());
                if (!close_rel(est.lower, want, 1e-9)) {
                    d = "n=" + std::to_string(n) + " " + pair_detail(est.lower, want);
                    return false;
                }
                double upper = mult_upper_hadamard(identity_matrix(n), pe);
                if (!close_rel(upper, want, 1e-12)) {
                    d = "upper " + pair_detail(upper, want);
                    return false;
                }
            }
        return true;
    });

    run_check(rep, "ones-corner", [](std::string& d) {
        PExponent pe(0.5);
        ComplexMatrix q1 = q_corner(1);
        MultiplierEstimate est = mult_lower_rank1(q1, pe, 2, 72, light_ascent());
        if (!close_rel(est.lower, 1.0, 1e-9)) {
            d = pair_detail(est.lower, 1.0);
            return false;
        }
        for (std::size_t m : {1u, 4u}) {
            double sv = schatten_norm(q_corner(m), 0.5).value;
            if (!close_rel(sv, static_cast<double>(m + 1), 1e-10)) {
                d = "m=" + std::to_string(m) + " " + pair_detail(sv, m + 1.0);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "point-mass-window", [](std::string& d) {
        DiscreteMeasure mu;
        mu.theta = {1.234};
        mu.w = {cpx(0.3, -0.4)};
        ComplexMatrix win = toeplitz_window(mu, 6);
        MultiplierEstimate est = mult_lower_rank1(win, PExponent(0.5), 0, 0, light_ascent());
        if (!close_rel(est.lower, 0.5, 1e-6)) {
            d = pair_detail(est.lower, 0.5);
            return false;
        }
        return true;
    });

    run_check(rep, "unit-symbol-window-bound", [](std::string& d) {
        double got = mult_upper_hankel_poly(AnalyticSymbol({cpx(1.0)}), PExponent(0.5));
        if (!close_rel(got, 2.0, 1e-12)) {
            d = pair_detail(got, 2.0);
            return false;
        }
        return true;
    });

    run_check(rep, "bracket-and-witness", [](std::string& d) {
        DetRng rng(19, 1);
        for (int t = 0; t < 60; ++t) {
            std::size_t r = 1 + static_cast<std::size_t>(rng.uniform() * 6.0);
            std::size_t c = 1 + static_cast<std::size_t>(rng.uniform() * 6.0);
            ComplexMatrix a = random_matrix(r, c, rng);
            double p_pool[] = {1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0};
            PExponent pe(p_pool[t % 4]);
            MultiplierEstimate est = estimate_multiplier_norm(a, pe, 2, 1000 + t, light_ascent());
            if (est.lower > est.upper * (1.0 + 1e-9)) {
                d = "bracket inverted " + pair_detail(est.lower, est.upper);
                return false;
            }
            ComplexMatrix scaled(r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    scaled(i, j) = a(i, j) * est.witness_y[i] * est.witness_x[j];
            double replay = schatten_norm(scaled, pe.p()).value;
            if (!close_rel(replay, est.lower, 1e-9)) {
                d = "witness replay " + pair_detail(replay, est.lower);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "estimate-homogeneity", [](std::string& d) {
        DetRng rng(19, 2);
        ComplexMatrix a = random_matrix(4, 4, rng);
        ComplexMatrix b = a;
        b *= cpx(3.0);
        PExponent pe(0.5);
        MultiplierEstimate ea = estimate_multiplier_norm(a, pe, 3, 555, light_ascent());
        MultiplierEstimate eb = estimate_multiplier_norm(b, pe, 3, 555, light_ascent());
        if (!close_rel(eb.lower, 3.0 * ea.lower, 1e-12) ||
            !close_rel(eb.upper, 3.0 * ea.upper, 1e-12)) {
            d = pair_detail(eb.lower, 3.0 * ea.lower);
            return false;
        }
        return true;
    });

    run_check(rep, "determinism", [](std::string& d) {
        DetRng rng(19, 3);
        ComplexMatrix a = random_matrix(4, 4, rng);
        MultiplierEstimate e1 = estimate_multiplier_norm(a, PExponent(0.5), 3, 99, light_ascent());
        MultiplierEstimate e2 = estimate_multiplier_norm(a, PExponent(0.5), 3, 99, light_ascent());
        if (e1.lower != e2.lower || e1.witness_x != e2.witness_x ||
            e1.witness_y != e2.witness_y) {
            d = "same seed produced different answers";
            return false;
        }
        return true;
    });

    run_check(rep, "permutation-invariance", [](std::string& d) {
        DetRng rng(19, 4);
        ComplexMatrix a = random_matrix(4, 4, rng);
        std::size_t rp[] = {2, 0, 3, 1}, cp[] = {1, 3, 0, 2};
        ComplexMatrix b(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) b(i, j) = a(rp[i], cp[j]);
        PExponent pe(0.5);
        MultiplierEstimate ea = mult_lower_rank1(a, pe, 40, 7);
        MultiplierEstimate eb = mult_lower_rank1(b, pe, 40, 7);
        if (!close_rel(ea.lower, eb.lower, 1e-6)) {
            d = pair_detail(eb.lower, ea.lower);
            return false;
        }
        return true;
    });

    run_check(rep, "block-diagonal-exact", [](std::string& d) {
        DetRng rng(19, 5);
        ComplexMatrix b1 = random_matrix(2, 2, rng);
        ComplexMatrix b2 = random_matrix(3, 3, rng);
        ComplexMatrix a(5, 5);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) a(i, j) = b1(i, j);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(2 + i, 2 + j) = b2(i, j);
        for (double p : {0.5, 2.0 / 3.0, 1.0}) {
            PExponent pe(p);
            double whole = mult_upper_hadamard(a, pe);
            double combined = block_diagonal_norm(
                {mult_upper_hadamard(b1, pe), mult_upper_hadamard(b2, pe)}, pe);
            if (!close_rel(whole, combined, 1e-10)) {
                d = "p=" + format_real(p) + " " + pair_detail(combined, whole);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "block-triangular-pieces", [](std::string& d) {
        DetRng rng(19, 6);
        for (int t = 0; t < 100; ++t) {
            std::size_t n1 = 1 + static_cast<std::size_t>(rng.uniform() * 3.0);
            std::size_t n2 = 1 + static_cast<std::size_t>(rng.uniform() * 3.0);
            std::size_t n = n1 + n2;
            ComplexMatrix a = random_matrix(n, n, rng);
            for (std::size_t i = n1; i < n; ++i)
                for (std::size_t j = 0; j < n1; ++j) a(i, j) = cpx(0.0);
            double p_pool[] = {1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0};
            double p = p_pool[t % 4];
            ComplexMatrix d1(n1, n1), d2(n2, n2);
            for (std::size_t i = 0; i < n1; ++i)
                for (std::size_t j = 0; j < n1; ++j) d1(i, j) = a(i, j);
            for (std::size_t i = 0; i < n2; ++i)
                for (std::size_t j = 0; j < n2; ++j) d2(i, j) = a(n1 + i, n1 + j);
            double pieces = std::pow(schatten_norm(d1, p).value, p) +
                            std::pow(schatten_norm(d2, p).value, p);
            double whole = std::pow(schatten_norm(a, p).value, p);
            if (pieces > whole * (1.0 + 1e-9)) {
                d = "t=" + std::to_string(t) + " " + pair_detail(pieces, whole);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "corner-block-aggregation", [](std::string& d) {
        DetRng rng(19, 7);
        for (int t = 0; t < 12; ++t) {
            ComplexMatrix a = random_matrix(5, 5, rng);
            PExponent pe(t % 2 == 0 ? 0.5 : 2.0 / 3.0);
            ComplexMatrix d1(2, 2), d2(3, 3);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) d1(i, j) = a(i, j);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) d2(i, j) = a(2 + i, 2 + j);
            double e = pe.sharp();
            double lhs = std::pow(mult_lower_rank1(d1, pe, 3, 40 + t, light_ascent()).lower, e) +
                         std::pow(mult_lower_rank1(d2, pe, 3, 80 + t, light_ascent()).lower, e);
            double rhs = std::pow(mult_upper_hadamard(a, pe), e);
            if (lhs > rhs * (1.0 + 1e-6)) {
                d = "t=" + std::to_string(t) + " " + pair_detail(lhs, rhs);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "average-decomposition", [](std::string& d) {
        DetRng rng(19, 8);
        for (int t = 0; t < 50; ++t) {
            long deg = 1 + static_cast<long>(rng.uniform() * 11.0);
            AnalyticSymbol psi = random_poly(deg, rng);
            std::size_t la = 1 + static_cast<std::size_t>(rng.uniform() * 11.0);
            std::size_t lb = 1 + static_cast<std::size_t>(rng.uniform() * 11.0);
            std::vector<cpx> a(la), b(lb);
            for (auto& z : a) z = detail::random_coeff(rng);
            for (auto& z : b) z = detail::random_coeff(rng);
            std::vector<ComplexMatrix> parts = lemma31_decompose(psi, a, b);
            ComplexMatrix avg(la, lb);
            for (const ComplexMatrix& m : parts) {
                ComplexMatrix scaled = m;
                scaled *= cpx(1.0 / static_cast<double>(parts.size()));
                avg += scaled;
            }
            double scale = 0.0;
            for (std::size_t i = 0; i < la; ++i)
                for (std::size_t j = 0; j < lb; ++j) {
                    cpx want = psi.coeff(static_cast<long>(i + j)) * a[i] * b[j];
                    scale = std::max(scale, std::abs(want));
                }
            for (std::size_t i = 0; i < la; ++i)
                for (std::size_t j = 0; j < lb; ++j) {
                    cpx want = psi.coeff(static_cast<long>(i + j)) * a[i] * b[j];
                    if (std::abs(avg(i, j) - want) > 1e-12 * std::max(scale, 1.0)) {
                        d = "t=" + std::to_string(t) + " entry mismatch";
                        return false;
                    }
                }
        }
        return true;
    });

    run_check(rep, "window-bound-dominates", [](std::string& d) {
        DetRng rng(19, 9);
        for (int t = 0; t < 20; ++t) {
            long deg = 1 + static_cast<long>(rng.uniform() * 9.0);
            AnalyticSymbol psi = random_poly(deg, rng);
            PExponent pe(t % 2 == 0 ? 0.5 : 2.0 / 3.0);
            double upper = mult_upper_hankel_poly(psi, pe);
            MultiplierEstimate est =
                mult_lower_rank1(hankel_window(psi), pe, 2, 300 + t, light_ascent());
            if (est.lower > upper * (1.0 + 1e-9)) {
                d = "t=" + std::to_string(t) + " " + pair_detail(est.lower, upper);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "strip-input-guards", [](std::string& d) {
        DetRng rng(19, 10);
        ComplexMatrix a = random_matrix(4, 4, rng);
        bool threw_cuts = false, threw_vals = false;
        try {
            strip_upper_bound(a, {0, 3}, {1.0}, PExponent(0.5));  // cuts must end at rows
        } catch (const std::invalid_argument&) {
            threw_cuts = true;
        }
        try {
            strip_upper_bound(a, {0, 2, 4}, {1.0, -2.0}, PExponent(0.5));
        } catch (const std::invalid_argument&) {
            threw_vals = true;
        }
        if (!threw_cuts || !threw_vals) {
            d = "invalid strips accepted";
            return false;
        }
        return true;
    });

    run_check(rep, "lower-triangle-aggregate", [](std::string& d) {
        AnalyticSymbol psi({cpx(0.0), cpx(1.0), cpx(1.0)});  // z + z^2
        double got = gamma_minus_upper(psi, PExponent(0.5));
        if (!close_rel(got, 2.0, 1e-12)) {
            d = pair_detail(got, 2.0);
            return false;
        }
        double sup = gamma_minus_upper(psi, PExponent(1.0));
        if (!close_rel(sup, 1.0, 1e-12)) {
            d = "sup " + pair_detail(sup, 1.0);
            return false;
        }
        bool threw = false;
        try {
            AnalyticSymbol bad({cpx(0.0), cpx(0.0), cpx(1.0), cpx(1.0)});  // z^2 + z^3
            gamma_minus_upper(bad, PExponent(0.5));
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        if (!threw) {
            d = "doubling violation accepted";
            return false;
        }
        return true;
    });

    run_check(rep, "coefficient-bound-audit", [](std::string& d) {
        DetRng rng(19, 11);
        PExponent pe(0.5);
        for (int t = 0; t < 30; ++t) {
            long deg = 1 + static_cast<long>(rng.uniform() * 10.0);
            AnalyticSymbol psi = random_poly(deg, rng);
            double upper = mult_upper_hankel_poly(psi, pe);
            for (long n = 0; n <= deg; ++n)
                for (long m = 0; m <= n; ++m) {
                    CoefficientBound cb = coefficient_bound_check(psi, n, m, upper, pe);
                    if (!cb.ok) {
                        d = "violated at n=" + std::to_string(n) + " m=" + std::to_string(m);
                        return false;
                    }
                }
        }
        AnalyticSymbol mono = AnalyticSymbol::monomial(12);
        CoefficientBound cb = coefficient_bound_check(mono, 12, 12, std::pow(13.0, 1.0), pe);
        if (std::abs(cb.lhs - cb.rhs) > 1e-9) {
            d = "tight case gap " + format_real(std::abs(cb.lhs - cb.rhs));
            return false;
        }
        return true;
    });

    run_check(rep, "shift-window-monotone", [](std::string& d) {
        DetRng rng(19, 12);
        PExponent pe(0.5);
        for (int t = 0; t < 30; ++t) {
            long deg = 2 + static_cast<long>(rng.uniform() * 8.0);
            AnalyticSymbol psi = random_poly(deg, rng);
            double upper = mult_upper_hadamard(hankel_window(psi), pe);
            AnalyticSymbol sh = backward_shift(psi, 1);
            MultiplierEstimate est =
                mult_lower_rank1(hankel_window(sh), pe, 2, 400 + t, light_ascent());
            if (est.lower > upper * (1.0 + 1e-9)) {
                d = "t=" + std::to_string(t) + " " + pair_detail(est.lower, upper);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "submatrix-monotone", [](std::string& d) {
        DetRng rng(19, 13);
        PExponent pe(2.0 / 3.0);
        for (int t = 0; t < 15; ++t) {
            ComplexMatrix a = random_matrix(6, 6, rng);
            ComplexMatrix sub(4, 4);
            std::size_t rows[] = {0, 2, 3, 5}, cols[] = {1, 2, 4, 5};
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) sub(i, j) = a(rows[i], cols[j]);
            double upper = mult_upper_hadamard(a, pe);
            MultiplierEstimate est = mult_lower_rank1(sub, pe, 3, 500 + t, light_ascent());
            if (est.lower > upper * (1.0 + 1e-9)) {
                d = "t=" + std::to_string(t) + " " + pair_detail(est.lower, upper);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "window-vs-two-sided", [](std::string& d) {
        DetRng rng(19, 14);
        PExponent pe(0.5);
        for (int t = 0; t < 20; ++t) {
            long deg = 1 + static_cast<long>(rng.uniform() * 7.0);
            AnalyticSymbol psi = random_poly(deg, rng);
            std::size_t n = static_cast<std::size_t>(deg) + 1;
            ComplexMatrix t2 = toeplitz_matrix(TrigPolynomial(psi), 2 * n - 1);
            double upper = mult_upper_hadamard(t2, pe);
            MultiplierEstimate est =
                mult_lower_rank1(hankel_window(psi), pe, 2, 600 + t, light_ascent());
            if (est.lower > upper * (1.0 + 1e-9)) {
                d = "t=" + std::to_string(t) + " " + pair_detail(est.lower, upper);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "mask-residual-vanishes", [](std::string& d) {
        DetRng rng(19, 15);
        AnalyticSymbol psi = random_poly(4, rng);
        ComplexMatrix gamma = hankel_window(psi);
        std::vector<MollifierRow> rows = mollifier_convergence(
            gamma, SmoothCutoffSpec::omega_plateau(), {1, 2, 8, 16}, PExponent(0.5), 2, 77);
        for (const MollifierRow& r : rows) {
            if (r.m >= 8 && (r.lower != 0.0 || r.upper != 0.0)) {
                d = "m=" + std::to_string(r.m) + " residual nonzero";
                return false;
            }
            if (r.lower > r.upper * (1.0 + 1e-9)) {
                d = "bracket inverted at m=" + std::to_string(r.m);
                return false;
            }
        }
        return true;
    });

    run_check(rep, "grid-reference-agrees", [](std::string& d) {
        DetRng rng(19, 16);
        {
            ComplexMatrix a = identity_matrix(2);
            double oracle = mult_oracle_small(a, PExponent(0.5), 0.02, 9001);
            if (!close_rel(oracle, 2.0, 0.01)) {
                d = "identity oracle " + pair_detail(oracle, 2.0);
                return false;
            }
        }
        ComplexMatrix a = random_matrix(3, 3, rng);
        PExponent pe(0.5);
        double oracle = mult_oracle_small(a, pe, 0.02, 9002);
        MultiplierEstimate est = mult_lower_rank1(a, pe, 60, 9003);
        if (!close_rel(oracle, est.lower, 0.01)) {
            d = pair_detail(est.lower, oracle);
            return false;
        }
        return true;
    });

    run_check(rep, "merge-keeps-order", [](std::string& d) {
        MultiplierEstimate est;
        est.lower = 1.0;
        est.upper = 3.0;
        est.upper_method = "a";
        merge_upper(est, 2.0, "b");
        if (est.upper != 2.0 || est.upper_method != "b") {
            d = "tighter certificate not kept";
            return false;
        }
        merge_upper(est, 2.5, "c");
        if (est.upper != 2.0 || est.upper_method != "b") {
            d = "looser certificate replaced tighter";
            return false;
        }
        bool threw = false;
        try {
            merge_upper(est, 0.5, "broken");
        } catch (const std::logic_error&) {
            threw = true;
        }
        if (!threw) {
            d = "inverted bracket accepted";
            return false;
        }
        return true;
    });

    return rep;
}

// ------------------------------------------------------------ measures ----

VerifyReport verify_measures() {
    VerifyReport rep;
    rep.suite = "measures";

    run_check(rep, "window-entries", [](std::string& d) {
        DetRng rng(23, 1);
        DiscreteMeasure mu = random_measure(3, 0.3, rng);
        ComplexMatrix t = toeplitz_window(mu, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                cpx want = fourier_coefficient(mu, static_cast<long>(i) - static_cast<long>(j));
                if (std::abs(t(i, j) - want) > 1e-12) {
                    d = "entry mismatch";
                    return false;
                }
            }
        return true;
    });

    run_check(rep, "mass-norm-examples", [](std::string& d) {
        DiscreteMeasure one;
        one.theta = {0.7};
        one.w = {cpx(0.3, 0.4)};
        if (!close_rel(measure_mp_norm(one, 0.5), 0.5, 1e-12)) {
            d = "single atom";
            return false;
        }
        DiscreteMeasure two;
        two.theta = {0.0, M_PI};
        two.w = {cpx(1.0), cpx(1.0)};
        if (!close_rel(measure_mp_norm(two, 0.5), 4.0, 1e-12) ||
            !close_rel(measure_mp_norm(two, 1.0), 2.0, 1e-12)) {
            d = "two atoms";
            return false;
        }
        return true;
    });

    run_check(rep, "coincident-atoms-guard", [](std::string& d) {
        DiscreteMeasure mu;
        mu.theta = {1.0, 1.0};
        mu.w = {cpx(1.0), cpx(2.0)};
        bool threw = false;
        try {
            validate_measure(mu);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        if (!threw) {
            d = "coincident atoms accepted";
            return false;
        }
        return true;
    });

    run_check(rep, "window-growth-and-cap", [](std::string& d) {
        DetRng rng(23, 2);
        DiscreteMeasure mu = random_measure(2, 0.5, rng);
        PExponent pe(0.5);
        double exact = measure_mp_norm(mu, 0.5);
        double prev = 0.0;
        std::vector<double> prev_x, prev_y;
        for (std::size_t n = 4; n <= 16; ++n) {
            AscentOptions opt;
            opt.max_sweeps = 0;
            if (!prev_x.empty()) {
                std::vector<double> px = prev_x, py = prev_y;
                px.push_back(0.0);
                py.push_back(0.0);
                opt.warm_starts.push_back({px, py});
            }
            MultiplierEstimate est = mult_lower_rank1(toeplitz_window(mu, n), pe, 0, 0, opt);
            if (est.lower < prev * (1.0 - 1e-9)) {
                d = "window " + std::to_string(n) + " shrank " + pair_detail(est.lower, prev);
                return false;
            }
            if (est.lower > exact * (1.0 + 1e-9)) {
                d = "window " + std::to_string(n) + " exceeds mass norm " +
                    pair_detail(est.lower, exact);
                return false;
            }
            prev = est.lower;
            prev_x = est.witness_x;
            prev_y = est.witness_y;
        }
        return true;
    });

    run_check(rep, "antipodal-arc-witness", [](std::string& d) {
        DiscreteMeasure mu;
        mu.theta = {0.0, M_PI};
        mu.w = {cpx(1.0), cpx(1.0)};
        PExponent pe(0.5);
        ArcWitness aw = arc_witness(mu, 64, M_PI / 8.0);
        AscentOptions opt;
        opt.max_sweeps = 0;
        opt.coordinate_starts = false;
        opt.warm_starts.push_back({aw.x, aw.x});
        MultiplierEstimate est = mult_lower_rank1(toeplitz_window(mu, 64), pe, 0, 0, opt);
        if (est.lower < 0.95 * 4.0) {
            d = "weak witness " + pair_detail(est.lower, 4.0);
            return false;
        }
        if (est.lower > 4.0 * (1.0 + 1e-9)) {
            d = "witness exceeds mass norm " + pair_detail(est.lower, 4.0);
            return false;
        }
        return true;
    });

    run_check(rep, "arc-guardrails", [](std::string& d) {
        DiscreteMeasure mu;
        mu.theta = {0.0, 0.3};
        mu.w = {cpx(1.0), cpx(1.0)};
        bool threw_wide = false, threw_window = false;
        try {
            arc_witness(mu, 64, 0.5);  // arc wider than the atom separation
        } catch (const std::invalid_argument&) {
            threw_wide = true;
        }
        try {
            arc_witness(mu, 4, 0.25);  // window too short to separate the atoms
        } catch (const std::runtime_error&) {
            threw_window = true;
        }
        if (!threw_wide || !threw_window) {
            d = threw_wide ? "short window accepted" : "wide arc accepted";
            return false;
        }
        return true;
    });

    run_check(rep, "flat-spectrum-decay", [](std::string& d) {
        DiscreteMeasure mu;
        mu.theta = {0.0};
        mu.w = {cpx(1.0)};
        std::vector<DecayRow> rows = omega_convolution_decay(mu, 0.5, 2, 8);
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (const DecayRow& r : rows) {
            lo = std::min(lo, r.ratio);
            hi = std::max(hi, r.ratio);
        }
        if (!(hi / lo < 4.0)) {
            d = "ratio spread " + format_real(hi / lo);
            return false;
        }
        return true;
    });

    run_check(rep, "mean-square-coefficients", [](std::string& d) {
        DiscreteMeasure one;
        one.theta = {2.2};
        one.w = {cpx(0.6, -0.8)};
        for (long n : {1L, 16L, 300L}) {
            if (!close_rel(wiener_mean(one, n), 1.0, 1e-12)) {
                d = "single atom N=" + std::to_string(n);
                return false;
            }
        }
        DetRng rng(23, 3);
        DiscreteMeasure two = random_measure(2, 0.5, rng);
        double target = std::norm(two.w[0]) + std::norm(two.w[1]);
        double mean = wiener_mean(two, 4096);
        if (!close_rel(mean, target, 0.05)) {
            d = pair_detail(mean, target);
            return false;
        }
        return true;
    });

    run_check(rep, "peel-exact-atom", [](std::string& d) {
        int n = 5;
        long grid = 1L << (n + 3);
        double s = 2.0 * M_PI * 37.0 / static_cast<double>(grid);
        TrigPolynomial f = plateau_atom(n, s, cpx(1.0));
        AtomicDecomposition dec = greedy_atomic_decompose(f, 0.5, 4, 1e-8);
        if (dec.terms.size() != 1) {
            d = "terms=" + std::to_string(dec.terms.size());
            return false;
        }
        const AtomTerm& t = dec.terms.front();
        if (t.n != n || std::abs(t.alpha - cpx(1.0)) > 1e-9 || std::abs(t.s - s) > 1e-12) {
            d = "recovered wrong atom";
            return false;
        }
        if (dec.residual_lp > 1e-10) {
            d = "residual " + format_real(dec.residual_lp);
            return false;
        }
        return true;
    });

    run_check(rep, "peel-zero-input", [](std::string& d) {
        TrigPolynomial f(0, {cpx(0.0)});
        AtomicDecomposition dec = greedy_atomic_decompose(f, 0.5, 4, 1e-8);
        if (!dec.terms.empty() || dec.residual_lp != 0.0) {
            d = "zero input produced terms";
            return false;
        }
        return true;
    });

    run_check(rep, "peel-budget-guard", [](std::string& d) {
        TrigPolynomial f(AnalyticSymbol::monomial(40));
        bool threw = false;
        try {
            greedy_atomic_decompose(f, 0.5, 1, 1e-12);
        } catch (const std::runtime_error&) {
            threw = true;
        }
        if (!threw) {
            d = "impossible budget accepted";
            return false;
        }
        return true;
    });

    run_check(rep, "plateau-window-entries", [](std::string& d) {
        DetRng rng(23, 4);
        DiscreteMeasure mu = random_measure(2, 0.5, rng);
        int n = 3;
        TrigPolynomial w = omega_window(mu, n);
        double scale = std::pow(2.0, static_cast<double>(n));
        for (long k = w.lo(); k <= w.hi(); ++k) {
            cpx want = fourier_coefficient(mu, k) *
                       omega_plateau_eval(static_cast<double>(k) / scale);
            if (std::abs(w.coeff(k) - want) > 1e-12) {
                d = "k=" + std::to_string(k);
                return false;
            }
        }
        return true;
    });

    return rep;
}

}  // namespace

VerifyReport verify(const std::string& suite) {
    if (suite == "core") return verify_core();
    if (suite == "symbols") return verify_symbols();
    if (suite == "besov") return verify_besov();
    if (suite == "multiplier") return verify_multiplier();
    if (suite == "measures") return verify_measures();
    if (suite == "all") {
        VerifyReport all;
        all.suite = "all";
        for (const char* name : {"core", "symbols", "besov", "multiplier", "measures"}) {
            VerifyReport sub = verify(name);
            for (VerifyCheck& c : sub.checks) {
                c.name = std::string(name) + ":" + c.name;
                all.checks.push_back(std::move(c));
            }
        }
        return all;
    }
    throw std::invalid_argument(
        "verify: unknown suite '" + suite +
        "'; expected one of core, symbols, besov, multiplier, measures, all");
}

}  // namespace slab
