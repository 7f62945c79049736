#pragma once

#include "det_rng.hpp"
#include "slab/measures.hpp"
#include "slab/symbols.hpp"
#include "slab/types.hpp"

namespace slab {
namespace detail {

inline cpx random_coeff(DetRng& rng) {
    double re = rng.normal();
    double im = rng.normal();
    return cpx(re, im);
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, DetRng& rng) {
    ComplexMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = random_coeff(rng);
    return a;
}

inline AnalyticSymbol random_poly(long deg, DetRng& rng) {
    std::vector<cpx> c(static_cast<std::size_t>(deg) + 1);
    for (auto& z : c) z = random_coeff(rng);
    return AnalyticSymbol(std::move(c));
}

// Support strictly inside (2^{n-1}, 2^{n+1}).
inline AnalyticSymbol random_block_symbol(int n, DetRng& rng) {
    long lo = (1L << (n - 1)) + 1, hi = (1L << (n + 1)) - 1;
    std::vector<cpx> c(static_cast<std::size_t>(hi) + 1, cpx(0.0));
    for (long k = lo; k <= hi; ++k) c[static_cast<std::size_t>(k)] = random_coeff(rng);
    return AnalyticSymbol(std::move(c));
}

inline DiscreteMeasure random_measure(std::size_t atoms, double min_sep, DetRng& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        DiscreteMeasure mu;
        mu.theta.resize(atoms);
        for (double& t : mu.theta) t = 2.0 * M_PI * rng.uniform();
        bool ok = true;
        for (std::size_t i = 0; i < atoms && ok; ++i)
            for (std::size_t j = i + 1; j < atoms; ++j) {
                double d = std::fmod(std::abs(mu.theta[i] - mu.theta[j]), 2.0 * M_PI);
                d = std::min(d, 2.0 * M_PI - d);
                if (d < min_sep) {
                    ok = false;
                    break;
                }
            }
        if (!ok) continue;
        mu.w.resize(atoms);
        for (cpx& w : mu.w) {
            do {
                w = random_coeff(rng);
            } while (std::abs(w) < 0.05);
        }
        return mu;
    }
    throw std::logic_error("random_measure: separation constraint too tight for atom count");
}

// Minimal square window holding every antidiagonal of the symbol.
inline ComplexMatrix hankel_window(const AnalyticSymbol& psi) {
    std::size_t m = static_cast<std::size_t>(psi.degree()) + 1;
    return hankel_matrix(psi, m, m);
}

// Plateau-windowed atom alpha * sum_{|k| <= 2^{n+1}} omega(k/2^n) e^{-iks} z^k,
// matching the convention of greedy_atomic_decompose.
inline TrigPolynomial plateau_atom(int n, double s, cpx alpha) {
    long half = 1L << (n + 1);
    std::vector<cpx> c(static_cast<std::size_t>(2 * half + 1));
    double scale = std::pow(2.0, static_cast<double>(n));
    for (long k = -half; k <= half; ++k)
        c[static_cast<std::size_t>(k + half)] =
            alpha * omega_plateau_eval(static_cast<double>(k) / scale) *
            std::polar(1.0, -static_cast<double>(k) * s);
    return TrigPolynomial(-half, std::move(c));
}

}  // namespace detail
}  // namespace slab
