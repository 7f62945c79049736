#pragma once

#include "slab/symbols.hpp"
#include "slab/types.hpp"

namespace slab {

// Finite sum of point masses w_j at angles theta_j (radians).
struct DiscreteMeasure {
    std::vector<double> theta;
    std::vector<cpx> w;
};

// Validates sizes and atom distinctness (1e-12 apart mod 2pi; no implicit merging).
void validate_measure(const DiscreteMeasure& mu);

// mu-hat(k) = sum_j w_j exp(-i k theta_j)
cpx fourier_coefficient(const DiscreteMeasure& mu, long k);

// (sum |w_j|^p)^(1/p)
double measure_mp_norm(const DiscreteMeasure& mu, double p);

// n x n window with entries mu-hat(j - k).
ComplexMatrix toeplitz_window(const DiscreteMeasure& mu, std::size_t n);

struct ArcWitness {
    std::vector<double> x;       // nonnegative unit vector, length = window size
    double gram_max_offdiag = 0.0;
    double arc_width = 0.0;
};

// Smooth bump supported on an arc, spectrally windowed to the n x n Toeplitz
// window and renormalized. Fails with guidance if the rotated copies of the
// bump are not near-orthogonal over the window (Gram off-diagonal >= 0.01).
ArcWitness arc_witness(const DiscreteMeasure& mu, std::size_t n, double arc_width,
                       std::size_t samples = 8192);

struct DecayRow {
    int n = 0;
    double lp = 0.0;
    double reference = 0.0;  // 2^(n(1-1/p))
    double ratio = 0.0;
};

// L^p norms of the plateau-smoothed partial sums mu * Omega_n against the
// 2^(n(1-1/p)) reference. The plateau profile is configurable; it must be
// compactly supported with value 1 at 0.
std::vector<DecayRow> omega_convolution_decay(const DiscreteMeasure& mu, double p,
                                              int n_min, int n_max);
std::vector<DecayRow> omega_convolution_decay(const DiscreteMeasure& mu,
                                              const SmoothCutoffSpec& omega, double p,
                                              int n_min, int n_max);

// Plateau-windowed polynomial of mu at scale n: coefficients mu-hat(k) omega(k/2^n).
TrigPolynomial omega_window(const DiscreteMeasure& mu, int n);
TrigPolynomial omega_window(const DiscreteMeasure& mu, int n, const SmoothCutoffSpec& omega);

// (1/(N+1)) sum_{k=0..N} |mu-hat(k)|^2
double wiener_mean(const DiscreteMeasure& mu, long N);

struct AtomTerm {
    cpx alpha;
    int n = 0;
    double s = 0.0;  // shift angle
};

struct AtomicDecomposition {
    std::vector<AtomTerm> terms;
    double residual_lp = 0.0;
    double weight_sum_p = 0.0;  // sum |alpha|^p 2^(-n(1-p))
    double weight_sum_1 = 0.0;  // sum |alpha|
};

// Greedy peeling of plateau-kernel atoms alpha * Omega_n(x - s): shifts on a
// 2^(n+3) grid, alpha by the L2-best scalar, accepted only if the L^p residual
// drops. Throws on stagnation before reaching tol.
AtomicDecomposition greedy_atomic_decompose(const TrigPolynomial& f, double p,
                                            int max_terms, double tol);

}  // namespace slab
