#pragma once

#include <optional>

#include "slab/symbols.hpp"

namespace slab {

struct BesovParams {
    double s = 0.0;  // smoothness weight exponent
    double p = 1.0;  // block L^p norm
    double q = 1.0;  // aggregation across blocks; infinity -> sup

    BesovParams(double s_, double p_, double q_) : s(s_), p(p_), q(q_) {
        if (!(p > 0.0)) throw std::invalid_argument("BesovParams: p must be positive");
        if (!(q > 0.0)) throw std::invalid_argument("BesovParams: q must be positive");
    }
};

// (sum_n (2^{|n| s} ||block_n f||_p)^q)^{1/q}, sup over n when q = infinity.
// Blocks come from dyadic_block with the given cutoff.
double besov_norm(const TrigPolynomial& f, const BesovParams& params,
                  const SmoothCutoffSpec& v = SmoothCutoffSpec::v_partition());
double besov_norm(const AnalyticSymbol& f, const BesovParams& params,
                  const SmoothCutoffSpec& v = SmoothCutoffSpec::v_partition());

// One weighted block row of the table behind besov_norm.
struct BesovBlockRow {
    int n;
    double block_lp;
    double weighted;
};
std::vector<BesovBlockRow> besov_block_table(const TrigPolynomial& f, const BesovParams& params,
                                             const SmoothCutoffSpec& v = SmoothCutoffSpec::v_partition());

struct LacunarySymbolSpec {
    std::vector<long> frequencies;  // strictly increasing, positive
    std::vector<cpx> amplitudes;    // same length
};

struct LacunaryScore {
    bool in_mp = false;
    double score = 0.0;
    double rho = 0.0;  // gap parameters the classification succeeded with
    int groups = 0;    // number of interleaved geometric subsequences
};

// Score (sum_j (n_j^{1/p#} |amp_j|)^{p#})^{1/p#} (sup at p = 1) for a
// frequency list that splits into at most N geometric-gap subsequences.
// rho/N may be pinned; otherwise a small grid is searched and the first
// passing pair is reported. Non-splittable input throws.
LacunaryScore lacunary_membership(const LacunarySymbolSpec& spec, PExponent p,
                                  std::optional<double> rho = std::nullopt,
                                  std::optional<int> N = std::nullopt);

// For f supported on the union of [xi_k, eta_k): the weighted-block norm with
// s = 1/p#, q = p#. Support violations throw, naming offending frequencies.
double gap_necessary_score(const AnalyticSymbol& f, const GapProfile& profile, PExponent p);

// max over grid rotations zeta of ||f(zeta .) - f||_p / |zeta - 1|^s and over
// radial dilations r = 1 - 2^{-k} of ||f - f_r||_p / (1 - r)^s.
double finite_difference_besov(const TrigPolynomial& f, double s, double p, int grid = 4096);

}  // namespace slab
