#pragma once

#include <cstdint>
#include <optional>

#include "slab/symbols.hpp"
#include "slab/types.hpp"

namespace slab {

// Bracket on the entrywise-multiplier norm of a matrix at exponent p, with
// the witness pair realizing the lower bound and tags naming both methods.
struct MultiplierEstimate {
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
    std::vector<double> witness_x;  // column scaling, nonnegative, unit
    std::vector<double> witness_y;  // row scaling, nonnegative, unit
    std::string lower_method;
    std::string upper_method;
    int restarts_used = 0;
    std::uint64_t seed = 0;
};

// Aligned row/column cuts covering a matrix: 0 = c_0 < c_1 < ... < c_k = dim.
struct BlockPartition {
    std::vector<std::size_t> row_cuts;
    std::vector<std::size_t> col_cuts;

    void validate(std::size_t rows, std::size_t cols) const;
    std::size_t blocks() const { return row_cuts.empty() ? 0 : row_cuts.size() - 1; }
};

struct AscentOptions {
    int max_sweeps = 200;       // 0 = evaluate starts without polishing
    double rel_tol = 1e-8;      // stop a restart when a sweep improves less
    int golden_iters = 32;      // bracketing steps per coordinate line search
    bool coordinate_starts = true;
    const BlockPartition* blocks = nullptr;  // adds per-block indicator starts
    // Extra (x, y) starts, e.g. zero-padded witnesses from a smaller window.
    std::vector<std::pair<std::vector<double>, std::vector<double>>> warm_starts;
};

// Best value of ||diag(y) A diag(x)||_{S_p} over nonnegative unit vectors,
// by multistart coordinate ascent: structured starts (uniform, harmonic,
// centered tents, coordinate pairs, block indicators, warm starts) plus
// `restarts` seeded random starts. Deterministic for fixed (restarts, seed).
// Always a valid lower bound for the multiplier norm; for p <= 1 the true
// norm is the global maximum of this objective.
MultiplierEstimate mult_lower_rank1(const ComplexMatrix& a, PExponent p, int restarts,
                                    std::uint64_t seed);
MultiplierEstimate mult_lower_rank1(const ComplexMatrix& a, PExponent p, int restarts,
                                    std::uint64_t seed, const AscentOptions& options);

// Brute-force reference for dims <= 3: dense angular grid over nonnegative
// unit sphere pairs, 10^6 seeded random pairs, then shrinking local
// refinement. Within 1% of the true maximum at resolution 0.01.
double mult_oracle_small(const ComplexMatrix& a, PExponent p, double resolution = 0.01,
                         std::uint64_t seed = 12345);

// Schatten norm at the conjugate exponent p# (largest singular value at p=1).
double mult_upper_hadamard(const ComplexMatrix& a, PExponent p);

// (2m)^{1/p-1} ||psi||_p for an analytic polynomial of degree m-1; the
// two-sided variant uses (4m)^{1/p-1} with m-1 the largest |frequency|.
double mult_upper_hankel_poly(const AnalyticSymbol& psi, PExponent p);
double mult_upper_hankel_trig(const TrigPolynomial& t, PExponent p);

// The 2m rank-one matrices whose average reconstructs the coefficient-wise
// product {psi-hat(n+k) a_n b_k} exactly (window m = max(degree+1, |a|, |b|),
// or the explicit m when given). Roots of unity zeta_j = exp(2 pi i j / 2m).
std::vector<ComplexMatrix> lemma31_decompose(const AnalyticSymbol& psi,
                                             const std::vector<cpx>& a,
                                             const std::vector<cpx>& b,
                                             std::size_t m = 0);

// (sum_k v_k^{p#})^{1/p#} over per-block values; max at p = 1.
double block_diagonal_norm(const std::vector<double>& block_values, PExponent p);

// l^{p-flat} aggregation of per-strip upper bounds over a row partition.
double strip_upper_bound(const ComplexMatrix& a, const std::vector<std::size_t>& row_cuts,
                         const std::vector<double>& strip_values, PExponent p);

// Zeroes entries with row < m or col < n (keeps the lower-right corner).
ComplexMatrix corner_cut(const ComplexMatrix& a, std::size_t m, std::size_t n);

// (m+1) x (m+1) all-ones matrix.
ComplexMatrix q_corner(std::size_t m);

struct CoefficientBound {
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = false;
};

// Fejer-weighted coefficient bound: |psi-hat(n)| against
// ((1/(m+1)) sum_{|j|<=m} (1-|j|/(m+1)) |psi-hat(n+j)|^2)^{(1-p)/(2-p)} * upper^{p/(2-p)}.
CoefficientBound coefficient_bound_check(const AnalyticSymbol& psi, long n, long m,
                                         double mult_upper, PExponent p);

// Entrywise l^{p#} norm of the strictly-lower Hankel triangle for a symbol
// whose frequencies n_l satisfy n_0 >= 1 and n_{l+1} >= 2 n_l; the multiplicity
// of each frequency is its count of below-diagonal window entries. Sup of
// |coefficients| at p = 1.
double gamma_minus_upper(const AnalyticSymbol& psi, PExponent p);

struct MollifierRow {
    long m = 0;
    double lower = 0.0;
    double upper = 0.0;
};

// Residual bracket of ||A - A * (sampled-profile Hankel mask)|| as the
// sampling scale m grows; F must be compactly supported with F(0) = 1.
std::vector<MollifierRow> mollifier_convergence(const ComplexMatrix& a, const SmoothCutoffSpec& f,
                                                const std::vector<long>& m_list, PExponent p,
                                                int restarts = 12, std::uint64_t seed = 2026);

// Lower bound from mult_lower_rank1 plus the certified upper bound (Schatten
// at p#). Callers fold extra certificates in with merge_upper. Throws if the
// bracket inverts beyond rounding slack (that signals a bug, not bad data).
MultiplierEstimate estimate_multiplier_norm(const ComplexMatrix& a, PExponent p, int restarts,
                                            std::uint64_t seed);
MultiplierEstimate estimate_multiplier_norm(const ComplexMatrix& a, PExponent p, int restarts,
                                            std::uint64_t seed, const AscentOptions& options);

// Keep the smaller upper bound, recording which certificate won.
void merge_upper(MultiplierEstimate& est, double upper, const std::string& method);

}  // namespace slab
