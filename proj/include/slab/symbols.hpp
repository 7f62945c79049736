#pragma once

#include <functional>
#include <optional>

#include "slab/types.hpp"

namespace slab {

// Polynomial in z with frequencies 0..degree.
class AnalyticSymbol {
public:
    AnalyticSymbol() : c_(1, cpx(0.0)) {}
    explicit AnalyticSymbol(std::vector<cpx> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.assign(1, cpx(0.0));
    }
    static AnalyticSymbol monomial(int k, cpx a = 1.0) {
        if (k < 0) throw std::invalid_argument("AnalyticSymbol::monomial: negative frequency");
        std::vector<cpx> c(static_cast<std::size_t>(k) + 1, cpx(0.0));
        c.back() = a;
        return AnalyticSymbol(std::move(c));
    }

    int degree() const;  // largest k with c[k] != 0; 0 for the zero symbol
    std::size_t size() const { return c_.size(); }
    cpx coeff(long k) const {
        return (k < 0 || k >= static_cast<long>(c_.size())) ? cpx(0.0) : c_[static_cast<std::size_t>(k)];
    }
    void set_coeff(long k, cpx v);
    const std::vector<cpx>& coeffs() const { return c_; }

    cpx eval(cpx z) const;  // Horner at a point of the circle

    AnalyticSymbol& operator+=(const AnalyticSymbol& o);
    AnalyticSymbol& operator*=(cpx s) {
        for (auto& z : c_) z *= s;
        return *this;
    }

private:
    std::vector<cpx> c_;  // c_[k] multiplies z^k
};

// Polynomial with frequencies lo..hi (two-sided).
class TrigPolynomial {
public:
    TrigPolynomial() : lo_(0), c_(1, cpx(0.0)) {}
    TrigPolynomial(long lo, std::vector<cpx> coeffs) : lo_(lo), c_(std::move(coeffs)) {
        if (c_.empty()) { lo_ = 0; c_.assign(1, cpx(0.0)); }
    }
    TrigPolynomial(const AnalyticSymbol& s) : lo_(0), c_(s.coeffs()) {}

    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    long max_abs_freq() const;  // largest |k| with nonzero coefficient
    cpx coeff(long k) const {
        long i = k - lo_;
        return (i < 0 || i >= static_cast<long>(c_.size())) ? cpx(0.0) : c_[static_cast<std::size_t>(i)];
    }
    void set_coeff(long k, cpx v);
    bool real_valued(double tol = 1e-12) const;  // conjugate-symmetric coefficients

    cpx eval(cpx z) const;

    TrigPolynomial& operator+=(const TrigPolynomial& o);
    TrigPolynomial& operator*=(cpx s) {
        for (auto& z : c_) z *= s;
        return *this;
    }

private:
    long lo_;
    std::vector<cpx> c_;  // c_[i] multiplies z^(lo_ + i)
};

// ---- smooth cutoffs ----------------------------------------------------

double smooth_sigma(double t);                // exp(-1/t) for t > 0, else 0
double smooth_step(double t);                 // sigma(t) / (sigma(t) + sigma(1-t))
double omega_plateau_eval(double s);          // 1 on |s|<=1, step down to 0 at |s|=2
double v_bump_eval(double x);                 // supported on [1/2, 2], peak v(1) = 1

// Weight of frequency k (>= 0) in dyadic block n under the standard partition.
// Integer-keyed so that the two nonzero weights of every k sum to exactly 1.
double dyadic_weight(long k, int n);

class SmoothCutoffSpec {
public:
    enum class Kind { VPartition, OmegaPlateau, CustomSamples, Custom };

    static SmoothCutoffSpec v_partition();
    static SmoothCutoffSpec omega_plateau();
    // Uniform samples of a smooth profile on [-radius, radius], linearly interpolated.
    static SmoothCutoffSpec custom_samples(std::vector<double> samples, double radius,
                                           std::string name = "custom-samples");
    static SmoothCutoffSpec custom(std::function<double(double)> f, double radius, std::string name);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    double support_radius() const { return radius_; }  // eval vanishes outside [-radius, radius]
    double eval(double x) const { return f_(x); }
    double operator()(double x) const { return f_(x); }

private:
    SmoothCutoffSpec(Kind k, std::function<double(double)> f, double r, std::string n)
        : kind_(k), f_(std::move(f)), radius_(r), name_(std::move(n)) {}
    Kind kind_;
    std::function<double(double)> f_;
    double radius_;
    std::string name_;
};

// ---- matrix builders -----------------------------------------------------

// Entries psi-hat(j + k), j < rows, k < cols.
ComplexMatrix hankel_matrix(const AnalyticSymbol& psi, std::size_t rows, std::size_t cols);

// Entries t-hat(j - k) on an n x n window (general rows x cols overload too).
ComplexMatrix toeplitz_matrix(const TrigPolynomial& t, std::size_t n);
ComplexMatrix toeplitz_matrix(const TrigPolynomial& t, std::size_t rows, std::size_t cols);

// (strictly lower part, rest): first has psi-hat(j + k) for j > k else 0;
// second is the window minus the first, so the two always sum to the window.
std::pair<ComplexMatrix, ComplexMatrix> split_hankel_lower(const AnalyticSymbol& psi, std::size_t n);

// ---- kernels --------------------------------------------------------------

// Coefficients F(k/m) for the sampled profile; support radius decides the range.
TrigPolynomial sampled_polynomial(const SmoothCutoffSpec& f, long m);

// Block n of f. Default cutoff is the standard dyadic partition: block 0 keeps
// frequencies |k| <= 1 untouched; block n >= 1 weights k by the partition bump
// at k/2^n (negative n mirrors onto negative frequencies).
TrigPolynomial dyadic_block(const TrigPolynomial& f, int n);
AnalyticSymbol dyadic_block(const AnalyticSymbol& f, int n);
// Same with an arbitrary bump r in place of the canonical one.
TrigPolynomial dyadic_block(const TrigPolynomial& f, int n, const SmoothCutoffSpec& r);

TrigPolynomial dirichlet_kernel(long n);
TrigPolynomial fejer_square(long n);  // D_n^2 / (2n+1)

// z^(4^n) * D_(2^n)^(N+1) / (2^(n+1)+1)^N; integer-exact coefficients. n <= 12.
AnalyticSymbol phi_witness(int n, int N);

struct LpResult {
    double value = 0.0;
    std::size_t grid = 0;        // final quadrature size
    bool converged = true;       // relative change < 1e-8 before the grid cap
    double last_rel_change = 0.0;
};

// ((1/M) sum |f|^p)^(1/p) on the circle, FFT-evaluated; M starts at
// oversample*(degree+1) and doubles until the relative change is < 1e-8
// (grid capped at 2^23; non-convergence is reported, not fatal).
LpResult lp_norm(const TrigPolynomial& f, double p, int oversample = 4);
LpResult lp_norm(const AnalyticSymbol& f, double p, int oversample = 4);

// max |f| over a dense grid (lower bound on the true sup).
double sup_norm(const TrigPolynomial& f, int oversample = 8);

AnalyticSymbol backward_shift(const AnalyticSymbol& psi, long k = 1);

// f-hat(j) = psi-hat(jN + s)
AnalyticSymbol arithmetic_restriction(const AnalyticSymbol& psi, long N, long s);

struct GapProfile {
    std::vector<long> xi, eta;  // intervals [xi_k, eta_k)
    double d = 0.0;             // min xi_{k+1} / eta_k  (> 1)
    double D = 0.0;             // max eta_k / xi_k      (> 1)
};

// Covers the increasing frequencies by intervals with bounded gap ratios,
// via the pigeonhole grouping: breakpoints are ratios exceeding rho^(1/N).
// Throws if some N+1 consecutive ratios all fail the threshold.
GapProfile lacunary_cover(const std::vector<long>& freqs, double rho, int N);

}  // namespace slab
