#include "slab/symbols.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>

#include <fftw3.h>

namespace slab {

// ---- polynomial types ------------------------------------------------------

int AnalyticSymbol::degree() const {
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != cpx(0.0)) return static_cast<int>(i);
    return 0;
}

void AnalyticSymbol::set_coeff(long k, cpx v) {
    if (k < 0) throw std::invalid_argument("AnalyticSymbol: negative frequency");
    if (k >= static_cast<long>(c_.size())) c_.resize(static_cast<std::size_t>(k) + 1, cpx(0.0));
    c_[static_cast<std::size_t>(k)] = v;
}

cpx AnalyticSymbol::eval(cpx z) const {
    cpx acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
    return acc;
}

AnalyticSymbol& AnalyticSymbol::operator+=(const AnalyticSymbol& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), cpx(0.0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

long TrigPolynomial::max_abs_freq() const {
    long m = 0;
    for (long k = lo(); k <= hi(); ++k)
        if (coeff(k) != cpx(0.0)) m = std::max(m, std::abs(k));
    return m;
}

void TrigPolynomial::set_coeff(long k, cpx v) {
    if (k < lo_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - k), cpx(0.0));
        lo_ = k;
    } else if (k > hi()) {
        c_.resize(static_cast<std::size_t>(k - lo_) + 1, cpx(0.0));
    }
    c_[static_cast<std::size_t>(k - lo_)] = v;
}

bool TrigPolynomial::real_valued(double tol) const {
    long m = std::max(std::abs(lo()), std::abs(hi()));
    for (long k = 0; k <= m; ++k)
        if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
    return true;
}

cpx TrigPolynomial::eval(cpx z) const {
    cpx acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
    // acc is now sum c_i z^i; multiply by z^lo
    cpx zlo = std::pow(z, cpx(static_cast<double>(lo_)));
    return acc * zlo;
}

TrigPolynomial& TrigPolynomial::operator+=(const TrigPolynomial& o) {
    for (long k = o.lo(); k <= o.hi(); ++k) {
        cpx v = o.coeff(k);
        if (v != cpx(0.0)) set_coeff(k, coeff(k) + v);
    }
    return *this;
}

// ---- smooth cutoffs --------------------------------------------------------

double smooth_sigma(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double a = smooth_sigma(t), b = smooth_sigma(1.0 - t);
    return a / (a + b);
}

double omega_plateau_eval(double s) {
    s = std::abs(s);
    if (s <= 1.0) return 1.0;
    if (s >= 2.0) return 0.0;
    return smooth_step(2.0 - s);
}

double v_bump_eval(double x) {
    if (x <= 0.5 || x >= 2.0) return 0.0;
    double u = std::log2(x);
    return u <= 0.0 ? smooth_step(u + 1.0) : 1.0 - smooth_step(u);
}

double dyadic_weight(long k, int n) {
    if (k < 0) throw std::invalid_argument("dyadic_weight: negative frequency");
    if (k <= 1) return n == 0 ? 1.0 : 0.0;
    int n0 = std::bit_width(static_cast<unsigned long>(k)) - 1;  // floor(log2 k)
    if ((1L << n0) == k) return n == n0 ? 1.0 : 0.0;
    if (n != n0 && n != n0 + 1) return 0.0;
    // single canonical evaluation keeps the two weights summing to exactly 1
    double s = smooth_step(std::log2(static_cast<double>(k)) - n0);
    return n == n0 ? 1.0 - s : s;
}

SmoothCutoffSpec SmoothCutoffSpec::v_partition() {
    return SmoothCutoffSpec(Kind::VPartition, v_bump_eval, 2.0, "v-partition");
}

SmoothCutoffSpec SmoothCutoffSpec::omega_plateau() {
    return SmoothCutoffSpec(Kind::OmegaPlateau, omega_plateau_eval, 2.0, "omega-plateau");
}

SmoothCutoffSpec SmoothCutoffSpec::custom_samples(std::vector<double> samples, double radius,
                                                  std::string name) {
    if (samples.size() < 2) throw std::invalid_argument("custom_samples: need at least 2 samples");
    if (!(radius > 0.0)) throw std::invalid_argument("custom_samples: radius must be positive");
    auto f = [samples = std::move(samples), radius](double x) {
        if (std::abs(x) >= radius) return 0.0;
        double t = (x + radius) / (2.0 * radius) * static_cast<double>(samples.size() - 1);
        std::size_t i = std::min(static_cast<std::size_t>(t), samples.size() - 2);
        double frac = t - static_cast<double>(i);
        return samples[i] * (1.0 - frac) + samples[i + 1] * frac;
    };
    return SmoothCutoffSpec(Kind::CustomSamples, std::move(f), radius, std::move(name));
}

SmoothCutoffSpec SmoothCutoffSpec::custom(std::function<double(double)> f, double radius,
                                          std::string name) {
    if (!(radius > 0.0)) throw std::invalid_argument("custom cutoff: radius must be positive");
    return SmoothCutoffSpec(Kind::Custom, std::move(f), radius, std::move(name));
}

// ---- matrix builders -------------------------------------------------------

ComplexMatrix hankel_matrix(const AnalyticSymbol& psi, std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (std::size_t j = 0; j < rows; ++j)
        for (std::size_t k = 0; k < cols; ++k)
            m(j, k) = psi.coeff(static_cast<long>(j + k));
    return m;
}

ComplexMatrix toeplitz_matrix(const TrigPolynomial& t, std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (std::size_t j = 0; j < rows; ++j)
        for (std::size_t k = 0; k < cols; ++k)
            m(j, k) = t.coeff(static_cast<long>(j) - static_cast<long>(k));
    return m;
}

ComplexMatrix toeplitz_matrix(const TrigPolynomial& t, std::size_t n) {
    return toeplitz_matrix(t, n, n);
}

std::pair<ComplexMatrix, ComplexMatrix> split_hankel_lower(const AnalyticSymbol& psi,
                                                           std::size_t n) {
    ComplexMatrix lower(n, n), rest(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            (j > k ? lower : rest)(j, k) = psi.coeff(static_cast<long>(j + k));
    return {std::move(lower), std::move(rest)};
}

// ---- kernels ----------------------------------------------------------------

TrigPolynomial sampled_polynomial(const SmoothCutoffSpec& f, long m) {
    if (m < 1) throw std::invalid_argument("sampled_polynomial: m must be >= 1");
    long r = static_cast<long>(std::ceil(f.support_radius() * static_cast<double>(m)));
    std::vector<cpx> c(static_cast<std::size_t>(2 * r + 1), cpx(0.0));
    for (long k = -r; k <= r; ++k)
        c[static_cast<std::size_t>(k + r)] = f.eval(static_cast<double>(k) / static_cast<double>(m));
    return TrigPolynomial(-r, std::move(c));
}

TrigPolynomial dyadic_block(const TrigPolynomial& f, int n) {
    TrigPolynomial out;
    if (n == 0) {
        for (long k = -1; k <= 1; ++k)
            if (f.coeff(k) != cpx(0.0)) out.set_coeff(k, f.coeff(k));
        return out;
    }
    int an = std::abs(n);
    long sgn = n > 0 ? 1 : -1;
    for (long k = (1L << (an - 1)) + 1; k < (1L << (an + 1)); ++k) {
        cpx v = f.coeff(sgn * k);
        if (v == cpx(0.0)) continue;
        double w = dyadic_weight(k, an);
        if (w != 0.0) out.set_coeff(sgn * k, v * w);
    }
    return out;
}

AnalyticSymbol dyadic_block(const AnalyticSymbol& f, int n) {
    if (n < 0) throw std::invalid_argument("dyadic_block: negative block of an analytic symbol");
    TrigPolynomial b = dyadic_block(TrigPolynomial(f), n);
    AnalyticSymbol out;
    for (long k = std::max(0L, b.lo()); k <= b.hi(); ++k)
        if (b.coeff(k) != cpx(0.0)) out.set_coeff(k, b.coeff(k));
    return out;
}

TrigPolynomial dyadic_block(const TrigPolynomial& f, int n, const SmoothCutoffSpec& r) {
    if (r.kind() == SmoothCutoffSpec::Kind::VPartition) return dyadic_block(f, n);
    TrigPolynomial out;
    int an = std::abs(n);
    if (n == 0 && f.coeff(0) != cpx(0.0)) out.set_coeff(0, f.coeff(0));
    double scale = static_cast<double>(1L << an);
    long kmax = static_cast<long>(std::ceil(r.support_radius() * scale));
    for (long sgn : {1L, -1L}) {
        if (n > 0 && sgn < 0) continue;  // block 0 is two-sided, others take one sign
        if (n < 0 && sgn > 0) continue;
        for (long k = 1; k <= kmax; ++k) {
            cpx v = f.coeff(sgn * k);
            if (v == cpx(0.0)) continue;
            double w = r.eval(static_cast<double>(k) / scale);
            if (w != 0.0) out.set_coeff(sgn * k, v * w);
        }
    }
    return out;
}

TrigPolynomial dirichlet_kernel(long n) {
    if (n < 1) throw std::invalid_argument("dirichlet_kernel: n must be >= 1");
    return TrigPolynomial(-n, std::vector<cpx>(static_cast<std::size_t>(2 * n + 1), cpx(1.0)));
}

TrigPolynomial fejer_square(long n) {
    if (n < 1) throw std::invalid_argument("fejer_square: n must be >= 1");
    double denom = static_cast<double>(2 * n + 1);
    std::vector<cpx> c(static_cast<std::size_t>(4 * n + 1));
    for (long k = -2 * n; k <= 2 * n; ++k)
        c[static_cast<std::size_t>(k + 2 * n)] = (denom - static_cast<double>(std::abs(k))) / denom;
    return TrigPolynomial(-2 * n, std::move(c));
}

AnalyticSymbol phi_witness(int n, int N) {
    if (n < 1) throw std::invalid_argument("phi_witness: n must be >= 1");
    if (N < 1) throw std::invalid_argument("phi_witness: N must be >= 1");
    if (n > 12) throw std::invalid_argument("phi_witness: n > 12 exceeds the exact-coefficient window");
    long M = 1L << n;
    if (M < N + 1)
        throw std::invalid_argument("phi_witness: need 2^n >= N+1 for an analytic result");
    // (N+1)-fold self-convolution of the all-ones window, exact in int64
    if (static_cast<double>(N) * std::log2(static_cast<double>(2 * M + 1)) > 62.0)
        throw std::invalid_argument("phi_witness: integer coefficients would overflow");
    std::vector<std::int64_t> c{1};
    std::vector<std::int64_t> ones(static_cast<std::size_t>(2 * M + 1), 1);
    for (int it = 0; it <= N; ++it) {
        std::vector<std::int64_t> next(c.size() + ones.size() - 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < ones.size(); ++j) next[i + j] += c[i];
        c.swap(next);
    }
    // c now covers exponents -(N+1)M .. (N+1)M ; shift by 4^n
    long shift = 1L << (2 * n);
    long half = (static_cast<long>(c.size()) - 1) / 2;
    double denom = std::pow(static_cast<double>(2 * M + 1), N);
    AnalyticSymbol out;
    out.set_coeff(shift + half, cpx(0.0));  // reserve
    for (long d = -half; d <= half; ++d)
        out.set_coeff(shift + d,
                      cpx(static_cast<double>(c[static_cast<std::size_t>(d + half)]) / denom, 0.0));
    return out;
}

// ---- quadrature --------------------------------------------------------------

namespace {

std::mutex fftw_mutex;

// values[j] = sum_k c[k] exp(2 pi i j k / M); coefficients wrapped mod M.
void fft_evaluate(const TrigPolynomial& f, std::size_t M, std::vector<cpx>& out) {
    out.assign(M, cpx(0.0));
    for (long k = f.lo(); k <= f.hi(); ++k) {
        cpx v = f.coeff(k);
        if (v == cpx(0.0)) continue;
        long r = ((k % static_cast<long>(M)) + static_cast<long>(M)) % static_cast<long>(M);
        out[static_cast<std::size_t>(r)] += v;
    }
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex);
        plan = fftw_plan_dft_1d(static_cast<int>(M), reinterpret_cast<fftw_complex*>(out.data()),
                                reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD,
                                FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex);
        fftw_destroy_plan(plan);
    }
}

double lp_on_grid(const TrigPolynomial& f, double p, std::size_t M, std::vector<cpx>& buf) {
    fft_evaluate(f, M, buf);
    double sum = 0.0, c = 0.0;
    for (const cpx& z : buf) {
        double term = std::pow(std::abs(z), p) - c;
        double t = sum + term;
        c = (t - sum) - term;
        sum = t;
    }
    return std::pow(sum / static_cast<double>(M), 1.0 / p);
}

}  // namespace

LpResult lp_norm(const TrigPolynomial& f, double p, int oversample) {
    if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
    if (oversample < 4) throw std::invalid_argument("lp_norm: oversample must be >= 4");
    // |f| on the circle only sees the frequency span, not the absolute offset
    long degree = f.hi() - f.lo();
    std::size_t M = static_cast<std::size_t>(oversample) * static_cast<std::size_t>(degree + 1);
    M = std::max<std::size_t>(M, 16);
    std::vector<cpx> buf;
    LpResult res;
    double prev = lp_on_grid(f, p, M, buf);
    res.value = prev;
    res.grid = M;
    res.converged = false;
    // |f|^p has algebraic corners at zeros of f, so the midpoint rule gains
    // ~M^-(1+p); keep doubling until successive grids agree tightly.
    const std::size_t grid_cap = std::size_t(1) << 23;
    while (M < grid_cap) {
        M *= 2;
        double cur = lp_on_grid(f, p, M, buf);
        res.last_rel_change = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
        res.value = cur;
        res.grid = M;
        if (res.last_rel_change < 1e-8) {
            res.converged = true;
            break;
        }
        prev = cur;
    }
    return res;
}

LpResult lp_norm(const AnalyticSymbol& f, double p, int oversample) {
    return lp_norm(TrigPolynomial(f), p, oversample);
}

double sup_norm(const TrigPolynomial& f, int oversample) {
    long degree = std::max<long>(f.hi() - f.lo(), 1);
    std::size_t M = static_cast<std::size_t>(2 * oversample) * static_cast<std::size_t>(degree + 1);
    std::vector<cpx> buf;
    fft_evaluate(f, M, buf);
    double m = 0.0;
    for (const cpx& z : buf) m = std::max(m, std::abs(z));
    return m;
}

// ---- shifts and restrictions -------------------------------------------------

AnalyticSymbol backward_shift(const AnalyticSymbol& psi, long k) {
    if (k < 0) throw std::invalid_argument("backward_shift: k must be >= 0");
    AnalyticSymbol out;
    for (long j = 0; j + k <= psi.degree(); ++j)
        if (psi.coeff(j + k) != cpx(0.0)) out.set_coeff(j, psi.coeff(j + k));
    return out;
}

AnalyticSymbol arithmetic_restriction(const AnalyticSymbol& psi, long N, long s) {
    if (N < 1) throw std::invalid_argument("arithmetic_restriction: N must be >= 1");
    if (s < 0) throw std::invalid_argument("arithmetic_restriction: s must be >= 0");
    AnalyticSymbol out;
    for (long j = 0; j * N + s <= psi.degree(); ++j)
        if (psi.coeff(j * N + s) != cpx(0.0)) out.set_coeff(j, psi.coeff(j * N + s));
    return out;
}

// ---- lacunary cover ------------------------------------------------------------

GapProfile lacunary_cover(const std::vector<long>& freqs, double rho, int N) {
    if (freqs.empty()) throw std::invalid_argument("lacunary_cover: empty frequency list");
    if (!(rho > 1.0)) throw std::invalid_argument("lacunary_cover: rho must exceed 1");
    if (N < 1) throw std::invalid_argument("lacunary_cover: N must be >= 1");
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        if (freqs[i] < 1) throw std::invalid_argument("lacunary_cover: frequencies must be >= 1");
        if (i > 0 && freqs[i] <= freqs[i - 1])
            throw std::invalid_argument("lacunary_cover: frequencies must be strictly increasing");
    }
    double thresh = std::pow(rho, 1.0 / static_cast<double>(N));

    // breakpoints: ratios above rho^(1/N). Any N+1 consecutive ratios must
    // contain one, otherwise the list is not a union of N rho-lacunary sequences.
    std::vector<std::size_t> breaks;
    std::size_t last_break = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i + 1 < freqs.size(); ++i) {
        double ratio = static_cast<double>(freqs[i + 1]) / static_cast<double>(freqs[i]);
        // a ratio exactly at the threshold still separates (e.g. powers of two
        // at rho = 2); only strictly smaller gaps force another subsequence
        if (ratio >= thresh * (1.0 - 1e-12)) {
            breaks.push_back(i);
            last_break = i;
        } else {
            std::size_t since = (last_break == static_cast<std::size_t>(-1)) ? i + 1 : i - last_break;
            if (since > static_cast<std::size_t>(N))
                throw std::invalid_argument(
                    "lacunary_cover: no ratio above rho^(1/N) among entries " +
                    std::to_string(last_break == static_cast<std::size_t>(-1) ? 0 : last_break + 1) +
                    ".." + std::to_string(i + 1) + "; input is not a union of " + std::to_string(N) +
                    " lacunary sequences at rho=" + std::to_string(rho));
        }
    }

    GapProfile prof;
    std::size_t start = 0;
    auto close_group = [&](std::size_t end) {  // group covers freqs[start..end]
        long xi = freqs[start], eta = freqs[end] + 1;
        if (!prof.eta.empty() && prof.eta.back() >= xi) {
            prof.eta.back() = eta;  // merge: integer collision leaves no gap
        } else {
            prof.xi.push_back(xi);
            prof.eta.push_back(eta);
        }
    };
    for (std::size_t b : breaks) {
        close_group(b);
        start = b + 1;
    }
    close_group(freqs.size() - 1);

    prof.d = std::numeric_limits<double>::infinity();
    prof.D = 1.0;
    for (std::size_t k = 0; k < prof.xi.size(); ++k) {
        prof.D = std::max(prof.D, static_cast<double>(prof.eta[k]) / static_cast<double>(prof.xi[k]));
        if (k + 1 < prof.xi.size())
            prof.d = std::min(prof.d, static_cast<double>(prof.xi[k + 1]) /
                                          static_cast<double>(prof.eta[k]));
    }
    return prof;
}

}  // namespace slab
