#include "slab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace slab {

namespace {

double circular_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2.0 * M_PI);
    return std::min(d, 2.0 * M_PI - d);
}

TrigPolynomial zero_band(long lo, long hi) {
    return TrigPolynomial(lo, std::vector<cpx>(static_cast<std::size_t>(hi - lo + 1), cpx(0.0)));
}

double min_atom_separation(const DiscreteMeasure& mu) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < mu.theta.size(); ++i)
        for (std::size_t j = i + 1; j < mu.theta.size(); ++j)
            best = std::min(best, circular_distance(mu.theta[i], mu.theta[j]));
    return best;
}

}  // namespace

void validate_measure(const DiscreteMeasure& mu) {
    if (mu.theta.size() != mu.w.size())
        throw std::invalid_argument("DiscreteMeasure: angle and weight counts differ");
    for (double t : mu.theta)
        if (!std::isfinite(t)) throw std::invalid_argument("DiscreteMeasure: non-finite angle");
    for (cpx v : mu.w)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("DiscreteMeasure: non-finite weight");
    for (std::size_t i = 0; i < mu.theta.size(); ++i)
        for (std::size_t j = i + 1; j < mu.theta.size(); ++j)
            if (circular_distance(mu.theta[i], mu.theta[j]) <= 1e-12)
                throw std::invalid_argument(
                    "DiscreteMeasure: atoms " + std::to_string(i) + " and " + std::to_string(j) +
                    " coincide; merge their weights explicitly");
}

cpx fourier_coefficient(const DiscreteMeasure& mu, long k) {
    cpx acc(0.0);
    for (std::size_t j = 0; j < mu.theta.size(); ++j)
        acc += mu.w[j] * std::polar(1.0, -static_cast<double>(k) * mu.theta[j]);
    return acc;
}

double measure_mp_norm(const DiscreteMeasure& mu, double p) {
    if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument("measure_mp_norm: p must lie in (0, 1]");
    std::vector<double> mags(mu.w.size());
    for (std::size_t j = 0; j < mu.w.size(); ++j) mags[j] = std::abs(mu.w[j]);
    return lp_combine(mags, p);
}

ComplexMatrix toeplitz_window(const DiscreteMeasure& mu, std::size_t n) {
    if (n == 0) throw std::invalid_argument("toeplitz_window: window must be nonempty");
    validate_measure(mu);
    std::vector<cpx> diag(2 * n - 1);
    for (long d = -(static_cast<long>(n) - 1); d <= static_cast<long>(n) - 1; ++d)
        diag[static_cast<std::size_t>(d + static_cast<long>(n) - 1)] = fourier_coefficient(mu, d);
    ComplexMatrix out(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            out(j, k) = diag[static_cast<std::size_t>(static_cast<long>(j) - static_cast<long>(k) +
                                                      static_cast<long>(n) - 1)];
    return out;
}

ArcWitness arc_witness(const DiscreteMeasure& mu, std::size_t n, double arc_width,
                       std::size_t samples) {
    validate_measure(mu);
    if (n < 3) throw std::invalid_argument("arc_witness: window must have size >= 3");
    if (!(arc_width > 0.0) || arc_width > M_PI)
        throw std::invalid_argument("arc_witness: arc width must lie in (0, pi]");
    if (samples < std::max<std::size_t>(64, 4 * n))
        throw std::invalid_argument("arc_witness: too few quadrature samples for this window");
    double sep = min_atom_separation(mu);
    if (mu.theta.size() > 1 && sep <= arc_width)
        throw std::invalid_argument(
            "arc_witness: atoms are only " + std::to_string(sep) +
            " apart but the arc spans " + std::to_string(arc_width) +
            "; narrow the arc below the atom separation");

    // spectral profile of a smooth bump supported on |t| <= arc_width/2
    ArcWitness out;
    out.arc_width = arc_width;
    out.x.assign(n, 0.0);
    double c = 0.5 * static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        double freq = static_cast<double>(k) - c;
        cpx acc(0.0);
        for (std::size_t s = 0; s < samples; ++s) {
            double t = -M_PI + 2.0 * M_PI * static_cast<double>(s) / static_cast<double>(samples);
            double f = omega_plateau_eval(4.0 * t / arc_width);
            if (f != 0.0) acc += f * std::polar(1.0, -freq * t);
        }
        out.x[k] = std::abs(acc) / static_cast<double>(samples);
    }
    double norm2 = 0.0;
    for (double v : out.x) norm2 += v * v;
    if (!(norm2 > 0.0)) throw std::logic_error("arc_witness: degenerate bump spectrum");
    double inv = 1.0 / std::sqrt(norm2);
    for (double& v : out.x) v *= inv;

    // near-orthogonality of the modulated copies over the window: the witness
    // value is trustworthy only when all pairwise overlaps are small
    for (std::size_t a = 0; a < mu.theta.size(); ++a)
        for (std::size_t b = a + 1; b < mu.theta.size(); ++b) {
            double d = mu.theta[a] - mu.theta[b];
            cpx g(0.0);
            for (std::size_t k = 0; k < n; ++k)
                g += out.x[k] * out.x[k] * std::polar(1.0, -static_cast<double>(k) * d);
            out.gram_max_offdiag = std::max(out.gram_max_offdiag, std::abs(g));
        }
    if (out.gram_max_offdiag >= 0.01)
        throw std::runtime_error("arc_witness: modulated bumps overlap (Gram off-diagonal " +
                                 std::to_string(out.gram_max_offdiag) +
                                 "); widen the window n or narrow the arc");
    return out;
}

TrigPolynomial omega_window(const DiscreteMeasure& mu, int n, const SmoothCutoffSpec& omega) {
    if (n < 0) throw std::invalid_argument("omega_window: scale must be >= 0");
    if (!(omega.support_radius() > 0.0) || std::abs(omega.eval(0.0) - 1.0) > 1e-12)
        throw std::invalid_argument("omega_window: profile must be a plateau with value 1 at 0");
    validate_measure(mu);
    double scale = static_cast<double>(1L << n);
    long half = static_cast<long>(std::ceil(omega.support_radius() * scale));
    TrigPolynomial f = zero_band(-half, half);
    for (long k = -half; k <= half; ++k) {
        double w = omega.eval(static_cast<double>(k) / scale);
        if (w != 0.0) f.set_coeff(k, fourier_coefficient(mu, k) * w);
    }
    return f;
}

TrigPolynomial omega_window(const DiscreteMeasure& mu, int n) {
    return omega_window(mu, n, SmoothCutoffSpec::omega_plateau());
}

std::vector<DecayRow> omega_convolution_decay(const DiscreteMeasure& mu,
                                              const SmoothCutoffSpec& omega, double p, int n_min,
                                              int n_max) {
    if (!(p > 0.0)) throw std::invalid_argument("omega_convolution_decay: p must be positive");
    if (n_min < 0 || n_max < n_min)
        throw std::invalid_argument("omega_convolution_decay: need 0 <= n_min <= n_max");
    std::vector<DecayRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        DecayRow row;
        row.n = n;
        row.lp = lp_norm(omega_window(mu, n, omega), p).value;
        row.reference = std::pow(2.0, static_cast<double>(n) * (1.0 - 1.0 / p));
        row.ratio = row.lp / row.reference;
        rows.push_back(row);
    }
    return rows;
}

std::vector<DecayRow> omega_convolution_decay(const DiscreteMeasure& mu, double p, int n_min,
                                              int n_max) {
    return omega_convolution_decay(mu, SmoothCutoffSpec::omega_plateau(), p, n_min, n_max);
}

double wiener_mean(const DiscreteMeasure& mu, long N) {
    if (N < 1) throw std::invalid_argument("wiener_mean: averaging length must be >= 1");
    validate_measure(mu);
    double acc = 0.0;
    for (long k = 0; k <= N; ++k) acc += std::norm(fourier_coefficient(mu, k));
    return acc / static_cast<double>(N + 1);
}

AtomicDecomposition greedy_atomic_decompose(const TrigPolynomial& f, double p, int max_terms,
                                            double tol) {
    if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument("greedy_atomic_decompose: p must lie in (0, 1]");
    if (max_terms < 1) throw std::invalid_argument("greedy_atomic_decompose: max_terms must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("greedy_atomic_decompose: tol must be positive");

    AtomicDecomposition out;
    TrigPolynomial r = f;
    out.residual_lp = lp_norm(r, p).value;
    if (out.residual_lp <= tol) return out;

    long maxf = std::max(r.max_abs_freq(), 1L);
    int n_hi = 0;
    while ((1L << (n_hi + 1)) < maxf) ++n_hi;
    ++n_hi;  // plateau at scale n covers |k| <= 2^n fully; go one past the top

    struct Candidate {
        double drop;
        int n;
        long shift_idx;
        long grid;
        cpx corr;
    };

    for (int term = 0; term < max_terms; ++term) {
        std::vector<Candidate> cands;
        for (int n = 0; n <= n_hi; ++n) {
            long half = 1L << (n + 1);
            double scale = static_cast<double>(1L << n);
            // windowed residual g(k) = r(k) omega(k / 2^n); correlation with the
            // shifted atom is g evaluated at the shift angle
            long glo = std::max(-half, r.lo()), ghi = std::min(half, r.hi());
            if (glo > ghi) continue;
            TrigPolynomial g = zero_band(glo, ghi);
            double energy = 0.0;
            bool nonzero = false;
            for (long k = g.lo(); k <= g.hi(); ++k) {
                double w = omega_plateau_eval(static_cast<double>(k) / scale);
                g.set_coeff(k, r.coeff(k) * w);
                if (g.coeff(k) != cpx(0.0)) nonzero = true;
            }
            for (long k = -half; k <= half; ++k) {
                double w = omega_plateau_eval(static_cast<double>(k) / scale);
                energy += w * w;
            }
            if (!nonzero || !(energy > 0.0)) continue;
            long grid = 1L << (n + 3);
            for (long t = 0; t < grid; ++t) {
                double s = 2.0 * M_PI * static_cast<double>(t) / static_cast<double>(grid);
                cpx corr = g.eval(std::polar(1.0, s));
                double drop = std::norm(corr) / energy;
                cands.push_back({drop, n, t, grid, corr / energy});
            }
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Candidate& a, const Candidate& b) { return a.drop > b.drop; });

        bool accepted = false;
        for (std::size_t c = 0; c < std::min<std::size_t>(8, cands.size()); ++c) {
            const Candidate& cd = cands[c];
            double s = 2.0 * M_PI * static_cast<double>(cd.shift_idx) / static_cast<double>(cd.grid);
            long half = 1L << (cd.n + 1);
            double scale = static_cast<double>(1L << cd.n);
            TrigPolynomial trial = zero_band(std::min(r.lo(), -half), std::max(r.hi(), half));
            for (long k = trial.lo(); k <= trial.hi(); ++k) {
                double w = (std::llabs(k) <= half)
                               ? omega_plateau_eval(static_cast<double>(k) / scale)
                               : 0.0;
                cpx atom_k = w * std::polar(1.0, -static_cast<double>(k) * s);
                trial.set_coeff(k, r.coeff(k) - cd.corr * atom_k);
            }
            double new_lp = lp_norm(trial, p).value;
            if (new_lp < out.residual_lp) {
                r = trial;
                out.residual_lp = new_lp;
                out.terms.push_back({cd.corr, cd.n, s});
                out.weight_sum_p += std::pow(std::abs(cd.corr), p) *
                                    std::pow(2.0, -static_cast<double>(cd.n) * (1.0 - p));
                out.weight_sum_1 += std::abs(cd.corr);
                accepted = true;
                break;
            }
        }
        if (!accepted)
            throw std::runtime_error(
                "greedy_atomic_decompose: stagnated at residual " +
                std::to_string(out.residual_lp) + " after " + std::to_string(out.terms.size()) +
                " terms (tol " + std::to_string(tol) + ")");
        if (out.residual_lp <= tol) return out;
    }
    if (out.residual_lp > tol)
        throw std::runtime_error("greedy_atomic_decompose: residual " +
                                 std::to_string(out.residual_lp) + " above tol " +
                                 std::to_string(tol) + " after " + std::to_string(max_terms) +
                                 " terms");
    return out;
}

}  // namespace slab
