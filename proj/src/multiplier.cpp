#include "slab/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "det_rng.hpp"

namespace slab {

namespace {

using detail::DetRng;

constexpr double kGoldenStep = 0.6180339887498949;  // (sqrt(5)-1)/2

double schatten_from(const double* s, std::size_t n, double p) {
    if (n == 0 || !(s[0] > 0.0)) return 0.0;
    double floor = p < 1.0 ? 1e-14 * s[0] : 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n && s[i] >= floor; ++i) sum += std::pow(s[i], p);
    return std::pow(sum, 1.0 / p);
}

// ||diag(y) a diag(x)||_{S_p}; closed-form singular values when both dims <= 3.
double objective(const ComplexMatrix& a, const std::vector<double>& x,
                 const std::vector<double>& y, double p, ComplexMatrix& scratch) {
    std::size_t m = a.rows(), n = a.cols();
    if (scratch.rows() != m || scratch.cols() != n) scratch = ComplexMatrix(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        double yi = y[i];
        for (std::size_t j = 0; j < n; ++j) scratch(i, j) = a(i, j) * (yi * x[j]);
    }
    if (m <= 3 && n <= 3) {
        double s[3];
        small_singular_values(scratch, s);
        return schatten_from(s, std::min(m, n), p);
    }
    std::vector<double> s = singular_values(scratch);
    return schatten_from(s.data(), s.size(), p);
}

bool normalize(std::vector<double>& v) {
    double s = 0.0;
    for (double t : v) s += t * t;
    if (!(s > 0.0)) return false;
    double inv = 1.0 / std::sqrt(s);
    for (double& t : v) t *= inv;
    return true;
}

// Line search over the arc between v-without-idx and the idx coordinate
// vector; v stays unit. Accepts only strict improvement.
bool improve_coordinate(const ComplexMatrix& a, double p, std::vector<double>& x,
                        std::vector<double>& y, bool on_x, std::size_t idx, double& best,
                        int golden_iters, ComplexMatrix& scratch) {
    std::vector<double>& v = on_x ? x : y;
    double rest2 = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (j != idx) rest2 += v[j] * v[j];
    if (rest2 < 1e-28) return false;  // v is already the coordinate vector
    double rest = std::sqrt(rest2);

    std::vector<double> base = v;
    auto place = [&](double theta) {
        double ct = std::cos(theta) / rest, st = std::sin(theta);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = base[j] * ct;
        v[idx] = st;
    };

    double lo = 0.0, hi = 0.5 * M_PI;
    double c = hi - kGoldenStep * (hi - lo), d = lo + kGoldenStep * (hi - lo);
    place(c);
    double fc = objective(a, x, y, p, scratch);
    place(d);
    double fd = objective(a, x, y, p, scratch);
    for (int it = 0; it < golden_iters; ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - kGoldenStep * (hi - lo);
            place(c);
            fc = objective(a, x, y, p, scratch);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + kGoldenStep * (hi - lo);
            place(d);
            fd = objective(a, x, y, p, scratch);
        }
    }
    double theta = fc > fd ? c : d;
    double val = std::max(fc, fd);
    if (val > best) {
        place(theta);
        best = val;
        return true;
    }
    v = base;
    return false;
}

double polish(const ComplexMatrix& a, double p, std::vector<double>& x, std::vector<double>& y,
              double val, const AscentOptions& opt, ComplexMatrix& scratch) {
    for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
        double before = val;
        for (std::size_t j = 0; j < x.size(); ++j)
            improve_coordinate(a, p, x, y, true, j, val, opt.golden_iters, scratch);
        for (std::size_t i = 0; i < y.size(); ++i)
            improve_coordinate(a, p, x, y, false, i, val, opt.golden_iters, scratch);
        if (val - before <= opt.rel_tol * std::max(val, 1e-300)) break;
    }
    return val;
}

std::vector<double> tent_profile(std::size_t dim, double half_width) {
    std::vector<double> v(dim);
    double center = 0.5 * static_cast<double>(dim - 1);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = std::max(0.0, 1.0 - std::abs(static_cast<double>(i) - center) / half_width);
    return v;
}

struct Start {
    std::vector<double> x, y;
};

std::vector<Start> structured_starts(const ComplexMatrix& a, const AscentOptions& opt) {
    std::size_t m = a.rows(), n = a.cols();
    std::vector<Start> starts;
    auto push = [&](std::vector<double> x, std::vector<double> y) {
        if (normalize(x) && normalize(y)) starts.push_back({std::move(x), std::move(y)});
    };

    push(std::vector<double>(n, 1.0), std::vector<double>(m, 1.0));

    std::vector<double> hx(n), hy(m);
    for (std::size_t j = 0; j < n; ++j) hx[j] = 1.0 / std::sqrt(static_cast<double>(j + 1));
    for (std::size_t i = 0; i < m; ++i) hy[i] = 1.0 / std::sqrt(static_cast<double>(i + 1));
    push(hx, hy);

    for (double frac : {2.0, 4.0, 8.0}) {
        double lx = static_cast<double>(n) / frac, ly = static_cast<double>(m) / frac;
        if (lx >= 1.0 && ly >= 1.0) push(tent_profile(n, lx), tent_profile(m, ly));
    }

    if (opt.coordinate_starts && m > 0 && n > 0) {
        // top-3 entries by modulus seed coordinate-pair starts; every other
        // coordinate pair is dominated by its |a_ji| value, which the caller
        // already covers through the entrywise maximum candidate below
        std::vector<std::pair<double, std::pair<std::size_t, std::size_t>>> mags;
        mags.reserve(m * n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) mags.push_back({std::abs(a(i, j)), {i, j}});
        std::stable_sort(mags.begin(), mags.end(),
                         [](const auto& u, const auto& v) { return u.first > v.first; });
        for (std::size_t t = 0; t < std::min<std::size_t>(3, mags.size()); ++t) {
            if (!(mags[t].first > 0.0)) break;
            std::vector<double> x(n, 0.0), y(m, 0.0);
            x[mags[t].second.second] = 1.0;
            y[mags[t].second.first] = 1.0;
            push(std::move(x), std::move(y));
        }
    }

    if (opt.blocks != nullptr) {
        opt.blocks->validate(m, n);
        for (std::size_t k = 0; k + 1 < opt.blocks->row_cuts.size(); ++k) {
            std::vector<double> x(n, 0.0), y(m, 0.0);
            for (std::size_t j = opt.blocks->col_cuts[k]; j < opt.blocks->col_cuts[k + 1]; ++j)
                x[j] = 1.0;
            for (std::size_t i = opt.blocks->row_cuts[k]; i < opt.blocks->row_cuts[k + 1]; ++i)
                y[i] = 1.0;
            push(std::move(x), std::move(y));
        }
    }

    for (const auto& ws : opt.warm_starts) {
        if (ws.first.size() != n || ws.second.size() != m)
            throw std::invalid_argument("mult_lower_rank1: warm start has wrong dimensions");
        for (double t : ws.first)
            if (t < 0.0) throw std::invalid_argument("mult_lower_rank1: warm start must be nonnegative");
        for (double t : ws.second)
            if (t < 0.0) throw std::invalid_argument("mult_lower_rank1: warm start must be nonnegative");
        push(ws.first, ws.second);
    }
    return starts;
}

}  // namespace

void BlockPartition::validate(std::size_t rows, std::size_t cols) const {
    auto check = [](const std::vector<std::size_t>& cuts, std::size_t dim, const char* what) {
        if (cuts.size() < 2 || cuts.front() != 0 || cuts.back() != dim)
            throw std::invalid_argument(std::string("BlockPartition: ") + what +
                                        " cuts must run from 0 to the dimension");
        for (std::size_t i = 1; i < cuts.size(); ++i)
            if (cuts[i] <= cuts[i - 1])
                throw std::invalid_argument(std::string("BlockPartition: ") + what +
                                            " cuts must increase strictly");
    };
    check(row_cuts, rows, "row");
    check(col_cuts, cols, "column");
    if (row_cuts.size() != col_cuts.size())
        throw std::invalid_argument("BlockPartition: row and column cut counts differ");
}

MultiplierEstimate mult_lower_rank1(const ComplexMatrix& a, PExponent p, int restarts,
                                    std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("mult_lower_rank1: restarts must be >= 1");
    return mult_lower_rank1(a, p, restarts, seed, AscentOptions{});
}

MultiplierEstimate mult_lower_rank1(const ComplexMatrix& a, PExponent p, int restarts,
                                    std::uint64_t seed, const AscentOptions& options) {
    if (restarts < 0) throw std::invalid_argument("mult_lower_rank1: restarts must be >= 0");
    std::size_t m = a.rows(), n = a.cols();
    if (m == 0 || n == 0) throw std::invalid_argument("mult_lower_rank1: empty matrix");

    MultiplierEstimate est;
    est.seed = seed;
    est.restarts_used = restarts;
    est.lower_method = "rank1-ascent";
    est.witness_x.assign(n, 0.0);
    est.witness_y.assign(m, 0.0);

    ComplexMatrix scratch;
    double best = -1.0;
    std::vector<double> bx, by;

    // entrywise maximum: the best coordinate-pair witness, evaluated exactly
    std::size_t bi = 0, bj = 0;
    double bmag = -1.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(a(i, j)) > bmag) {
                bmag = std::abs(a(i, j));
                bi = i;
                bj = j;
            }
    best = bmag;
    bx.assign(n, 0.0);
    by.assign(m, 0.0);
    bx[bj] = 1.0;
    by[bi] = 1.0;

    auto run_start = [&](std::vector<double> x, std::vector<double> y) {
        double val = objective(a, x, y, p.p(), scratch);
        val = polish(a, p.p(), x, y, val, options, scratch);
        if (val > best) {
            best = val;
            bx = std::move(x);
            by = std::move(y);
        }
    };

    for (Start& s : structured_starts(a, options)) run_start(std::move(s.x), std::move(s.y));

    for (int r = 0; r < restarts; ++r) {
        DetRng rng(seed, static_cast<std::uint64_t>(r));
        std::vector<double> x(n), y(m);
        for (double& t : x) t = std::sqrt(-std::log(1.0 - rng.uniform()));
        for (double& t : y) t = std::sqrt(-std::log(1.0 - rng.uniform()));
        if (!normalize(x)) x.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
        if (!normalize(y)) y.assign(m, 1.0 / std::sqrt(static_cast<double>(m)));
        run_start(std::move(x), std::move(y));
    }

    est.witness_x = bx;
    est.witness_y = by;
    // report through the reference SVD path so the witness identity
    // ||a * outer(y, x)||_{S_p} = lower holds against schatten_norm exactly
    ComplexMatrix final_mat(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) final_mat(i, j) = a(i, j) * (by[i] * bx[j]);
    est.lower = schatten_norm(final_mat, p.p()).value;
    return est;
}

double mult_oracle_small(const ComplexMatrix& a, PExponent p, double resolution,
                         std::uint64_t seed) {
    if (a.rows() > 3 || a.cols() > 3 || a.rows() == 0 || a.cols() == 0)
        throw std::invalid_argument("mult_oracle_small: dimensions must be within 1..3");
    if (!(resolution > 0.0))
        throw std::invalid_argument("mult_oracle_small: resolution must be positive");

    auto sphere_grid = [](std::size_t dim, double res) {
        std::vector<std::vector<double>> pts;
        if (dim == 1) {
            pts.push_back({1.0});
            return pts;
        }
        std::size_t k = static_cast<std::size_t>(std::ceil(0.5 * M_PI / res)) + 1;
        if (dim == 2) {
            for (std::size_t t = 0; t < k; ++t) {
                double th = 0.5 * M_PI * static_cast<double>(t) / static_cast<double>(k - 1);
                pts.push_back({std::cos(th), std::sin(th)});
            }
            return pts;
        }
        for (std::size_t t = 0; t < k; ++t) {
            double th = 0.5 * M_PI * static_cast<double>(t) / static_cast<double>(k - 1);
            for (std::size_t u = 0; u < k; ++u) {
                double ph = 0.5 * M_PI * static_cast<double>(u) / static_cast<double>(k - 1);
                pts.push_back({std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                               std::cos(th)});
            }
        }
        return pts;
    };

    double res3 = std::max(resolution, 0.05);  // pair grid in 4 angles; refined below
    std::vector<std::vector<double>> xs = sphere_grid(a.cols(), a.cols() == 3 ? res3 : resolution);
    std::vector<std::vector<double>> ys = sphere_grid(a.rows(), a.rows() == 3 ? res3 : resolution);

    ComplexMatrix scratch;
    double best = 0.0;
    std::vector<double> bx = xs.front(), by = ys.front();
    for (const auto& y : ys)
        for (const auto& x : xs) {
            double v = objective(a, x, y, p.p(), scratch);
            if (v > best) {
                best = v;
                bx = x;
                by = y;
            }
        }

    DetRng rng(seed, 0xABCDEF);
    std::vector<double> x(a.cols()), y(a.rows());
    for (int t = 0; t < 1000000; ++t) {
        for (double& u : x) u = std::abs(rng.normal());
        for (double& u : y) u = std::abs(rng.normal());
        if (!normalize(x) || !normalize(y)) continue;
        double v = objective(a, x, y, p.p(), scratch);
        if (v > best) {
            best = v;
            bx = x;
            by = y;
        }
    }

    DetRng rng2(seed, 0x5EEDF00D);
    for (double sigma : {0.3, 0.1, 0.03, 0.01, 0.003, 0.001}) {
        for (int t = 0; t < 20000; ++t) {
            for (std::size_t j = 0; j < x.size(); ++j)
                x[j] = std::max(0.0, bx[j] + sigma * rng2.normal());
            for (std::size_t i = 0; i < y.size(); ++i)
                y[i] = std::max(0.0, by[i] + sigma * rng2.normal());
            if (!normalize(x) || !normalize(y)) continue;
            double v = objective(a, x, y, p.p(), scratch);
            if (v > best) {
                best = v;
                bx = x;
                by = y;
            }
        }
    }
    return best;
}

double mult_upper_hadamard(const ComplexMatrix& a, PExponent p) {
    if (a.empty()) return 0.0;
    if (p.sharp_infinite()) {
        std::vector<double> s = singular_values(a);
        return s.empty() ? 0.0 : s.front();
    }
    return schatten_norm(a, p.sharp()).value;
}

double mult_upper_hankel_poly(const AnalyticSymbol& psi, PExponent p) {
    long m = psi.degree() + 1;
    double norm = lp_norm(psi, p.p()).value;
    return std::pow(2.0 * static_cast<double>(m), 1.0 / p.p() - 1.0) * norm;
}

double mult_upper_hankel_trig(const TrigPolynomial& t, PExponent p) {
    long m = t.max_abs_freq() + 1;
    double norm = lp_norm(t, p.p()).value;
    return std::pow(4.0 * static_cast<double>(m), 1.0 / p.p() - 1.0) * norm;
}

std::vector<ComplexMatrix> lemma31_decompose(const AnalyticSymbol& psi, const std::vector<cpx>& a,
                                             const std::vector<cpx>& b, std::size_t m) {
    std::size_t need = std::max<std::size_t>(
        {static_cast<std::size_t>(psi.degree()) + 1, a.size(), b.size(), 1});
    if (m == 0) m = need;
    if (a.size() > m || b.size() > m)
        throw std::invalid_argument("lemma31_decompose: vector support exceeds the window [0,m)");
    if (static_cast<std::size_t>(psi.degree()) + 1 > m)
        throw std::invalid_argument("lemma31_decompose: symbol degree exceeds m-1");

    // each part is sized by the vectors themselves; rows/columns beyond their
    // support would be identically zero and only pad the output
    std::vector<ComplexMatrix> out;
    out.reserve(2 * m);
    for (std::size_t j = 0; j < 2 * m; ++j) {
        double ang = M_PI * static_cast<double>(j) / static_cast<double>(m);  // 2 pi j / 2m
        cpx zeta = std::polar(1.0, ang);
        cpx psi_val = psi.eval(zeta);
        std::vector<cpx> u(a.size()), w(b.size());
        for (std::size_t t = 0; t < a.size(); ++t)
            u[t] = a[t] * psi_val * std::polar(1.0, -ang * static_cast<double>(t));  // zeta^-t
        for (std::size_t t = 0; t < b.size(); ++t)
            w[t] = b[t] * std::polar(1.0, -ang * static_cast<double>(t));
        out.push_back(outer(u, w));
    }
    return out;
}

double block_diagonal_norm(const std::vector<double>& block_values, PExponent p) {
    for (double v : block_values)
        if (v < 0.0) throw std::invalid_argument("block_diagonal_norm: negative block value");
    return lp_combine(block_values, p.sharp());
}

double strip_upper_bound(const ComplexMatrix& a, const std::vector<std::size_t>& row_cuts,
                         const std::vector<double>& strip_values, PExponent p) {
    if (row_cuts.size() < 2 || row_cuts.front() != 0 || row_cuts.back() != a.rows())
        throw std::invalid_argument("strip_upper_bound: cuts must run from 0 to rows");
    for (std::size_t i = 1; i < row_cuts.size(); ++i)
        if (row_cuts[i] <= row_cuts[i - 1])
            throw std::invalid_argument("strip_upper_bound: strips overlap or are empty");
    if (strip_values.size() != row_cuts.size() - 1)
        throw std::invalid_argument("strip_upper_bound: one value per strip required");
    for (double v : strip_values)
        if (v < 0.0) throw std::invalid_argument("strip_upper_bound: negative strip value");
    return lp_combine(strip_values, p.flat());
}

ComplexMatrix corner_cut(const ComplexMatrix& a, std::size_t m, std::size_t n) {
    if (m > a.rows() || n > a.cols())
        throw std::invalid_argument("corner_cut: cut exceeds dimensions");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = m; i < a.rows(); ++i)
        for (std::size_t j = n; j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

ComplexMatrix q_corner(std::size_t m) { return ComplexMatrix::ones(m + 1, m + 1); }

CoefficientBound coefficient_bound_check(const AnalyticSymbol& psi, long n, long m,
                                         double mult_upper, PExponent p) {
    if (n < 0 || m < 0 || m > n)
        throw std::invalid_argument("coefficient_bound_check: need 0 <= m <= n");
    if (mult_upper < 0.0)
        throw std::invalid_argument("coefficient_bound_check: negative upper bound");
    CoefficientBound out;
    out.lhs = std::abs(psi.coeff(n));
    double mm = static_cast<double>(m + 1);
    double inner = 0.0;
    for (long j = -m; j <= m; ++j)
        inner += (1.0 - std::abs(static_cast<double>(j)) / mm) * std::norm(psi.coeff(n + j));
    inner /= mm;
    double pp = p.p();
    out.rhs = std::pow(inner, (1.0 - pp) / (2.0 - pp)) * std::pow(mult_upper, pp / (2.0 - pp));
    out.ok = out.lhs <= out.rhs * (1.0 + 1e-9);
    return out;
}

double gamma_minus_upper(const AnalyticSymbol& psi, PExponent p) {
    std::vector<long> freq;
    std::vector<double> amp;
    for (long k = 0; k <= psi.degree(); ++k)
        if (psi.coeff(k) != cpx(0.0)) {
            freq.push_back(k);
            amp.push_back(std::abs(psi.coeff(k)));
        }
    if (freq.empty()) return 0.0;
    if (freq.front() < 1)
        throw std::invalid_argument("gamma_minus_upper: lowest frequency must be positive");
    for (std::size_t l = 0; l + 1 < freq.size(); ++l)
        if (freq[l + 1] < 2 * freq[l])
            throw std::invalid_argument(
                "gamma_minus_upper: frequencies must at least double (violated at " +
                std::to_string(freq[l]) + " -> " + std::to_string(freq[l + 1]) + ")");
    if (p.sharp_infinite()) {
        double mx = 0.0;
        for (double v : amp) mx = std::max(mx, v);
        return mx;
    }
    double e = p.sharp();
    double acc = 0.0;
    for (std::size_t l = 0; l < freq.size(); ++l) {
        double count = static_cast<double>((freq[l] + 1) / 2);  // entries below the diagonal
        acc += count * std::pow(amp[l], e);
    }
    return std::pow(acc, 1.0 / e);
}

std::vector<MollifierRow> mollifier_convergence(const ComplexMatrix& a, const SmoothCutoffSpec& f,
                                                const std::vector<long>& m_list, PExponent p,
                                                int restarts, std::uint64_t seed) {
    if (std::abs(f.eval(0.0) - 1.0) > 1e-12)
        throw std::invalid_argument("mollifier_convergence: profile must equal 1 at 0");
    std::vector<MollifierRow> rows;
    for (long m : m_list) {
        if (m < 1) throw std::invalid_argument("mollifier_convergence: scales must be >= 1");
        ComplexMatrix d(a.rows(), a.cols());
        bool all_zero = true;
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                double w = f.eval(static_cast<double>(i + j) / static_cast<double>(m));
                d(i, j) = a(i, j) * (1.0 - w);
                if (d(i, j) != cpx(0.0)) all_zero = false;
            }
        MollifierRow row;
        row.m = m;
        if (!all_zero) {
            MultiplierEstimate est =
                estimate_multiplier_norm(d, p, restarts, seed + static_cast<std::uint64_t>(m));
            row.lower = est.lower;
            row.upper = est.upper;
        }
        rows.push_back(row);
    }
    return rows;
}

void merge_upper(MultiplierEstimate& est, double upper, const std::string& method) {
    if (upper < 0.0) throw std::invalid_argument("merge_upper: negative upper bound");
    if (upper < est.upper) {
        est.upper = upper;
        est.upper_method = method;
    }
    if (est.lower > est.upper * (1.0 + 1e-9))
        throw std::logic_error("multiplier bracket inverted: lower " + std::to_string(est.lower) +
                               " > upper " + std::to_string(est.upper) + " (" + est.upper_method +
                               ")");
}

MultiplierEstimate estimate_multiplier_norm(const ComplexMatrix& a, PExponent p, int restarts,
                                            std::uint64_t seed) {
    return estimate_multiplier_norm(a, p, restarts, seed, AscentOptions{});
}

MultiplierEstimate estimate_multiplier_norm(const ComplexMatrix& a, PExponent p, int restarts,
                                            std::uint64_t seed, const AscentOptions& options) {
    MultiplierEstimate est = mult_lower_rank1(a, p, restarts, seed, options);
    est.upper = std::numeric_limits<double>::infinity();
    merge_upper(est, mult_upper_hadamard(a, p), "schatten-sharp");
    return est;
}

}  // namespace slab
