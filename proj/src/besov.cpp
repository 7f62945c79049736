#include "slab/besov.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace slab {

namespace {

int top_block(long freq) {  // largest block index with support reaching |freq|
    if (freq <= 1) return 0;
    return std::bit_width(static_cast<unsigned long>(freq)) - 1 + 1;  // floor(log2)+1
}

}  // namespace

std::vector<BesovBlockRow> besov_block_table(const TrigPolynomial& f, const BesovParams& params,
                                             const SmoothCutoffSpec& v) {
    std::vector<BesovBlockRow> rows;
    int n_pos = f.hi() >= 1 ? top_block(f.hi()) : 0;
    int n_neg = f.lo() <= -1 ? top_block(-f.lo()) : 0;
    for (int n = -n_neg; n <= n_pos; ++n) {
        TrigPolynomial block = dyadic_block(f, n, v);
        if (block.max_abs_freq() == 0 && block.coeff(0) == cpx(0.0) && n != 0) continue;
        double bn = lp_norm(block, params.p).value;
        double w = std::pow(2.0, std::abs(n) * params.s) * bn;
        rows.push_back({n, bn, w});
    }
    return rows;
}

double besov_norm(const TrigPolynomial& f, const BesovParams& params, const SmoothCutoffSpec& v) {
    std::vector<double> weighted;
    for (const BesovBlockRow& r : besov_block_table(f, params, v)) weighted.push_back(r.weighted);
    return lp_combine(weighted, params.q);
}

double besov_norm(const AnalyticSymbol& f, const BesovParams& params, const SmoothCutoffSpec& v) {
    return besov_norm(TrigPolynomial(f), params, v);
}

LacunaryScore lacunary_membership(const LacunarySymbolSpec& spec, PExponent p,
                                  std::optional<double> rho, std::optional<int> N) {
    if (spec.frequencies.size() != spec.amplitudes.size())
        throw std::invalid_argument("lacunary_membership: frequency/amplitude length mismatch");
    if (spec.frequencies.empty())
        throw std::invalid_argument("lacunary_membership: empty spectrum");

    LacunaryScore out;
    auto try_cover = [&](double r, int n) {
        lacunary_cover(spec.frequencies, r, n);  // throws when the split fails
        out.rho = r;
        out.groups = n;
    };
    if (rho || N) {
        try_cover(rho.value_or(2.0), N.value_or(1));
    } else {
        bool found = false;
        std::string last_error;
        for (int n = 1; n <= 4 && !found; ++n) {
            for (int ri = 0; ri <= 9 && !found; ++ri) {
                double r = 2.0 - 0.1 * ri;  // 2.0 down to 1.1
                try {
                    try_cover(r, n);
                    found = true;
                } catch (const std::invalid_argument& e) {
                    last_error = e.what();
                }
            }
        }
        if (!found)
            throw std::invalid_argument("lacunary_membership: no gap split found (N<=4, rho in [1.1,2]); last: " +
                                        last_error);
    }

    double e = p.sharp();
    std::vector<double> terms;
    terms.reserve(spec.frequencies.size());
    for (std::size_t j = 0; j < spec.frequencies.size(); ++j) {
        double base = std::isinf(e) ? 1.0
                                    : std::pow(static_cast<double>(spec.frequencies[j]), 1.0 / e);
        terms.push_back(base * std::abs(spec.amplitudes[j]));
    }
    out.score = lp_combine(terms, e);
    out.in_mp = std::isfinite(out.score);
    return out;
}

double gap_necessary_score(const AnalyticSymbol& f, const GapProfile& profile, PExponent p) {
    std::string offenders;
    for (long k = 0; k <= f.degree(); ++k) {
        if (f.coeff(k) == cpx(0.0)) continue;
        bool covered = false;
        for (std::size_t g = 0; g < profile.xi.size(); ++g)
            if (k >= profile.xi[g] && k < profile.eta[g]) {
                covered = true;
                break;
            }
        if (!covered) {
            if (!offenders.empty()) offenders += ",";
            offenders += std::to_string(k);
        }
    }
    if (!offenders.empty())
        throw std::invalid_argument("gap_necessary_score: spectrum leaks outside the intervals at k=" +
                                    offenders);
    double sharp = p.sharp();
    double s = std::isinf(sharp) ? 0.0 : 1.0 / sharp;
    return besov_norm(f, BesovParams(s, p.p(), sharp));
}

double finite_difference_besov(const TrigPolynomial& f, double s, double p, int grid) {
    if (!(s > 0.0 && s < 1.0))
        throw std::invalid_argument("finite_difference_besov: s must lie in (0,1)");
    if (!(p > 0.0)) throw std::invalid_argument("finite_difference_besov: p must be positive");
    if (grid < 64) throw std::invalid_argument("finite_difference_besov: grid must be >= 64");

    double best = 0.0;
    for (int j = 1; j < grid; ++j) {
        double ang = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(grid);
        cpx zeta = std::polar(1.0, ang);
        TrigPolynomial diff = f;
        for (long k = f.lo(); k <= f.hi(); ++k) {
            cpx c = f.coeff(k);
            if (c != cpx(0.0)) diff.set_coeff(k, c * (std::pow(zeta, cpx(static_cast<double>(k))) - 1.0));
            else if (diff.coeff(k) != cpx(0.0)) diff.set_coeff(k, cpx(0.0));
        }
        double num = lp_norm(diff, p).value;
        best = std::max(best, num / std::pow(std::abs(zeta - 1.0), s));
    }
    for (int k = 1; k <= 12; ++k) {
        double r = 1.0 - std::ldexp(1.0, -k);
        TrigPolynomial diff = f;
        for (long m = f.lo(); m <= f.hi(); ++m) {
            cpx c = f.coeff(m);
            if (c != cpx(0.0))
                diff.set_coeff(m, c * (1.0 - std::pow(r, static_cast<double>(std::abs(m)))));
            else if (diff.coeff(m) != cpx(0.0))
                diff.set_coeff(m, cpx(0.0));
        }
        double num = lp_norm(diff, p).value;
        best = std::max(best, num / std::pow(1.0 - r, s));
    }
    return best;
}

}  // namespace slab
