#include "slab/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

extern "C" void openblas_set_num_threads(int);

namespace slab {

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b, a; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b, a; }
ComplexMatrix operator*(cpx s, ComplexMatrix a) { return a *= s, a; }

ComplexMatrix outer(const std::vector<cpx>& a, const std::vector<cpx>& b) {
    ComplexMatrix m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
    return m;
}

double lp_combine(const std::vector<double>& values, double e) {
    if (!(e > 0.0)) throw std::invalid_argument("lp_combine: exponent must be positive");
    if (std::isinf(e)) {
        double m = 0.0;
        for (double v : values) m = std::max(m, v);
        return m;
    }
    double acc = 0.0;
    for (double v : values) {
        if (v < 0.0) throw std::invalid_argument("lp_combine: negative value");
        acc += std::pow(v, e);
    }
    return std::pow(acc, 1.0 / e);
}

ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_shape(b, "schur_product");
    ComplexMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) * b(i, j);
    return m;
}

double entrywise_lr_norm(const ComplexMatrix& a, double r) {
    if (!(r > 0.0) || r > 2.0)
        throw std::invalid_argument("entrywise_lr_norm: r must lie in (0, 2]");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) acc += std::pow(std::abs(a(i, j)), r);
    return std::pow(acc, 1.0 / r);
}

SchattenValue schatten_norm(const ComplexMatrix& a, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("schatten_norm: p must be positive");
    std::vector<double> s = singular_values(a);
    SchattenValue out;
    out.p = p;
    if (s.empty() || s[0] == 0.0) return out;
    std::size_t n = s.size();
    if (p < 1.0) {
        // s^p amplifies rank-deficiency noise; drop values under the relative floor
        const double floor = 1e-14 * s[0];
        while (n > 0 && s[n - 1] < floor) --n;
        out.floored = s.size() - n;
    }
    // descending-order compensated accumulation
    double sum = 0.0, c = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double term = std::pow(s[j], p) - c;
        double t = sum + term;
        c = (t - sum) - term;
        sum = t;
    }
    out.value = std::pow(sum, 1.0 / p);
    return out;
}

void init_numerics() {
    setenv("OPENBLAS_NUM_THREADS", "1", 0);
    openblas_set_num_threads(1);
}

}  // namespace slab
