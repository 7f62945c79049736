#include "slab/types.hpp"

#include <algorithm>
#include <cmath>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace slab {

namespace {

// Eigenvalues of a 2x2 Hermitian matrix [[a, b], [conj(b), c]], descending.
void herm2_eigs(double a, cpx b, double c, double* w) {
    double tr = 0.5 * (a + c);
    double disc = 0.25 * (a - c) * (a - c) + std::norm(b);
    double r = std::sqrt(std::max(disc, 0.0));
    w[0] = tr + r;
    w[1] = tr - r;
}

// Eigenvalues of a 3x3 Hermitian matrix, descending (trigonometric method).
void herm3_eigs(const cpx m[3][3], double* w) {
    double q = (m[0][0].real() + m[1][1].real() + m[2][2].real()) / 3.0;
    double a = m[0][0].real() - q, d = m[1][1].real() - q, f = m[2][2].real() - q;
    cpx b = m[0][1], c = m[0][2], e = m[1][2];
    double p2 = a * a + d * d + f * f + 2.0 * (std::norm(b) + std::norm(c) + std::norm(e));
    if (p2 <= 0.0) { w[0] = w[1] = w[2] = q; return; }
    double p = std::sqrt(p2 / 6.0);
    // det(B)/2 for B = (M - qI)/p
    cpx detc = (a * d * f) + 2.0 * std::real(b * e * std::conj(c)) -
               a * std::norm(e) - d * std::norm(c) - f * std::norm(b);
    double r = 0.5 * detc.real() / (p * p * p);
    r = std::clamp(r, -1.0, 1.0);
    double phi = std::acos(r) / 3.0;
    w[0] = q + 2.0 * p * std::cos(phi);
    w[2] = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
    w[1] = 3.0 * q - w[0] - w[2];
}

}  // namespace

void small_singular_values(const ComplexMatrix& a, double* out) {
    std::size_t r = a.rows(), c = a.cols();
    // Gram matrix of the smaller side
    if (r == 1 || c == 1) {
        double s = 0.0;
        for (std::size_t i = 0; i < r * c; ++i) s += std::norm(a.data()[i]);
        out[0] = std::sqrt(s);
        for (std::size_t i = 1; i < std::min(r, c); ++i) out[i] = 0.0;
        return;
    }
    bool tall = r >= c;
    std::size_t n = tall ? c : r;  // n in {2, 3}
    cpx g[3][3];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cpx s = 0.0;
            if (tall)
                for (std::size_t k = 0; k < r; ++k) s += std::conj(a(k, i)) * a(k, j);
            else
                for (std::size_t k = 0; k < c; ++k) s += a(i, k) * std::conj(a(j, k));
            g[i][j] = s;
        }
    double w[3];
    if (n == 2)
        herm2_eigs(g[0][0].real(), g[0][1], g[1][1].real(), w);
    else
        herm3_eigs(g, w);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::sqrt(std::max(w[i], 0.0));
}

std::vector<double> singular_values(const ComplexMatrix& a) {
    if (a.empty()) return {};
    lapack_int m = static_cast<lapack_int>(a.rows());
    lapack_int n = static_cast<lapack_int>(a.cols());
    std::vector<double> s(std::min(a.rows(), a.cols()));
    std::vector<cpx> work(a.data(), a.data() + a.rows() * a.cols());

    // this LAPACKE build checks ldu/ldvt even for jobz='N'; keep them valid
    lapack_int info = LAPACKE_zgesdd(LAPACK_ROW_MAJOR, 'N', m, n, work.data(), n,
                                     s.data(), nullptr, m, nullptr, n);
    if (info != 0) {
        // divide-and-conquer can fail to converge; retry with the QR driver
        work.assign(a.data(), a.data() + a.rows() * a.cols());
        std::vector<double> superb(std::max<std::size_t>(1, s.size()));
        info = LAPACKE_zgesvd(LAPACK_ROW_MAJOR, 'N', 'N', m, n, work.data(), n,
                              s.data(), nullptr, 1, nullptr, 1, superb.data());
        if (info != 0)
            throw std::runtime_error("singular_values: SVD did not converge (info=" +
                                     std::to_string(info) + " for " + std::to_string(m) + "x" +
                                     std::to_string(n) + " input)");
    }
    return s;
}

}  // namespace slab
