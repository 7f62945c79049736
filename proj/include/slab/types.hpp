#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace slab {

using cpx = std::complex<double>;

// Dense row-major complex matrix. Values are immutable once built by the
// operations below; mutation is only through element access while assembling.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix ones(std::size_t rows, std::size_t cols) {
        ComplexMatrix m(rows, cols);
        for (auto& z : m.data_) z = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    cpx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cpx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cpx* data() { return data_.data(); }
    const cpx* data() const { return data_.data(); }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_shape(o, "matrix sum");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_shape(o, "matrix difference");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    ComplexMatrix& operator*=(cpx s) {
        for (auto& z : data_) z *= s;
        return *this;
    }

    void require_same_shape(const ComplexMatrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string(what) + ": shape mismatch " +
                                        std::to_string(rows_) + "x" + std::to_string(cols_) + " vs " +
                                        std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cpx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cpx s, ComplexMatrix a);

// outer(a, b)(i, j) = a[i] * b[j]  (bilinear; callers conjugate explicitly when needed)
ComplexMatrix outer(const std::vector<cpx>& a, const std::vector<cpx>& b);

// Exponent p in (0, 1] with its derived exponents.
// sharp() = p/(1-p) is +infinity at p = 1; aggregation helpers dispatch to max there.
class PExponent {
public:
    explicit PExponent(double p) : p_(p) {
        if (!(p > 0.0) || p > 1.0)
            throw std::invalid_argument("PExponent: p must lie in (0, 1], got " + std::to_string(p));
    }
    double p() const { return p_; }
    bool sharp_infinite() const { return p_ == 1.0; }
    double sharp() const {
        return p_ == 1.0 ? std::numeric_limits<double>::infinity() : p_ / (1.0 - p_);
    }
    double flat() const { return 2.0 * p_ / (2.0 - p_); }

private:
    double p_;
};

// (sum v_i^e)^(1/e) for e in (0, inf]; e = inf gives max. Values must be >= 0.
double lp_combine(const std::vector<double>& values, double e);

struct SchattenValue {
    double value = 0.0;
    double p = 0.0;
    std::size_t floored = 0;  // singular values dropped by the relative floor
};

// (sum s_j^p)^(1/p) over singular values. p in (0, inf). For p < 1 singular
// values below 1e-14 * s_max are dropped (count reported in .floored).
SchattenValue schatten_norm(const ComplexMatrix& a, double p);

ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b);

// (sum |a_jk|^r)^(1/r), r in (0, 2].
double entrywise_lr_norm(const ComplexMatrix& a, double r);

// Singular values, descending. Throws std::runtime_error if both LAPACK
// drivers fail to converge.
std::vector<double> singular_values(const ComplexMatrix& a);

// Fast singular values for rows,cols <= 3 (closed-form Hermitian eigenvalues
// of A*A). Used in estimator hot loops; final reported values go through
// singular_values().
void small_singular_values(const ComplexMatrix& a, double* out);

// Forces single-threaded BLAS so results do not depend on host core count.
void init_numerics();

}  // namespace slab
