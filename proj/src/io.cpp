#include "slab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace slab {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return is;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

// skips blank lines and '#' comments
bool next_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

void write_matrix(std::ostream& os, const ComplexMatrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << format_double(m(i, j).real()) << ' ' << format_double(m(i, j).imag()) << '\n';
}

ComplexMatrix read_matrix(std::istream& is) {
    std::string line;
    if (!next_line(is, line)) throw std::runtime_error("matrix input: missing header line");
    std::istringstream hs(line);
    long rows = -1, cols = -1;
    if (!(hs >> rows >> cols) || rows < 0 || cols < 0)
        throw std::runtime_error("matrix input: bad header '" + line + "'");
    ComplexMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (long i = 0; i < rows * cols; ++i) {
        if (!next_line(is, line))
            throw std::runtime_error("matrix input: expected " + std::to_string(rows * cols) +
                                     " entries, got " + std::to_string(i));
        std::istringstream ls(line);
        double re, im;
        if (!(ls >> re >> im)) throw std::runtime_error("matrix input: bad entry '" + line + "'");
        m(static_cast<std::size_t>(i / cols), static_cast<std::size_t>(i % cols)) = cpx(re, im);
    }
    return m;
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
    auto os = open_out(path);
    write_matrix(os, m);
}

ComplexMatrix read_matrix_file(const std::string& path) {
    auto is = open_in(path);
    return read_matrix(is);
}

void write_symbol(std::ostream& os, const TrigPolynomial& f) {
    for (long k = f.lo(); k <= f.hi(); ++k) {
        cpx c = f.coeff(k);
        if (c == cpx(0.0)) continue;
        os << k << ' ' << format_double(c.real()) << ' ' << format_double(c.imag()) << '\n';
    }
}

TrigPolynomial read_symbol(std::istream& is) {
    std::map<long, cpx> coeffs;
    std::string line;
    while (next_line(is, line)) {
        std::istringstream ls(line);
        long k;
        double re, im;
        if (!(ls >> k >> re >> im)) throw std::runtime_error("symbol input: bad line '" + line + "'");
        if (!coeffs.emplace(k, cpx(re, im)).second)
            throw std::runtime_error("symbol input: duplicate frequency " + std::to_string(k));
    }
    if (coeffs.empty()) return TrigPolynomial();
    long lo = coeffs.begin()->first, hi = coeffs.rbegin()->first;
    std::vector<cpx> c(static_cast<std::size_t>(hi - lo + 1), cpx(0.0));
    for (auto& [k, v] : coeffs) c[static_cast<std::size_t>(k - lo)] = v;
    return TrigPolynomial(lo, std::move(c));
}

AnalyticSymbol read_analytic_symbol(std::istream& is) {
    TrigPolynomial f = read_symbol(is);
    if (f.lo() < 0 && f.max_abs_freq() > 0) {
        for (long k = f.lo(); k < 0; ++k)
            if (f.coeff(k) != cpx(0.0))
                throw std::runtime_error("symbol input: negative frequency " + std::to_string(k) +
                                         " in analytic context");
    }
    std::vector<cpx> c(static_cast<std::size_t>(std::max<long>(f.hi(), 0)) + 1, cpx(0.0));
    for (long k = 0; k <= f.hi(); ++k) c[static_cast<std::size_t>(k)] = f.coeff(k);
    return AnalyticSymbol(std::move(c));
}

TrigPolynomial read_symbol_file(const std::string& path) {
    auto is = open_in(path);
    return read_symbol(is);
}

AnalyticSymbol read_analytic_symbol_file(const std::string& path) {
    auto is = open_in(path);
    return read_analytic_symbol(is);
}

void write_symbol_file(const std::string& path, const TrigPolynomial& f) {
    auto os = open_out(path);
    write_symbol(os, f);
}

void write_measure(std::ostream& os, const DiscreteMeasure& mu) {
    for (std::size_t j = 0; j < mu.theta.size(); ++j)
        os << format_double(mu.theta[j]) << ' ' << format_double(mu.w[j].real()) << ' '
           << format_double(mu.w[j].imag()) << '\n';
}

DiscreteMeasure read_measure(std::istream& is) {
    DiscreteMeasure mu;
    std::string line;
    while (next_line(is, line)) {
        std::istringstream ls(line);
        double th, re, im;
        if (!(ls >> th >> re >> im)) throw std::runtime_error("measure input: bad line '" + line + "'");
        mu.theta.push_back(th);
        mu.w.push_back(cpx(re, im));
    }
    validate_measure(mu);
    return mu;
}

DiscreteMeasure read_measure_file(const std::string& path) {
    auto is = open_in(path);
    return read_measure(is);
}

void write_measure_file(const std::string& path, const DiscreteMeasure& mu) {
    auto os = open_out(path);
    write_measure(os, mu);
}

}  // namespace slab
