#pragma once

#include <iosfwd>
#include <string>

#include "slab/measures.hpp"
#include "slab/symbols.hpp"
#include "slab/types.hpp"

namespace slab {

// Matrix text format: "rows cols" header line, then rows*cols lines "re im"
// in row-major order. 17 significant digits (round-trip exact).
void write_matrix(std::ostream& os, const ComplexMatrix& m);
ComplexMatrix read_matrix(std::istream& is);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);
ComplexMatrix read_matrix_file(const std::string& path);

// Symbol format: lines "k re im"; omitted frequencies are zero.
void write_symbol(std::ostream& os, const TrigPolynomial& f);
TrigPolynomial read_symbol(std::istream& is);
AnalyticSymbol read_analytic_symbol(std::istream& is);  // rejects negative k
TrigPolynomial read_symbol_file(const std::string& path);
AnalyticSymbol read_analytic_symbol_file(const std::string& path);
void write_symbol_file(const std::string& path, const TrigPolynomial& f);

// Measure format: lines "theta re im".
void write_measure(std::ostream& os, const DiscreteMeasure& mu);
DiscreteMeasure read_measure(std::istream& is);
DiscreteMeasure read_measure_file(const std::string& path);
void write_measure_file(const std::string& path, const DiscreteMeasure& mu);

std::string format_double(double v);  // %.17g

}  // namespace slab
