#pragma once

#include <istream>
#include <ostream>

#include "ratiocert/exact_linalg/exact_matrix.hpp"

namespace ratiocert {

// CSV layout: a "rows,cols" header line, then one line per row with
// comma-separated entries written as integers or "p/q".
void write_matrix_csv(std::ostream& os, const ExactMatrix& m);
/// Throws Error(kParse) on malformed input.
ExactMatrix read_matrix_csv(std::istream& is);

}  // namespace ratiocert
