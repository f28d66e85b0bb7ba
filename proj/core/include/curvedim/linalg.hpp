#ifndef CURVEDIM_LINALG_HPP
#define CURVEDIM_LINALG_HPP

#include "curvedim/rat.hpp"

#include <cstddef>
#include <vector>

namespace curvedim {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Gauss-Jordan over Q. Reduces m to reduced row echelon form in place and
/// returns the pivot column indices in increasing order.
std::vector<size_t> row_reduce(RatMatrix& m);

size_t matrix_rank(RatMatrix m);

} // namespace curvedim

#endif
