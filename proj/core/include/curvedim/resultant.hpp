#ifndef CURVEDIM_RESULTANT_HPP
#define CURVEDIM_RESULTANT_HPP

#include "curvedim/poly.hpp"

namespace curvedim {

/// Resultant of f and g with respect to the variable at index `var`,
/// computed as the Sylvester determinant. The result has the same variable
/// list with `var`-degree zero. Conventions: Res(f, c) = c^{deg f} for a
/// constant-in-var g, and the resultant of two polynomials of var-degree
/// zero is 1 (empty matrix); if either input is the zero polynomial the
/// resultant is zero.
Poly resultant(const Poly& f, const Poly& g, size_t var);

/// Determinant of a square matrix of polynomials (row-major), via
/// fraction-free Bareiss elimination.
Poly poly_det(std::vector<Poly> m, size_t n, const std::vector<std::string>& vars);

/// True when f has no repeated factors, tested variable by variable through
/// Res_v(f, df/dv).
bool is_square_free(const Poly& f);

} // namespace curvedim

#endif
