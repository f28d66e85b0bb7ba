#ifndef CURVEDIM_ROOTS_HPP
#define CURVEDIM_ROOTS_HPP

#include "curvedim/rat.hpp"

#include <utility>
#include <vector>

namespace curvedim {

/// Univariate polynomial over Q, coefficient of x^k at index k.
using UPoly = std::vector<Rat>;

UPoly upoly_trim(UPoly p);
int upoly_degree(const UPoly& p); // -1 for zero
Rat upoly_eval(const UPoly& p, const Rat& x);
UPoly upoly_derivative(const UPoly& p);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
/// Remainder of a modulo b (b nonzero), over Q.
UPoly upoly_rem(UPoly a, const UPoly& b);
/// Monic gcd over Q.
UPoly upoly_gcd(UPoly a, UPoly b);
/// p with repeated factors removed (monic).
UPoly upoly_squarefree_part(const UPoly& p);
/// Exact quotient by (x - r); asserts divisibility.
UPoly upoly_deflate(const UPoly& p, const Rat& r);

struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots; // (root, multiplicity)
    int residual_degree = 0;                // degree left after removing rational roots
    bool complete = true; // false: divisor enumeration was abandoned, roots may be missing
};

/// All rational roots of p with multiplicities. `complete` is false only if
/// the content factorization blew past the effort budget, in which case a
/// caller must treat the result as inconclusive.
RationalRoots rational_roots(const UPoly& p);

/// Divisors of |n| (n != 0); empty result means the budget was exceeded.
std::vector<mpz_class> all_divisors(const mpz_class& n, size_t max_divisors = 1u << 16);

} // namespace curvedim

#endif
