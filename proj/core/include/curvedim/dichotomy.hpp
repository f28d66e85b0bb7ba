#ifndef CURVEDIM_DICHOTOMY_HPP
#define CURVEDIM_DICHOTOMY_HPP

#include "curvedim/curve_model.hpp"
#include "curvedim/divisor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvedim {

struct DichotomyReport {
    enum class Verdict { Infinite, Finite };
    Verdict verdict = Verdict::Finite;
    std::optional<long> exact_dim;
    std::optional<long> lower_bound;
    std::optional<long> upper_bound;
    Divisor effective_divisor_used;
    long interior_condition_count = 0;
    std::optional<int> genus;
    std::string notes;
};

struct DecideOptions {
    bool require_exact = false; // throw UnsupportedGenus when only bounds are available
    bool bounds_only = false;   // skip the exact rank computation
};

/// The dichotomy: a non-polar complement gives an infinite-dimensional
/// space; a locally polar complement gives the section space of the
/// restricted multiplicity divisor, exactly (rational normalization) or by
/// Riemann-Roch bounds.
DichotomyReport decide(const CurveModel& model, const OpenSetSpec& spec,
                       const DecideOptions& opts = {});

/// Dimension of { f meromorphic on the (rational) normalization with
/// div(f) + D >= 0 } cut down by local-ring membership at the given interior
/// singular points, as an exact rank over Q.
long h0_rational(const Divisor& d, const std::vector<const SingularPointRecord*>& interior,
                 const CurveModel& model);

struct H0Bounds {
    long lower = 0;
    long upper = 0;
    std::optional<long> exact; // set when the bounds pin the dimension
};

/// Riemann-Roch bounds for h^0 of a degree-`deg` line bundle on a genus-`g`
/// curve: lower = max(0, 1 - g + deg), upper = deg + 1 (0 for negative
/// degree); exact for deg > 2g - 2 and for deg < 0.
H0Bounds h0_bounds(long deg, int genus);

/// Corollary criterion: the affine curve has only trivial-or-infinite
/// Bergman spaces when sum_Y (m - r) < sum_inf ((X.H)_p + r).
bool triviality_test(const CurveModel& model);

struct L2DeltaResult {
    long dim_normalized = 0; // dim A^2 of the normalized preimage
    long dim_pullback = 0;   // dim of the pulled-back Bergman space
    long value = 0;          // their difference
};

/// L^2 delta invariant of the open set: the codimension of the pulled-back
/// Bergman space inside the Bergman space of the normalized preimage.
L2DeltaResult l2_delta(const CurveModel& model, const OpenSetSpec& spec);

/// Count of 0 <= l <= lmax not representable as a nonnegative combination of
/// the generators (which must be coprime overall).
long semigroup_gap_count(long lmax, const std::vector<long>& gens);

} // namespace curvedim

#endif
