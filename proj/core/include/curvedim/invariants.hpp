#ifndef CURVEDIM_INVARIANTS_HPP
#define CURVEDIM_INVARIANTS_HPP

#include "curvedim/linalg.hpp"
#include "curvedim/poly.hpp"
#include "curvedim/puiseux.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace curvedim {

/// Per-point record of local invariants.
struct SingularPointRecord {
    std::string point_id;
    std::optional<ProjPoint> position;
    bool at_infinity = false;
    std::vector<PuiseuxBranch> branches;
    int m = 0;                 // multiplicity m(X,p) = sum of branch multiplicities
    int r = 0;                 // number of branches
    std::optional<int> delta;  // nullopt when not computable (symbolic data)
    std::vector<int> inf_mults; // per-branch (X_i . H_inf)_p when at infinity

    bool is_singular() const { return m > 1 || r > 1; }
};

struct InfinityTag {};
using IntOrInfinity = std::variant<int, InfinityTag>;

/// Order of vanishing of g along the branch; InfinityTag when g vanishes on
/// the branch identically.
IntOrInfinity intersection_multiplicity(const PuiseuxBranch& b, const Poly& g_local);

struct SemigroupData {
    std::vector<long> generators;
    std::vector<long> gaps;
    long conductor = 0;
};

/// Value semigroup of a unibranch germ: every order ord(h o pi) realized by a
/// local polynomial h, enumerated through `bound`. Throws BoundTooSmall when
/// the conductor has not stabilized below the bound.
SemigroupData value_semigroup(const PuiseuxBranch& b, int bound);

/// Delta invariant of the germ with the given branches, computed as the
/// corank of the span of pulled-back monomial jets inside branch-wise jets,
/// with the truncation doubled until the corank stabilizes.
int delta_point(const std::vector<PuiseuxBranch>& branches);

/// (d-1)(d-2)/2 - sum of deltas, for an irreducible plane curve.
int genus_of_normalization(int degree, const std::vector<SingularPointRecord>& records);

/// Jet matrix of the pulled-back monomials through `order`: one row per
/// monomial in the ambient local coordinates, columns grouped by branch.
/// Exposed for the section-space rank computations.
RatMatrix monomial_pullback_jets(const std::vector<PuiseuxBranch>& branches, int order);

} // namespace curvedim

#endif
