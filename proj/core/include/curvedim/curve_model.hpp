#ifndef CURVEDIM_CURVE_MODEL_HPP
#define CURVEDIM_CURVE_MODEL_HPP

#include "curvedim/invariants.hpp"
#include "curvedim/poly.hpp"
#include "curvedim/puiseux.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvedim {

/// A fully analyzed curve: defining data plus the per-point invariant records
/// every downstream computation consumes.
struct CurveModel {
    enum class Mode { Implicit, Parametrized };
    enum class Ambient { Projective, Affine };

    Mode mode = Mode::Implicit;
    Ambient ambient = Ambient::Projective;
    std::optional<Poly> form; // implicit mode: homogeneous trivariate
    int degree = 0;
    bool plane = true;
    std::optional<int> genus_declared;
    bool rational_declared = false; // normalization components declared rational
    int n_components = 1;

    /// All special-point records: singular points, and (in affine mode) every
    /// point of the curve on the hyperplane at infinity.
    std::vector<SingularPointRecord> points;

    const SingularPointRecord* find_point(const std::string& id) const;
    const PuiseuxBranch* find_branch(const std::string& branch_id) const;

    std::vector<const SingularPointRecord*> singular_records() const;
    std::vector<const SingularPointRecord*> affine_singular_records() const;
    std::vector<const SingularPointRecord*> infinity_records() const;

    /// Genus of the normalization: declared, or by the genus-degree formula
    /// for an irreducible plane curve; 0 for declared-rational models.
    int genus() const;
    /// Every component of the normalization is a rational curve.
    bool rational_normalization() const;
};

struct AnalyzeOptions {
    int initial_truncation = 0; // 0: pick from the degree
    int max_truncation = 512;
};

/// Analyze an implicit curve: special points, branches, and invariants.
/// The truncation order doubles internally while computations report
/// TruncationInsufficient, up to the cap.
CurveModel analyze_implicit(const Poly& F, CurveModel::Ambient ambient,
                            const AnalyzeOptions& opts = {});

/// Finish a parametrized model whose `points` carry validated branches:
/// recompute m, r, delta and infinity intersections for every record.
void complete_records(CurveModel& model);

} // namespace curvedim

#endif
