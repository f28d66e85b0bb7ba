#ifndef CURVEDIM_PUISEUX_HPP
#define CURVEDIM_PUISEUX_HPP

#include "curvedim/poly.hpp"
#include "curvedim/series.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace curvedim {

/// Point of P^2 with rational coordinates, stored canonically: the last
/// nonzero coordinate is scaled to 1.
struct ProjPoint {
    std::array<Rat, 3> c; // (x, y, z)

    static ProjPoint make(const Rat& x, const Rat& y, const Rat& z);
    bool at_infinity() const { return c[2].is_zero(); }
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c == b.c; }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b);
    std::string to_string() const;
};

/// Affine chart of P^2: the coordinate set to 1.
enum class Chart { X, Y, Z };

/// One local branch of a curve germ: a truncated parametrization of an
/// irreducible local component, in the local coordinates of a chart around
/// its center.
struct PuiseuxBranch {
    std::string point_id;
    std::string branch_id;
    std::optional<ProjPoint> center;
    Chart chart = Chart::Z;
    /// Centered local coordinates of the parametrization. For implicit input
    /// these are the two chart coordinates; parametrized input may carry any
    /// number of components. For branches at infinity the last component is
    /// the local equation of the hyperplane at infinity.
    std::vector<TruncSeries> components;
    int mult = 0;
    bool at_infinity = false;
    std::optional<int> inf_mult;
    bool symbolic = false; // coefficients are placeholders; only orders are meaningful
    int component = 0;     // irreducible component of the normalization

    /// Orders of the components; nullopt for a component that vanishes to
    /// its truncation order.
    std::vector<std::optional<int>> component_orders() const;
    /// min of the finite component orders (the branch multiplicity).
    int computed_mult() const;
};

/// Local equation data of a projective curve at a point.
struct Localization {
    Poly f;      // centered local equation in two chart coordinates
    Chart chart;
    /// Index of the local coordinate cutting out the hyperplane z = 0
    /// (1 in charts X and Y); meaningless in chart Z.
    size_t hinf_index = 1;
};

Localization localize_at(const Poly& F, const ProjPoint& p);

struct SpecialPoints {
    std::vector<ProjPoint> singular;
    std::vector<ProjPoint> infinity; // rational points of F = z = 0
    /// Human-readable descriptions of loci that could not be resolved over Q
    /// (irrational candidate coordinates, abandoned factorizations).
    std::vector<std::string> unresolved_singular;
    std::vector<std::string> unresolved_infinity;
};

/// All rational candidate points where F and its gradient vanish, plus the
/// rational points of F = z = 0. Throws NotSquareFree when F has a repeated
/// factor.
SpecialPoints find_special_points(const Poly& F);

/// Branches of the plane germ f(u, v) = 0 at the origin, as parametrization
/// pairs truncated at order N. Throws IrrationalCoefficients when a branch
/// leaves Q.
std::vector<std::pair<TruncSeries, TruncSeries>> newton_puiseux_local(const Poly& f, int N);

/// Branches of the projective curve F = 0 at the point p, in the local
/// coordinates of the preferred chart at p.
std::vector<PuiseuxBranch> newton_puiseux(const Poly& F, const ProjPoint& p, int N);

/// Recompute and check the multiplicity of a declared branch; when a local
/// equation is supplied, check that the parametrization satisfies it through
/// the truncation order.
PuiseuxBranch validate_branch(PuiseuxBranch b, const Poly* f_local);

} // namespace curvedim

#endif
