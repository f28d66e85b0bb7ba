#ifndef CURVEDIM_QUADRATURE_HPP
#define CURVEDIM_QUADRATURE_HPP

#include "curvedim/puiseux.hpp"

#include <string>
#include <variant>
#include <vector>

namespace curvedim {

/// Weight exponent: the weight is mu_m(z) = |z|^{2m}.
struct WeightSpec {
    int m = 0;
};

struct QuadratureConfig {
    int annuli = 24;
    int nodes_radial = 512;
    int nodes_angular = 8;
    double rel_tol = 1e-4;
};

struct Divergent {};
using NormResult = std::variant<double, Divergent>;

/// Quadrature estimate of the weighted monomial norm
/// int_{0<|z|<R} |z|^{2j} mu_m(z) dA over dyadic annuli, with divergence
/// detected from the annulus contributions.
NormResult weighted_monomial_norm(int j, WeightSpec w, double radius, const QuadratureConfig& cfg);

/// Relative defect of the weighted-vs-shifted norm identity
/// ||z^j||_{mu_m} = ||z^{j+m}||. Requires j + m >= 0.
double isometry_residual(int j, WeightSpec w, double radius, const QuadratureConfig& cfg);

enum class FitSide { AtCenter, AtInfinity };

struct ExponentFit {
    double slope = 0;
    double intercept = 0;
    double residual = 0;
};

/// Log-log fit of the pulled-back area density along a branch on the grid
/// t = 2^{-k}, k = k0..k1. AtCenter evaluates sum |d pi_i / dt|^2; AtInfinity
/// evaluates the chart density |f_N'|^2/|f_N|^4 + sum |(f_j/f_N)'|^2 with f_N
/// the last component.
ExponentFit pullback_form_exponent(const PuiseuxBranch& b, FitSide side, int k0 = 12, int k1 = 24);

struct VerifyCheck {
    std::string name;
    bool passed = false;
    double value = 0;
    double expected = 0;
    double error = 0;
};

struct VerifySummary {
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

/// The built-in verification battery: weighted-norm membership against the
/// j + m >= 0 rule and the closed form, isometry residuals, pullback-density
/// exponent fits, and a node-doubling convergence check.
VerifySummary run_verify(const QuadratureConfig& cfg);

} // namespace curvedim

#endif
