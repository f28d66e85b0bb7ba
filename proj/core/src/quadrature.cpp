#include "curvedim/quadrature.hpp"

#include "curvedim/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace curvedim {

namespace {

// Contribution of one annulus [rin, rout] for the integrand |z|^{2j} |z|^{2m},
// midpoint rule on a tensor grid in (log r, theta). The two weight factors
// are evaluated separately so the weighted and shifted norms take different
// floating-point paths.
double annulus_contribution(int j, int m, double rin, double rout, const QuadratureConfig& cfg) {
    double du = (std::log(rout) - std::log(rin)) / cfg.nodes_radial;
    double dtheta = 2.0 * std::numbers::pi / cfg.nodes_angular;
    double sum = 0.0;
    for (int i = 0; i < cfg.nodes_radial; ++i) {
        double u = std::log(rin) + (i + 0.5) * du;
        double r = std::exp(u);
        double f = std::pow(r, 2.0 * j) * std::pow(r, 2.0 * m);
        double cell = f * r * r * du; // e^{2u} du from dA = r dr dtheta, r = e^u
        double ring = 0.0;
        for (int l = 0; l < cfg.nodes_angular; ++l) ring += cell * dtheta;
        sum += ring;
    }
    return sum;
}

} // namespace

NormResult weighted_monomial_norm(int j, WeightSpec w, double radius, const QuadratureConfig& cfg) {
    if (radius <= 0) throw Error("weighted_monomial_norm: radius must be positive");
    if (cfg.annuli < 2 || cfg.nodes_radial < 1 || cfg.nodes_angular < 1)
        throw Error("weighted_monomial_norm: degenerate quadrature configuration");
    std::vector<double> contrib(static_cast<size_t>(cfg.annuli));
    double rout = radius;
    for (int k = 0; k < cfg.annuli; ++k) {
        double rin = rout / 2.0;
        contrib[static_cast<size_t>(k)] = annulus_contribution(j, w.m, rin, rout, cfg);
        rout = rin;
    }
    // Divergence rule: the last five annulus contributions non-decreasing
    // inward means the series of contributions does not decay.
    size_t window = std::min<size_t>(5, contrib.size());
    bool nondecreasing = true;
    for (size_t k = contrib.size() - window; k + 1 < contrib.size(); ++k)
        if (contrib[k + 1] < contrib[k]) nondecreasing = false;
    if (nondecreasing) return Divergent{};
    double ratio = contrib[contrib.size() - 1] / contrib[contrib.size() - 2];
    if (!(ratio < 0.75)) return Divergent{};
    double sum = 0.0;
    for (size_t k = 0; k < contrib.size(); ++k) sum += contrib[k];
    // Geometric tail below the innermost annulus.
    sum += contrib.back() * ratio / (1.0 - ratio);
    return sum;
}

double isometry_residual(int j, WeightSpec w, double radius, const QuadratureConfig& cfg) {
    if (j + w.m < 0) throw Error("isometry_residual: needs j + m >= 0");
    NormResult a = weighted_monomial_norm(j, w, radius, cfg);
    NormResult b = weighted_monomial_norm(j + w.m, WeightSpec{0}, radius, cfg);
    if (!std::holds_alternative<double>(a) || !std::holds_alternative<double>(b))
        throw Error("isometry_residual: quadrature flagged a convergent integral as divergent");
    double av = std::get<double>(a), bv = std::get<double>(b);
    return std::abs(av - bv) / bv;
}

ExponentFit pullback_form_exponent(const PuiseuxBranch& b, FitSide side, int k0, int k1) {
    if (b.symbolic)
        throw SymbolicDataInsufficient("exponent fit needs numeric branch coefficients");
    if (k1 <= k0) throw Error("pullback_form_exponent: empty grid");
    if (side == FitSide::AtInfinity && b.components.size() < 2)
        throw Error("pullback_form_exponent: infinity fit needs at least two components");

    std::vector<double> xs, ys;
    for (int k = k0; k <= k1; ++k) {
        double t = std::ldexp(1.0, -k);
        double density = 0.0;
        if (side == FitSide::AtCenter) {
            for (const auto& comp : b.components) {
                double d = comp.derivative_eval_double(t);
                density += d * d;
            }
        } else {
            const auto& fn = b.components.back();
            double fnv = fn.eval_double(t);
            double fnd = fn.derivative_eval_double(t);
            if (fnv == 0.0) throw GridUnderflow("pullback density: chart coordinate vanishes on the grid");
            density += (fnd * fnd) / (fnv * fnv * fnv * fnv);
            for (size_t i = 0; i + 1 < b.components.size(); ++i) {
                double fj = b.components[i].eval_double(t);
                double fjd = b.components[i].derivative_eval_double(t);
                double q = (fjd * fnv - fj * fnd) / (fnv * fnv);
                density += q * q;
            }
        }
        if (!std::isfinite(density) || density <= 0.0 ||
            density < std::numeric_limits<double>::min())
            throw GridUnderflow("pullback density underflowed on the evaluation grid");
        xs.push_back(std::log(t));
        ys.push_back(std::log(density));
    }

    // Least squares line.
    size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    ExponentFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (size_t i = 0; i < n; ++i) {
        double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

bool VerifySummary::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

PuiseuxBranch make_branch(std::vector<std::pair<int, int>> monomials, int order) {
    // monomials: per component, (exponent, coefficient 1) as (exp, coef).
    PuiseuxBranch b;
    for (auto [e, c] : monomials)
        b.components.push_back(TruncSeries::monomial(order, e, Rat(c), "t", true));
    b.mult = b.computed_mult();
    return b;
}

} // namespace

VerifySummary run_verify(const QuadratureConfig& cfg) {
    VerifySummary out;
    const double radius = 1.0;

    // Membership and closed-form agreement: finiteness iff j + m >= 0 and
    // value pi R^{2(j+m+1)} / (j+m+1).
    for (int j = -4; j <= 4; ++j) {
        for (int m = -4; m <= 4; ++m) {
            NormResult r = weighted_monomial_norm(j, WeightSpec{m}, radius, cfg);
            bool finite = std::holds_alternative<double>(r);
            bool should = j + m >= 0;
            VerifyCheck chk;
            std::ostringstream name;
            name << "membership j=" << j << " m=" << m;
            chk.name = name.str();
            chk.passed = finite == should;
            if (finite && should) {
                double expected = std::numbers::pi / (j + m + 1);
                double rel = std::abs(std::get<double>(r) - expected) / expected;
                chk.value = std::get<double>(r);
                chk.expected = expected;
                chk.error = rel;
                chk.passed = chk.passed && rel < cfg.rel_tol;
            }
            out.checks.push_back(chk);
        }
    }

    // Isometry residuals for 20 (j, m) pairs with j + m >= 0.
    {
        int count = 0;
        for (int j = 0; j <= 4 && count < 20; ++j) {
            for (int m = -j; m <= 4 && count < 20; ++m) {
                VerifyCheck chk;
                std::ostringstream name;
                name << "isometry j=" << j << " m=" << m;
                chk.name = name.str();
                chk.value = isometry_residual(j, WeightSpec{m}, radius, cfg);
                chk.expected = 0.0;
                chk.error = chk.value;
                chk.passed = chk.value < 1e-6;
                out.checks.push_back(chk);
                ++count;
            }
        }
    }

    // Pullback density exponents at the center: slope 2(m-1) for the
    // monomial cusps (t^m, t^{m+1}); the plane cusp also pins the leading
    // constant 4.
    for (int m = 1; m <= 5; ++m) {
        PuiseuxBranch b = make_branch({{m, 1}, {m + 1, 1}}, 12);
        ExponentFit fit = pullback_form_exponent(b, FitSide::AtCenter);
        VerifyCheck chk;
        chk.name = "center exponent mult=" + std::to_string(m);
        chk.value = fit.slope;
        chk.expected = 2.0 * (m - 1);
        chk.error = std::abs(fit.slope - chk.expected);
        chk.passed = chk.error < 0.05 && fit.residual < 1e-3;
        out.checks.push_back(chk);
        if (m == 2) {
            VerifyCheck lead;
            lead.name = "cusp leading constant";
            lead.value = std::exp(fit.intercept);
            lead.expected = 4.0;
            lead.error = std::abs(lead.value - 4.0) / 4.0;
            lead.passed = lead.error < 0.01;
            out.checks.push_back(lead);
        }
    }

    // Infinity-chart exponents: slope -2(m_N + 1) for branches whose last
    // component meets the hyperplane with order m_N.
    for (int mn = 1; mn <= 3; ++mn) {
        PuiseuxBranch b = make_branch({{1, 1}, {mn, 1}}, 12);
        b.at_infinity = true;
        b.inf_mult = mn;
        ExponentFit fit = pullback_form_exponent(b, FitSide::AtInfinity);
        VerifyCheck chk;
        chk.name = "infinity exponent order=" + std::to_string(mn);
        chk.value = fit.slope;
        chk.expected = -2.0 * (mn + 1);
        chk.error = std::abs(fit.slope - chk.expected);
        chk.passed = chk.error < 0.05 && fit.residual < 1e-3;
        out.checks.push_back(chk);
    }

    // Convergence: doubling both node counts moves finite estimates by less
    // than rel_tol / 2.
    {
        QuadratureConfig dbl = cfg;
        dbl.nodes_radial *= 2;
        dbl.nodes_angular *= 2;
        for (auto [j, m] : {std::pair<int, int>{0, 0}, {2, -1}, {1, 2}}) {
            NormResult a = weighted_monomial_norm(j, WeightSpec{m}, radius, cfg);
            NormResult b = weighted_monomial_norm(j, WeightSpec{m}, radius, dbl);
            VerifyCheck chk;
            std::ostringstream name;
            name << "convergence j=" << j << " m=" << m;
            chk.name = name.str();
            double av = std::get<double>(a), bv = std::get<double>(b);
            chk.value = std::abs(av - bv) / bv;
            chk.expected = 0.0;
            chk.error = chk.value;
            chk.passed = chk.value < cfg.rel_tol / 2;
            out.checks.push_back(chk);
        }
    }

    return out;
}

} // namespace curvedim
