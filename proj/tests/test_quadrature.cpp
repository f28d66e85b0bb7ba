#include "curvedim/quadrature.hpp"

#include "curvedim/errors.hpp"
#include "curvedim/series.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace curvedim;

namespace {

PuiseuxBranch branch_of(std::vector<TruncSeries> comps) {
    PuiseuxBranch b;
    b.components = std::move(comps);
    b.mult = b.computed_mult();
    return b;
}

TruncSeries mono(int n, int k, long c = 1) {
    return TruncSeries::monomial(n, k, Rat(c), "t", true);
}

} // namespace

TEST_CASE("weighted norms match the closed form") {
    QuadratureConfig cfg;
    // j = 0, m = 0: pi. j = 2, m = -1: pi/2.
    auto r1 = weighted_monomial_norm(0, WeightSpec{0}, 1.0, cfg);
    REQUIRE(std::holds_alternative<double>(r1));
    CHECK(std::abs(std::get<double>(r1) - std::numbers::pi) / std::numbers::pi < cfg.rel_tol);

    auto r2 = weighted_monomial_norm(2, WeightSpec{-1}, 1.0, cfg);
    REQUIRE(std::holds_alternative<double>(r2));
    CHECK(std::abs(std::get<double>(r2) - std::numbers::pi / 2) / (std::numbers::pi / 2) <
          cfg.rel_tol);

    // Scaling in the radius: pi R^{2(j+m+1)} / (j+m+1).
    auto r3 = weighted_monomial_norm(1, WeightSpec{0}, 0.5, cfg);
    double expected = std::numbers::pi * std::pow(0.5, 4.0) / 2.0;
    CHECK(std::abs(std::get<double>(r3) - expected) / expected < cfg.rel_tol);
}

TEST_CASE("membership matches the j + m >= 0 rule on the full grid") {
    QuadratureConfig cfg;
    for (int j = -4; j <= 4; ++j) {
        for (int m = -4; m <= 4; ++m) {
            auto r = weighted_monomial_norm(j, WeightSpec{m}, 1.0, cfg);
            INFO("j=", j, " m=", m);
            CHECK(std::holds_alternative<double>(r) == (j + m >= 0));
        }
    }
}

TEST_CASE("isometry residuals are at rounding level") {
    QuadratureConfig cfg;
    CHECK(isometry_residual(0, WeightSpec{0}, 1.0, cfg) == 0.0);
    CHECK(isometry_residual(3, WeightSpec{-2}, 1.0, cfg) < 1e-6);
    CHECK(isometry_residual(1, WeightSpec{2}, 1.0, cfg) < 1e-6);
    CHECK_THROWS_AS(isometry_residual(0, WeightSpec{-1}, 1.0, cfg), Error);
}

TEST_CASE("center exponent fits") {
    // Cusp (t^2, t^3): density 4|t|^2 + 9|t|^4, slope 2, leading constant 4.
    ExponentFit cusp = pullback_form_exponent(branch_of({mono(12, 2), mono(12, 3)}),
                                              FitSide::AtCenter);
    CHECK(std::abs(cusp.slope - 2.0) < 0.05);
    CHECK(std::abs(std::exp(cusp.intercept) - 4.0) / 4.0 < 0.01);
    CHECK(cusp.residual < 1e-3);

    // Smooth branch (t, 0): slope 0.
    ExponentFit smooth = pullback_form_exponent(
        branch_of({mono(12, 1), TruncSeries::zero(12, "t", true)}), FitSide::AtCenter);
    CHECK(std::abs(smooth.slope) < 0.05);

    // Multiplicity 5.
    ExponentFit m5 = pullback_form_exponent(branch_of({mono(12, 5), mono(12, 6)}),
                                            FitSide::AtCenter);
    CHECK(std::abs(m5.slope - 8.0) < 0.05);
}

TEST_CASE("infinity exponent fits") {
    // Tangent to the hyperplane with contact 2: slope -6.
    PuiseuxBranch b = branch_of({mono(12, 1), mono(12, 2)});
    b.at_infinity = true;
    b.inf_mult = 2;
    ExponentFit fit = pullback_form_exponent(b, FitSide::AtInfinity);
    CHECK(std::abs(fit.slope + 6.0) < 0.05);
    CHECK(fit.residual < 1e-3);

    // Transversal: slope -4.
    PuiseuxBranch tr = branch_of({mono(12, 1), mono(12, 1)});
    tr.at_infinity = true;
    tr.inf_mult = 1;
    ExponentFit tfit = pullback_form_exponent(tr, FitSide::AtInfinity);
    CHECK(std::abs(tfit.slope + 4.0) < 0.05);
}

TEST_CASE("grid underflow is reported") {
    PuiseuxBranch b = branch_of({mono(12, 5), mono(12, 6)});
    CHECK_THROWS_AS(pullback_form_exponent(b, FitSide::AtCenter, 120, 140), GridUnderflow);
}

TEST_CASE("symbolic branches cannot be fitted") {
    TruncSeries s = mono(8, 2);
    s.mark_symbolic();
    PuiseuxBranch b = branch_of({s, mono(8, 3)});
    b.symbolic = true;
    CHECK_THROWS_AS(pullback_form_exponent(b, FitSide::AtCenter), SymbolicDataInsufficient);
}

TEST_CASE("verify battery passes at the default configuration") {
    QuadratureConfig cfg;
    VerifySummary s = run_verify(cfg);
    for (const auto& c : s.checks) {
        INFO(c.name, " value=", c.value, " expected=", c.expected, " err=", c.error);
        CHECK(c.passed);
    }
    CHECK(s.all_passed());
}

TEST_CASE("verify battery fails an unattainable tolerance") {
    QuadratureConfig cfg;
    cfg.nodes_radial = 4;
    cfg.nodes_angular = 2;
    cfg.rel_tol = 1e-12;
    VerifySummary s = run_verify(cfg);
    CHECK(!s.all_passed());
}

TEST_CASE("node doubling moves estimates less than half the tolerance") {
    QuadratureConfig cfg;
    QuadratureConfig dbl = cfg;
    dbl.nodes_radial *= 2;
    dbl.nodes_angular *= 2;
    for (int j = 0; j <= 3; ++j) {
        auto a = weighted_monomial_norm(j, WeightSpec{1}, 1.0, cfg);
        auto b = weighted_monomial_norm(j, WeightSpec{1}, 1.0, dbl);
        double av = std::get<double>(a), bv = std::get<double>(b);
        CHECK(std::abs(av - bv) / bv < cfg.rel_tol / 2);
    }
}
