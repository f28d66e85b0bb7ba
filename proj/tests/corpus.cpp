#include "corpus.hpp"

#include "curvedim/invariants.hpp"
#include "curvedim/puiseux.hpp"
#include "curvedim/series.hpp"

#include <string>

namespace corpus {

using namespace curvedim;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};

CurveModel implicit(const std::string& text, CurveModel::Ambient ambient) {
    return analyze_implicit(Poly::parse(text, XYZ), ambient);
}

PuiseuxBranch monomial_branch(const std::string& point_id, int index, int a, int b,
                              bool at_infinity) {
    PuiseuxBranch br;
    br.point_id = point_id;
    br.branch_id = point_id + "#" + std::to_string(index);
    int order = std::max({a, b, 8});
    br.components = {TruncSeries::monomial(order, a, Rat(1), "t", true),
                     b == 0 ? TruncSeries::zero(order, "t", true)
                            : TruncSeries::monomial(order, b, Rat(1), "t", true)};
    br.at_infinity = at_infinity;
    br.mult = br.computed_mult();
    if (at_infinity) br.inf_mult = *br.components.back().exact_order();
    return br;
}

} // namespace

CurveModel cuspidal_cubic(CurveModel::Ambient ambient) {
    return implicit("y^2*z - x^3", ambient);
}

CurveModel nodal_cubic(CurveModel::Ambient ambient) {
    return implicit("y^2*z - x^2*z - x^3", ambient);
}

CurveModel unicuspidal(int m, CurveModel::Ambient ambient) {
    std::string f = "x^" + std::to_string(m + 1) + " - y^" + std::to_string(m) + "*z";
    return implicit(f, ambient);
}

CurveModel ramphoid(int n, CurveModel::Ambient ambient) {
    std::string f = n == 1 ? "x^2*z - y^3"
                           : "x^2*z^" + std::to_string(2 * n - 1) + " - y^" +
                                 std::to_string(2 * n + 1);
    return implicit(f, ambient);
}

CurveModel tacnode_quintic(CurveModel::Ambient ambient) {
    return implicit("y^2*z^3 - x^4*z - x^5", ambient);
}

CurveModel e6_quartic(CurveModel::Ambient ambient) {
    return implicit("y^3*z - x^4", ambient);
}

CurveModel triple_point_quartic(CurveModel::Ambient ambient) {
    return implicit("(y - x)*(y - 2*x)*(y + x)*z + x^4", ambient);
}

std::vector<CurveModel> smooth_affine_family() {
    std::vector<CurveModel> out;
    for (const char* f : {
             "y",                       // degree 1: the x-axis
             "y - x",                   // degree 1
             "y*z - x^2",               // degree 2: parabola
             "x*y - z^2",               // degree 2: hyperbola
             "y*z^2 - x^3",             // degree 3
             "y*z^2 - x^3 + x*z^2",     // degree 3
             "y*z^3 - x^4",             // degree 4
             "y*z^3 - x^4 - x*z^3",     // degree 4
             "y*z^4 - x^5",             // degree 5
             "y*z^4 - x^5 - x^2*z^3",   // degree 5
         })
        out.push_back(implicit(f, CurveModel::Ambient::Affine));
    return out;
}

CurveModel cps_curve() {
    CurveModel model;
    model.mode = CurveModel::Mode::Parametrized;
    model.ambient = CurveModel::Ambient::Affine;
    model.degree = 36;
    model.plane = true;
    for (int i = 0; i < 375; ++i) {
        SingularPointRecord rec;
        rec.point_id = "c" + std::to_string(i);
        rec.branches.push_back(monomial_branch(rec.point_id, 0, 2, 3, false));
        model.points.push_back(std::move(rec));
    }
    for (int i = 0; i < 36; ++i) {
        SingularPointRecord rec;
        rec.point_id = "h" + std::to_string(i);
        rec.at_infinity = true;
        rec.branches.push_back(monomial_branch(rec.point_id, 0, 1, 1, true));
        model.points.push_back(std::move(rec));
    }
    complete_records(model);
    return model;
}

CurveModel glued_monomial(int n, int k) {
    CurveModel model;
    model.mode = CurveModel::Mode::Parametrized;
    model.ambient = CurveModel::Ambient::Projective;
    model.degree = std::max(2 * n + 1, 2 * k + 1);
    model.plane = false;
    model.rational_declared = true;
    {
        SingularPointRecord rec;
        rec.point_id = "a";
        rec.branches.push_back(monomial_branch("a", 0, 2 * n + 1, 2, false));
        model.points.push_back(std::move(rec));
    }
    {
        SingularPointRecord rec;
        rec.point_id = "b";
        rec.branches.push_back(k == 0 ? monomial_branch("b", 0, 1, 0, false)
                                      : monomial_branch("b", 0, 2 * k + 1, 2 * k, false));
        model.points.push_back(std::move(rec));
    }
    complete_records(model);
    return model;
}

std::vector<Entry> rational_corpus() {
    std::vector<Entry> out;
    auto add = [&](std::string name, CurveModel m) {
        out.push_back(Entry{std::move(name), std::move(m)});
    };
    add("cuspidal-cubic-proj", cuspidal_cubic(CurveModel::Ambient::Projective));
    add("cuspidal-cubic-aff", cuspidal_cubic(CurveModel::Ambient::Affine));
    add("nodal-cubic-proj", nodal_cubic(CurveModel::Ambient::Projective));
    add("nodal-cubic-aff", nodal_cubic(CurveModel::Ambient::Affine));
    for (int m = 2; m <= 6; ++m)
        add("unicuspidal-m" + std::to_string(m), unicuspidal(m, CurveModel::Ambient::Projective));
    for (int n = 1; n <= 6; ++n)
        add("ramphoid-n" + std::to_string(n), ramphoid(n, CurveModel::Ambient::Affine));
    add("tacnode-quintic", tacnode_quintic(CurveModel::Ambient::Affine));
    add("e6-quartic", e6_quartic(CurveModel::Ambient::Affine));
    add("triple-point-quartic", triple_point_quartic(CurveModel::Ambient::Affine));
    int idx = 0;
    for (auto& m : smooth_affine_family())
        add("smooth-" + std::to_string(idx++), std::move(m));
    add("glued-n3-k2", glued_monomial(3, 2));
    add("glued-n2-k2", glued_monomial(2, 2));
    return out;
}

OpenSetSpec uniform_spec(const CurveModel& model, PointClass cls) {
    OpenSetSpec spec;
    spec.complement = OpenSetSpec::Complement::LocallyPolar;
    bool affine = model.ambient == CurveModel::Ambient::Affine;
    for (const auto& rec : model.points) {
        if (affine && rec.at_infinity) continue;
        spec.point_classes[rec.point_id] = cls;
    }
    return spec;
}

OpenSetSpec nonpolar_spec() {
    OpenSetSpec spec;
    spec.complement = OpenSetSpec::Complement::NonPolar;
    return spec;
}

} // namespace corpus
