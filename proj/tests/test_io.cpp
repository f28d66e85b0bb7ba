#include "curvedim/io.hpp"

#include "corpus.hpp"
#include "curvedim/errors.hpp"
#include "curvedim/schema.hpp"

#include <doctest.h>

#include <fstream>

#ifndef CURVEDIM_SOURCE_DIR
#define CURVEDIM_SOURCE_DIR "."
#endif

using namespace curvedim;
using nlohmann::json;

namespace {

json read_file(const std::string& rel) {
    std::ifstream in(std::string(CURVEDIM_SOURCE_DIR) + "/" + rel);
    REQUIRE(in.good());
    json doc;
    in >> doc;
    return doc;
}

json curve_doc(const std::string& poly, const std::string& ambient) {
    return json{{"schema", "1"},
                {"ambient", ambient},
                {"mode", "implicit"},
                {"implicit", {{"variables", {"x", "y", "z"}}, {"polynomial", poly}}}};
}

} // namespace

TEST_CASE("load an implicit curve") {
    CurveModel m = load_curve(curve_doc("y^2*z - x^3", "affine"));
    CHECK(m.degree == 3);
    CHECK(m.points.size() == 2); // cusp + infinity point
    CHECK(m.genus() == 0);
}

TEST_CASE("a smooth projective curve analyzes to an empty point list") {
    CurveModel m = load_curve(curve_doc("x^2 + y^2 - z^2", "projective"));
    CHECK(m.points.empty());
    CHECK(m.genus() == 0);
    // With no singular points every locally polar complement gives the
    // constants.
    OpenSetSpec spec;
    spec.complement = OpenSetSpec::Complement::LocallyPolar;
    DichotomyReport rep = decide(m, spec);
    REQUIRE(rep.exact_dim);
    CHECK(*rep.exact_dim == 1);
    // The same curve in affine ambient needs the irrational infinity points.
    CHECK_THROWS_AS(load_curve(curve_doc("x^2 + y^2 - z^2", "affine")), UnresolvedLocus);
}

TEST_CASE("schema version is enforced") {
    json doc = curve_doc("y^2*z - x^3", "affine");
    doc["schema"] = "2";
    CHECK_THROWS_AS(load_curve(doc), ParseError);
    doc.erase("schema");
    CHECK_THROWS_AS(load_curve(doc), ParseError);
}

TEST_CASE("parametrized curves round-trip the invariants") {
    json doc = read_file("tests/data/glued_n4_k2.json");
    CurveModel m = load_curve(doc);
    REQUIRE(m.points.size() == 2);
    const SingularPointRecord* a = m.find_point("a");
    REQUIRE(a);
    CHECK(a->m == 2);
    CHECK(*a->delta == 4);
    const SingularPointRecord* b = m.find_point("b");
    REQUIRE(b);
    CHECK(b->m == 4);
    CHECK(m.rational_normalization());
}

TEST_CASE("symbolic coefficients restrict to order data") {
    json doc = {{"schema", "1"},
                {"ambient", "projective"},
                {"mode", "parametrized"},
                {"degree", 3},
                {"parametrized",
                 {{"plane", false},
                  {"rational", true},
                  {"points",
                   {{{"id", "p"},
                     {"branches",
                      {{{"components", {{{"2", "1"}}, {{"3", "symbolic"}}}}}}}}}}}}};
    CurveModel m = load_curve(doc);
    REQUIRE(m.points.size() == 1);
    CHECK(m.points[0].branches[0].symbolic);
    CHECK(m.points[0].m == 2);
    CHECK(*m.points[0].delta == 1); // monomial orders determine delta
}

TEST_CASE("bad inputs raise parse errors") {
    CHECK_THROWS_AS(load_curve(json{{"schema", "1"}, {"mode", "nonsense"}}), ParseError);
    json dup = {{"schema", "1"},
                {"ambient", "projective"},
                {"mode", "parametrized"},
                {"degree", 2},
                {"parametrized",
                 {{"points",
                   {{{"id", "p"}, {"branches", {{{"components", {{{"1", "1"}}}}}}}},
                    {{"id", "p"}, {"branches", {{{"components", {{{"1", "1"}}}}}}}}}}}}};
    CHECK_THROWS_AS(load_curve(dup), ParseError);
    json badexp = {{"schema", "1"},
                   {"ambient", "projective"},
                   {"mode", "parametrized"},
                   {"degree", 2},
                   {"parametrized",
                    {{"points",
                      {{{"id", "p"},
                        {"branches", {{{"components", {{{"-1", "1"}}}}}}}}}}}}};
    CHECK_THROWS_AS(load_curve(badexp), ParseError);
}

TEST_CASE("openset parsing and validation") {
    OpenSetSpec spec = load_openset(read_file("tests/data/openset_glued.json"));
    CHECK(spec.complement == OpenSetSpec::Complement::LocallyPolar);
    CHECK(*spec.class_of("a") == PointClass::Interior);
    CHECK(*spec.class_of("b") == PointClass::Boundary);
    CHECK(!spec.class_of("c"));

    json np = {{"schema", "1"}, {"complement", "non_polar"}};
    CHECK_NOTHROW(load_openset(np));
    np["classes"]["p"] = "interior";
    CHECK_THROWS_AS(load_openset(np), ParseError); // non-polar takes no classes
}

TEST_CASE("config validation") {
    json good = {{"schema", "1"}, {"rel_tol", 0.01}};
    CHECK(load_config(good).rel_tol == 0.01);
    json bad = {{"schema", "1"}, {"rel_tol", 0.5}};
    CHECK_THROWS_AS(load_config(bad), ParseError);
}

TEST_CASE("reports validate against the shipped schema") {
    json schema = read_file("docs/schemas/report.schema.json");
    std::string err;

    CurveModel cusp = corpus::cuspidal_cubic(CurveModel::Ambient::Affine);
    ordered_json rep = report_analyze(cusp);
    CHECK(validate_json(json::parse(rep.dump()), schema, &err));
    INFO(err);

    OpenSetSpec spec = corpus::uniform_spec(cusp, PointClass::Boundary);
    DichotomyReport dr = decide(cusp, spec);
    ordered_json drep = report_decide(cusp, spec, dr);
    CHECK(validate_json(json::parse(drep.dump()), schema, &err));

    CurveModel glued = corpus::glued_monomial(4, 2);
    OpenSetSpec gspec;
    gspec.complement = OpenSetSpec::Complement::LocallyPolar;
    gspec.point_classes["a"] = PointClass::Interior;
    gspec.point_classes["b"] = PointClass::Boundary;
    ordered_json lrep = report_l2delta(glued, gspec, l2_delta(glued, gspec));
    CHECK(validate_json(json::parse(lrep.dump()), schema, &err));

    QuadratureConfig cfg;
    cfg.annuli = 12;
    cfg.nodes_radial = 32;
    cfg.nodes_angular = 4;
    cfg.rel_tol = 0.05;
    ordered_json vrep = report_verify(cfg, run_verify(cfg));
    CHECK(validate_json(json::parse(vrep.dump()), schema, &err));
}

TEST_CASE("schema validator flags violations") {
    json schema = read_file("docs/schemas/report.schema.json");
    std::string err;
    json bad = {{"schema", "1"}, {"report", "nonsense"}};
    CHECK(!validate_json(bad, schema, &err));
    json missing = {{"schema", "1"}};
    CHECK(!validate_json(missing, schema, &err));
}

TEST_CASE("reports are deterministic") {
    CurveModel m1 = corpus::nodal_cubic(CurveModel::Ambient::Affine);
    CurveModel m2 = corpus::nodal_cubic(CurveModel::Ambient::Affine);
    CHECK(report_analyze(m1).dump(2) == report_analyze(m2).dump(2));
}

TEST_CASE("input fixtures validate against their schemas") {
    std::string err;
    json cschema = read_file("docs/schemas/curve.schema.json");
    for (const char* f : {"tests/data/cuspidal_cubic_affine.json",
                          "tests/data/nodal_cubic_projective.json",
                          "tests/data/unicuspidal_m3.json", "tests/data/glued_n4_k2.json",
                          "tests/data/glued_n2_k5.json", "tests/data/smooth_conic_affine.json"}) {
        INFO(f);
        CHECK(validate_json(read_file(f), cschema, &err));
    }
    json oschema = read_file("docs/schemas/openset.schema.json");
    for (const char* f : {"tests/data/openset_p0_boundary.json", "tests/data/openset_glued.json",
                          "tests/data/openset_nonpolar.json"}) {
        INFO(f);
        CHECK(validate_json(read_file(f), oschema, &err));
    }
    json qschema = read_file("docs/schemas/config.schema.json");
    CHECK(validate_json(read_file("tests/data/verify_default.json"), qschema, &err));
}
