#include "curvedim/io.hpp"

#include "curvedim/errors.hpp"

#include <algorithm>
#include <set>

namespace curvedim {

namespace {

using nlohmann::json;

void require_schema_1(const json& doc) {
    if (!doc.is_object()) throw ParseError("document is not a JSON object");
    if (!doc.contains("schema") || !doc["schema"].is_string() || doc["schema"] != "1")
        throw ParseError("missing or unsupported schema version (expected \"1\")");
}

Rat parse_rat_field(const json& v, const std::string& what) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_string()) {
        auto r = Rat::parse(v.get<std::string>());
        if (r) return *r;
    }
    throw ParseError(what + ": expected an integer or a \"p/q\" string");
}

CurveModel::Ambient parse_ambient(const json& doc) {
    std::string a = doc.value("ambient", "projective");
    if (a == "projective") return CurveModel::Ambient::Projective;
    if (a == "affine") return CurveModel::Ambient::Affine;
    throw ParseError("ambient must be \"projective\" or \"affine\"");
}

PuiseuxBranch parse_branch(const json& jb, const std::string& point_id, int index,
                           bool at_infinity) {
    if (!jb.is_object() || !jb.contains("components") || !jb["components"].is_array() ||
        jb["components"].empty())
        throw ParseError("branch of point " + point_id + " needs a nonempty components array");
    PuiseuxBranch b;
    b.point_id = point_id;
    b.branch_id = point_id + "#" + std::to_string(index);
    b.at_infinity = at_infinity;
    b.component = jb.value("component", 0);
    if (b.component < 0) throw ParseError("branch component id must be nonnegative");

    int maxexp = 0;
    for (const auto& comp : jb["components"]) {
        if (!comp.is_object()) throw ParseError("branch component must be an exponent->coefficient map");
        for (auto it = comp.begin(); it != comp.end(); ++it) {
            size_t pos = 0;
            int e = 0;
            try {
                e = std::stoi(it.key(), &pos);
            } catch (...) {
                throw ParseError("bad exponent key '" + it.key() + "'");
            }
            if (pos != it.key().size() || e < 0)
                throw ParseError("bad exponent key '" + it.key() + "'");
            maxexp = std::max(maxexp, e);
        }
    }
    int order = std::max(maxexp, 8);
    for (const auto& comp : jb["components"]) {
        TruncSeries s(order, "t", true);
        for (auto it = comp.begin(); it != comp.end(); ++it) {
            int e = std::stoi(it.key());
            if (it.value().is_string() && it.value().get<std::string>() == "symbolic") {
                s.set_coeff(e, Rat(1)); // placeholder; orders stay meaningful
                s.mark_symbolic();
                b.symbolic = true;
            } else {
                Rat c = parse_rat_field(it.value(), "coefficient of t^" + it.key());
                if (c.is_zero()) throw ParseError("zero coefficient listed at t^" + it.key());
                s.set_coeff(e, c);
            }
        }
        b.components.push_back(std::move(s));
    }
    if (jb.contains("mult")) b.mult = jb["mult"].get<int>();
    b = validate_branch(std::move(b), nullptr);
    return b;
}

} // namespace

CurveModel load_curve(const json& doc) {
    require_schema_1(doc);
    CurveModel::Ambient ambient = parse_ambient(doc);
    std::string mode = doc.value("mode", "");
    if (mode == "implicit") {
        if (!doc.contains("implicit") || !doc["implicit"].is_object())
            throw ParseError("implicit mode needs an \"implicit\" object");
        const json& imp = doc["implicit"];
        if (!imp.contains("variables") || !imp["variables"].is_array() ||
            imp["variables"].size() != 3)
            throw ParseError("implicit.variables must list exactly three variables");
        std::vector<std::string> vars;
        for (const auto& v : imp["variables"]) vars.push_back(v.get<std::string>());
        if (!imp.contains("polynomial") || !imp["polynomial"].is_string())
            throw ParseError("implicit.polynomial must be a polynomial string");
        Poly F = Poly::parse(imp["polynomial"].get<std::string>(), vars);
        CurveModel model = analyze_implicit(F, ambient);
        if (doc.contains("degree") && doc["degree"].get<int>() != model.degree)
            throw ParseError("declared degree disagrees with the form");
        return model;
    }
    if (mode == "parametrized") {
        if (!doc.contains("parametrized") || !doc["parametrized"].is_object())
            throw ParseError("parametrized mode needs a \"parametrized\" object");
        const json& par = doc["parametrized"];
        CurveModel model;
        model.mode = CurveModel::Mode::Parametrized;
        model.ambient = ambient;
        if (!doc.contains("degree") || !doc["degree"].is_number_integer())
            throw ParseError("parametrized mode needs the curve degree");
        model.degree = doc["degree"].get<int>();
        if (model.degree < 1) throw ParseError("degree must be positive");
        model.plane = par.value("plane", true);
        if (par.contains("genus")) model.genus_declared = par["genus"].get<int>();
        model.rational_declared = par.value("rational", false);
        model.n_components = par.value("components", 1);
        if (model.n_components < 1) throw ParseError("components must be positive");

        if (!par.contains("points") || !par["points"].is_array() || par["points"].empty())
            throw ParseError("parametrized mode needs a nonempty points array");
        std::set<std::string> seen;
        for (const auto& jp : par["points"]) {
            if (!jp.is_object() || !jp.contains("id") || !jp["id"].is_string())
                throw ParseError("every point needs a string id");
            SingularPointRecord rec;
            rec.point_id = jp["id"].get<std::string>();
            if (rec.point_id.empty() || rec.point_id.find('#') != std::string::npos)
                throw ParseError("point id must be nonempty and must not contain '#'");
            if (!seen.insert(rec.point_id).second)
                throw ParseError("duplicate point id " + rec.point_id);
            rec.at_infinity = jp.value("at_infinity", false);
            if (rec.at_infinity && ambient == CurveModel::Ambient::Projective)
                throw ParseError("infinity points only make sense for affine-ambient curves");
            if (!jp.contains("branches") || !jp["branches"].is_array() || jp["branches"].empty())
                throw ParseError("point " + rec.point_id + " needs a nonempty branches array");
            int idx = 0;
            for (const auto& jb : jp["branches"])
                rec.branches.push_back(parse_branch(jb, rec.point_id, idx++, rec.at_infinity));
            size_t ncomp = rec.branches[0].components.size();
            for (const auto& b : rec.branches) {
                if (b.components.size() != ncomp)
                    throw ParseError("branches of point " + rec.point_id +
                                     " have mismatched component counts");
                if (b.component >= model.n_components)
                    throw ParseError("branch " + b.branch_id + " references component " +
                                     std::to_string(b.component) + " out of range");
            }
            model.points.push_back(std::move(rec));
        }
        complete_records(model);
        return model;
    }
    throw ParseError("mode must be \"implicit\" or \"parametrized\"");
}

OpenSetSpec load_openset(const json& doc) {
    require_schema_1(doc);
    OpenSetSpec spec;
    std::string c = doc.value("complement", "");
    if (c == "non_polar") spec.complement = OpenSetSpec::Complement::NonPolar;
    else if (c == "locally_polar") spec.complement = OpenSetSpec::Complement::LocallyPolar;
    else throw ParseError("complement must be \"non_polar\" or \"locally_polar\"");
    if (doc.contains("ambient")) spec.ambient = parse_ambient(doc);
    if (doc.contains("classes")) {
        if (!doc["classes"].is_object()) throw ParseError("classes must be an object");
        for (auto it = doc["classes"].begin(); it != doc["classes"].end(); ++it) {
            std::string v = it.value().get<std::string>();
            PointClass pc;
            if (v == "interior") pc = PointClass::Interior;
            else if (v == "boundary") pc = PointClass::Boundary;
            else if (v == "exterior") pc = PointClass::Exterior;
            else throw ParseError("point class must be interior, boundary or exterior");
            spec.point_classes[it.key()] = pc;
        }
    }
    if (spec.complement == OpenSetSpec::Complement::NonPolar && !spec.point_classes.empty())
        throw ParseError("a non-polar complement takes no point classification");
    return spec;
}

QuadratureConfig load_config(const json& doc) {
    require_schema_1(doc);
    QuadratureConfig cfg;
    cfg.annuli = doc.value("annuli", cfg.annuli);
    cfg.nodes_radial = doc.value("nodes_radial", cfg.nodes_radial);
    cfg.nodes_angular = doc.value("nodes_angular", cfg.nodes_angular);
    cfg.rel_tol = doc.value("rel_tol", cfg.rel_tol);
    if (cfg.annuli < 6 || cfg.annuli > 64) throw ParseError("annuli must be in [6, 64]");
    if (cfg.nodes_radial < 1 || cfg.nodes_angular < 1)
        throw ParseError("node counts must be positive");
    if (!(cfg.rel_tol > 0) || cfg.rel_tol > 0.1)
        throw ParseError("rel_tol must lie in (0, 0.1]");
    return cfg;
}

// --- reports ----------------------------------------------------------------

namespace {

ordered_json divisor_json(const Divisor& d) {
    ordered_json entries = ordered_json::object();
    for (const auto& [id, c] : d.entries()) entries[id] = c;
    ordered_json out;
    out["entries"] = entries;
    out["degree"] = d.degree();
    return out;
}

ordered_json branch_json(const PuiseuxBranch& b) {
    ordered_json jb;
    jb["id"] = b.branch_id;
    jb["mult"] = b.mult;
    ordered_json orders = ordered_json::array();
    for (const auto& o : b.component_orders()) {
        if (o) orders.push_back(*o);
        else orders.push_back(nullptr);
    }
    jb["orders"] = orders;
    if (b.at_infinity && b.inf_mult) jb["inf_mult"] = *b.inf_mult;
    if (b.symbolic) jb["symbolic"] = true;
    else {
        ordered_json comps = ordered_json::array();
        for (const auto& s : b.components) comps.push_back(s.to_string());
        jb["components"] = comps;
    }
    if (b.component != 0) jb["component"] = b.component;
    return jb;
}

ordered_json curve_json(const CurveModel& model) {
    ordered_json jc;
    jc["mode"] = model.mode == CurveModel::Mode::Implicit ? "implicit" : "parametrized";
    jc["ambient"] = model.ambient == CurveModel::Ambient::Affine ? "affine" : "projective";
    if (model.form) jc["polynomial"] = model.form->to_string();
    jc["degree"] = model.degree;
    try {
        jc["genus"] = model.genus();
    } catch (const Error&) {
        jc["genus"] = nullptr;
    }
    ordered_json pts = ordered_json::array();
    for (const auto& rec : model.points) {
        ordered_json jp;
        jp["id"] = rec.point_id;
        if (rec.position) jp["position"] = rec.position->to_string();
        jp["at_infinity"] = rec.at_infinity;
        jp["m"] = rec.m;
        jp["r"] = rec.r;
        if (rec.delta) jp["delta"] = *rec.delta;
        else jp["delta"] = nullptr;
        if (rec.at_infinity) jp["inf_mults"] = rec.inf_mults;
        ordered_json branches = ordered_json::array();
        for (const auto& b : rec.branches) branches.push_back(branch_json(b));
        jp["branches"] = branches;
        pts.push_back(jp);
    }
    jc["points"] = pts;
    return jc;
}

ordered_json divisors_json(const CurveModel& model) {
    ordered_json jd;
    jd["multiplicity"] = divisor_json(multiplicity_divisor(model));
    if (model.ambient == CurveModel::Ambient::Affine) {
        jd["affine_multiplicity"] = divisor_json(affine_multiplicity_divisor(model));
        auto [bw, pw] = degree_consistency(model);
        ordered_json chk;
        chk["branchwise"] = bw;
        chk["pointwise"] = pw;
        jd["degree_check"] = chk;
    }
    return jd;
}

ordered_json openset_json(const OpenSetSpec& spec) {
    ordered_json jo;
    jo["complement"] =
        spec.complement == OpenSetSpec::Complement::NonPolar ? "non_polar" : "locally_polar";
    ordered_json cls = ordered_json::object();
    for (const auto& [id, pc] : spec.point_classes)
        cls[id] = pc == PointClass::Interior ? "interior"
                  : pc == PointClass::Boundary ? "boundary"
                                               : "exterior";
    jo["classes"] = cls;
    return jo;
}

} // namespace

ordered_json report_analyze(const CurveModel& model) {
    ordered_json rep;
    rep["schema"] = "1";
    rep["report"] = "analyze";
    rep["curve"] = curve_json(model);
    rep["divisors"] = divisors_json(model);
    return rep;
}

ordered_json report_decide(const CurveModel& model, const OpenSetSpec& spec,
                           const DichotomyReport& drep) {
    ordered_json rep;
    rep["schema"] = "1";
    rep["report"] = "decide";
    rep["curve"] = curve_json(model);
    rep["divisors"] = divisors_json(model);
    rep["openset"] = openset_json(spec);
    ordered_json v;
    v["verdict"] = drep.verdict == DichotomyReport::Verdict::Infinite ? "infinite" : "finite";
    if (drep.verdict == DichotomyReport::Verdict::Finite) {
        if (drep.exact_dim) v["exact_dim"] = *drep.exact_dim;
        else v["exact_dim"] = nullptr;
        v["lower_bound"] = drep.lower_bound ? ordered_json(*drep.lower_bound) : ordered_json(nullptr);
        v["upper_bound"] = drep.upper_bound ? ordered_json(*drep.upper_bound) : ordered_json(nullptr);
        v["effective_divisor"] = divisor_json(drep.effective_divisor_used);
        v["interior_condition_count"] = drep.interior_condition_count;
        if (drep.genus) v["genus"] = *drep.genus;
    }
    if (!drep.notes.empty()) v["notes"] = drep.notes;
    rep["verdict"] = v;
    return rep;
}

ordered_json report_l2delta(const CurveModel& model, const OpenSetSpec& spec,
                            const L2DeltaResult& res) {
    ordered_json rep;
    rep["schema"] = "1";
    rep["report"] = "l2delta";
    rep["curve"] = curve_json(model);
    rep["openset"] = openset_json(spec);
    ordered_json v;
    v["value"] = res.value;
    v["dim_normalized"] = res.dim_normalized;
    v["dim_pullback"] = res.dim_pullback;
    rep["l2_delta"] = v;
    return rep;
}

ordered_json report_verify(const QuadratureConfig& cfg, const VerifySummary& summary) {
    ordered_json rep;
    rep["schema"] = "1";
    rep["report"] = "verify";
    ordered_json jc;
    jc["annuli"] = cfg.annuli;
    jc["nodes_radial"] = cfg.nodes_radial;
    jc["nodes_angular"] = cfg.nodes_angular;
    jc["rel_tol"] = cfg.rel_tol;
    rep["config"] = jc;
    ordered_json checks = ordered_json::array();
    for (const auto& c : summary.checks) {
        ordered_json jchk;
        jchk["name"] = c.name;
        jchk["passed"] = c.passed;
        jchk["value"] = c.value;
        jchk["expected"] = c.expected;
        jchk["error"] = c.error;
        checks.push_back(jchk);
    }
    rep["checks"] = checks;
    rep["all_passed"] = summary.all_passed();
    return rep;
}

} // namespace curvedim
