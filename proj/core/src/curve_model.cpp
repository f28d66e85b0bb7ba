#include "curvedim/curve_model.hpp"

#include "curvedim/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace curvedim {

const SingularPointRecord* CurveModel::find_point(const std::string& id) const {
    for (const auto& p : points)
        if (p.point_id == id) return &p;
    return nullptr;
}

const PuiseuxBranch* CurveModel::find_branch(const std::string& branch_id) const {
    auto hash = branch_id.rfind('#');
    if (hash == std::string::npos) return nullptr;
    const SingularPointRecord* p = find_point(branch_id.substr(0, hash));
    if (!p) return nullptr;
    for (const auto& b : p->branches)
        if (b.branch_id == branch_id) return &b;
    return nullptr;
}

std::vector<const SingularPointRecord*> CurveModel::singular_records() const {
    std::vector<const SingularPointRecord*> out;
    for (const auto& p : points)
        if (p.is_singular()) out.push_back(&p);
    return out;
}

std::vector<const SingularPointRecord*> CurveModel::affine_singular_records() const {
    std::vector<const SingularPointRecord*> out;
    for (const auto& p : points)
        if (p.is_singular() && !p.at_infinity) out.push_back(&p);
    return out;
}

std::vector<const SingularPointRecord*> CurveModel::infinity_records() const {
    std::vector<const SingularPointRecord*> out;
    for (const auto& p : points)
        if (p.at_infinity) out.push_back(&p);
    return out;
}

int CurveModel::genus() const {
    if (genus_declared) return *genus_declared;
    if (plane && n_components == 1) return genus_of_normalization(degree, points);
    if (rational_declared) return 0;
    throw UnsupportedGenus("genus of a non-plane curve must be declared");
}

bool CurveModel::rational_normalization() const {
    if (rational_declared) return true;
    if (n_components != 1) return false;
    try {
        return genus() == 0;
    } catch (const Error&) {
        return false;
    }
}

// --- implicit pipeline ------------------------------------------------------

namespace {

int tangent_cone_order(const Poly& f_local) {
    int best = -1;
    for (const auto& [e, c] : f_local.terms()) {
        int s = 0;
        for (int k : e) s += k;
        if (best < 0 || s < best) best = s;
    }
    return best;
}

SingularPointRecord build_record(const Poly& F, const ProjPoint& p, const std::string& id, int N,
                                 bool want_infinity_data) {
    SingularPointRecord rec;
    rec.point_id = id;
    rec.position = p;
    rec.at_infinity = p.at_infinity();
    rec.branches = newton_puiseux(F, p, N);
    for (auto& b : rec.branches) {
        b.point_id = id;
        b.branch_id = id + b.branch_id; // newton_puiseux left "#k"
    }
    rec.r = static_cast<int>(rec.branches.size());
    rec.m = 0;
    for (const auto& b : rec.branches) rec.m += b.mult;

    Localization loc = localize_at(F, p);
    int tc = tangent_cone_order(loc.f);
    if (tc != rec.m)
        throw Error("branch multiplicities at " + p.to_string() + " sum to " +
                    std::to_string(rec.m) + " but the tangent cone has order " + std::to_string(tc));

    if (rec.r == 1 && rec.m == 1) {
        rec.delta = 0;
    } else {
        rec.delta = delta_point(rec.branches);
    }
    if (want_infinity_data && rec.at_infinity) {
        for (const auto& b : rec.branches) {
            if (!b.inf_mult)
                throw TruncationInsufficient("infinity intersection undetermined at " + p.to_string());
            rec.inf_mults.push_back(*b.inf_mult);
        }
    }
    return rec;
}

} // namespace

CurveModel analyze_implicit(const Poly& F, CurveModel::Ambient ambient, const AnalyzeOptions& opts) {
    if (F.nvars() != 3) throw ParseError("implicit curve must be a trivariate form");
    if (F.is_zero() || F.is_constant()) throw ParseError("implicit curve is degenerate");
    if (!F.is_homogeneous()) throw ParseError("implicit curve must be homogeneous");

    int d = F.total_degree();
    if (ambient == CurveModel::Ambient::Affine) {
        if (F.substitute(2, Rat(0)).is_zero())
            throw ParseError("affine curve contains the line at infinity (z divides the form)");
    }

    int N = opts.initial_truncation > 0
                ? opts.initial_truncation
                : std::clamp(4 * std::max(1, (d - 1) * (d - 2)), 16, opts.max_truncation);

    SpecialPoints sp = find_special_points(F);
    if (!sp.unresolved_singular.empty()) {
        std::ostringstream os;
        os << "singular locus not resolvable over Q:";
        for (const auto& m : sp.unresolved_singular) os << " " << m << ";";
        throw UnresolvedLocus(os.str());
    }
    if (ambient == CurveModel::Ambient::Affine && !sp.unresolved_infinity.empty()) {
        std::ostringstream os;
        os << "points at infinity not resolvable over Q:";
        for (const auto& m : sp.unresolved_infinity) os << " " << m << ";";
        throw UnresolvedLocus(os.str());
    }

    while (true) {
        try {
            CurveModel model;
            model.mode = CurveModel::Mode::Implicit;
            model.ambient = ambient;
            model.form = F;
            model.degree = d;
            model.plane = true;

            bool affine = ambient == CurveModel::Ambient::Affine;
            std::set<ProjPoint> wanted(sp.singular.begin(), sp.singular.end());
            if (affine) wanted.insert(sp.infinity.begin(), sp.infinity.end());
            else {
                // In projective mode the hyperplane z = 0 plays no role;
                // only singular points matter.
            }

            int idx = 0;
            for (const auto& p : wanted) {
                std::string id = "p" + std::to_string(idx++);
                model.points.push_back(build_record(F, p, id, N, affine));
            }
            return model;
        } catch (const TruncationInsufficient&) {
            if (N >= opts.max_truncation) throw;
            N = std::min(2 * N, opts.max_truncation);
        }
    }
}

void complete_records(CurveModel& model) {
    for (auto& rec : model.points) {
        if (rec.branches.empty()) throw ParseError("point " + rec.point_id + " has no branches");
        rec.r = static_cast<int>(rec.branches.size());
        int m = 0;
        for (auto& b : rec.branches) {
            b.point_id = rec.point_id;
            b.at_infinity = rec.at_infinity;
            m += b.mult;
        }
        rec.m = m;
        if (rec.r == 1 && rec.m == 1) {
            rec.delta = 0;
        } else {
            try {
                rec.delta = delta_point(rec.branches);
            } catch (const SymbolicDataInsufficient&) {
                rec.delta = std::nullopt;
            }
        }
        rec.inf_mults.clear();
        if (rec.at_infinity) {
            for (auto& b : rec.branches) {
                if (!b.inf_mult)
                    throw ParseError("branch " + b.branch_id +
                                     " at infinity has no intersection order with the hyperplane");
                rec.inf_mults.push_back(*b.inf_mult);
            }
        }
    }
}

} // namespace curvedim
