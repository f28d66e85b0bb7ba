#include "curvedim/dichotomy.hpp"

#include "curvedim/errors.hpp"
#include "curvedim/linalg.hpp"
#include "curvedim/series.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace curvedim {

namespace {

// Taylor jet of q(z0 + t) through order `order` for a univariate q given by
// coefficients.
TruncSeries shift_series(const std::vector<Rat>& q, const Rat& z0, int order) {
    TruncSeries out(order, "t");
    // Repeated synthetic translation: evaluate q(z0 + t) by Horner in t.
    // acc holds the coefficients of the running polynomial in t.
    std::vector<Rat> acc;
    for (size_t i = q.size(); i-- > 0;) {
        // acc := acc * (z0 + t) + q[i]
        std::vector<Rat> next(acc.size() + 1, Rat(0));
        for (size_t k = 0; k < acc.size(); ++k) {
            next[k] += acc[k] * z0;
            next[k + 1] += acc[k];
        }
        if (next.empty()) next.push_back(Rat(0));
        next[0] += q[i];
        acc = std::move(next);
        if (acc.size() > static_cast<size_t>(order) + 1) acc.resize(static_cast<size_t>(order) + 1);
    }
    for (size_t k = 0; k < acc.size() && k <= static_cast<size_t>(order); ++k)
        out.set_coeff(static_cast<int>(k), acc[k]);
    return out;
}

struct BranchSite {
    std::string branch_id;
    int component = 0;
    Rat position; // on the rational component, a finite point
};

} // namespace

long h0_rational(const Divisor& d, const std::vector<const SingularPointRecord*>& interior,
                 const CurveModel& model) {
    // Gather every branch the computation touches. On each rational
    // component the canonical coordinate z places the first positive divisor
    // site (smallest branch id) at z = infinity with branch parameter 1/z,
    // and all other sites at finite positions 0, 1, 2, ... with branch
    // parameter z - z_i. This is the normal form of the glued models the
    // section spaces are defined on: sections become polynomials in z of
    // degree up to deg D_+ divided by the finite pole factors.
    std::set<std::string> ids;
    for (const auto& [id, c] : d.entries()) ids.insert(id);
    for (const auto* rec : interior)
        for (const auto& b : rec->branches) {
            if (b.symbolic)
                throw SymbolicDataInsufficient(
                    "interior membership conditions need numeric branch coefficients");
            ids.insert(b.branch_id);
        }

    int ncomp = model.n_components;
    std::vector<std::string> at_infinity(static_cast<size_t>(ncomp));
    for (const auto& id : ids) {
        const PuiseuxBranch* b = model.find_branch(id);
        if (!b) throw Error("unknown branch id in divisor: " + id);
        if (d.coeff(id) > 0 && at_infinity[static_cast<size_t>(b->component)].empty())
            at_infinity[static_cast<size_t>(b->component)] = id;
    }

    std::map<std::string, BranchSite> sites; // finite sites only
    long pos = 0;
    for (const auto& id : ids) {
        const PuiseuxBranch* b = model.find_branch(id);
        if (id == at_infinity[static_cast<size_t>(b->component)]) continue;
        sites[id] = BranchSite{id, b->component, Rat(pos++)};
    }

    // Per-component finite pole polynomial Q_C; basis z^j / Q_C with
    // 0 <= j <= deg(D_+ on C), so the pole order at z = infinity is at most
    // the coefficient of the infinity site.
    std::vector<std::vector<Rat>> qpoly(static_cast<size_t>(ncomp), std::vector<Rat>{Rat(1)});
    std::vector<long> posdeg(static_cast<size_t>(ncomp), 0);
    auto mul_linear = [](std::vector<Rat> p, const Rat& root) {
        // p(z) * (z - root)
        std::vector<Rat> out(p.size() + 1, Rat(0));
        for (size_t i = 0; i < p.size(); ++i) {
            out[i + 1] += p[i];
            out[i] -= p[i] * root;
        }
        return out;
    };
    for (const auto& [id, c] : d.entries()) {
        if (c <= 0) continue;
        const PuiseuxBranch* b = model.find_branch(id);
        size_t comp = static_cast<size_t>(b->component);
        posdeg[comp] += c;
        if (id == at_infinity[comp]) continue;
        for (long k = 0; k < c; ++k) qpoly[comp] = mul_linear(qpoly[comp], sites.at(id).position);
    }
    struct BasisFn {
        int component;
        int power; // z^power / Q_C
    };
    std::vector<BasisFn> basis;
    for (int comp = 0; comp < ncomp; ++comp)
        for (long j = 0; j <= posdeg[static_cast<size_t>(comp)]; ++j)
            basis.push_back(BasisFn{comp, static_cast<int>(j)});
    size_t nb = basis.size();

    // Column layout of the value space: vanishing-jet blocks at branches with
    // negative coefficients, then membership blocks per interior record.
    struct NegBlock {
        BranchSite site;
        int order; // jets 0..order-1 must vanish
    };
    std::vector<NegBlock> negs;
    for (const auto& [id, c] : d.entries())
        if (c < 0) negs.push_back(NegBlock{sites.at(id), static_cast<int>(-c)});

    struct MemBlock {
        const SingularPointRecord* rec;
        int order; // jets 0..order
    };
    std::vector<MemBlock> mems;
    for (const auto* rec : interior) {
        if (!rec->delta)
            throw SymbolicDataInsufficient("interior point " + rec->point_id + " has no delta invariant");
        if (*rec->delta == 0) continue; // smooth: membership is automatic
        mems.push_back(MemBlock{rec, 2 * *rec->delta});
    }

    size_t total_cols = 0;
    for (const auto& nb_ : negs) total_cols += static_cast<size_t>(nb_.order);
    for (const auto& mb : mems)
        total_cols += mb.rec->branches.size() * (static_cast<size_t>(mb.order) + 1);
    if (total_cols == 0) return static_cast<long>(nb);

    // Jet of a basis function at a site, through `order`.
    auto basis_jet = [&](const BasisFn& f, const BranchSite& site, int order) -> TruncSeries {
        if (f.component != site.component) return TruncSeries::zero(order, "t", true);
        std::vector<Rat> zj(static_cast<size_t>(f.power) + 1, Rat(0));
        zj.back() = Rat(1);
        TruncSeries num = shift_series(zj, site.position, order);
        TruncSeries den = shift_series(qpoly[static_cast<size_t>(f.component)], site.position, order);
        if (den.coeff(0).is_zero())
            throw Error("h0_rational: condition site collides with a pole");
        return num * den.inverse();
    };

    RatMatrix rows; // evaluation rows (one per basis fn) then membership spans
    rows.reserve(nb);
    for (const auto& f : basis) {
        std::vector<Rat> row;
        row.reserve(total_cols);
        for (const auto& nb_ : negs) {
            TruncSeries jet = basis_jet(f, nb_.site, nb_.order - 1);
            for (int k = 0; k < nb_.order; ++k) row.push_back(jet.coeff(k));
        }
        for (const auto& mb : mems) {
            for (const auto& b : mb.rec->branches) {
                TruncSeries jet = basis_jet(f, sites.at(b.branch_id), mb.order);
                for (int k = 0; k <= mb.order; ++k) row.push_back(jet.coeff(k));
            }
        }
        rows.push_back(std::move(row));
    }

    // Allowed-value spans: zero for the vanishing blocks; the pulled-back
    // monomial jets for each membership block.
    RatMatrix wrows;
    {
        size_t offset = 0;
        for (const auto& nb_ : negs) offset += static_cast<size_t>(nb_.order);
        for (const auto& mb : mems) {
            RatMatrix jets = monomial_pullback_jets(mb.rec->branches, mb.order);
            size_t width = mb.rec->branches.size() * (static_cast<size_t>(mb.order) + 1);
            for (auto& j : jets) {
                std::vector<Rat> row(total_cols, Rat(0));
                std::copy(j.begin(), j.end(), row.begin() + static_cast<long>(offset));
                wrows.push_back(std::move(row));
            }
            offset += width;
        }
    }

    size_t rank_w = wrows.empty() ? 0 : matrix_rank(wrows);
    RatMatrix stacked = rows;
    for (const auto& w : wrows) stacked.push_back(w);
    size_t rank_all = matrix_rank(std::move(stacked));
    long conditions = static_cast<long>(rank_all) - static_cast<long>(rank_w);
    return static_cast<long>(nb) - conditions;
}

H0Bounds h0_bounds(long deg, int genus) {
    H0Bounds b;
    b.lower = std::max<long>(0, 1 - genus + deg);
    b.upper = deg >= 0 ? deg + 1 : 0;
    if (deg < 0) b.exact = 0;
    else if (deg > 2L * genus - 2) b.exact = 1 - genus + deg;
    if (b.exact) b.lower = b.upper = *b.exact;
    return b;
}

bool triviality_test(const CurveModel& model) {
    if (model.ambient != CurveModel::Ambient::Affine)
        throw Error("triviality test applies to affine-ambient curves");
    long lhs = 0;
    for (const auto* rec : model.affine_singular_records())
        lhs += static_cast<long>(rec->m) - rec->r;
    long rhs = 0;
    for (const auto* rec : model.infinity_records()) {
        long inter = 0;
        for (int im : rec->inf_mults) inter += im;
        rhs += inter + rec->r;
    }
    return lhs < rhs;
}

namespace {

struct RestrictionData {
    Divisor restricted;
    std::vector<const SingularPointRecord*> interior_singular;
    long interior_condition_count = 0;
};

RestrictionData restrict_for(const CurveModel& model, const OpenSetSpec& spec) {
    bool affine = model.ambient == CurveModel::Ambient::Affine;
    Divisor base = affine ? affine_multiplicity_divisor(model) : multiplicity_divisor(model);

    // Points that require a classification: singular points, except that in
    // affine mode points over the hyperplane at infinity are implicitly
    // outside U and their (negative) entries are always kept.
    Divisor classify_part, infinity_part;
    for (const auto& [id, c] : base.entries()) {
        const PuiseuxBranch* b = model.find_branch(id);
        if (!b) throw Error("divisor references unknown branch " + id);
        if (affine && b->at_infinity) infinity_part.set(id, c);
        else classify_part.set(id, c);
    }

    std::vector<const SingularPointRecord*> must_classify =
        affine ? model.affine_singular_records() : model.singular_records();
    for (const auto* rec : must_classify)
        if (!spec.class_of(rec->point_id))
            throw UnclassifiedPoint("singular point " + rec->point_id +
                                    " is not classified by the open-set description");

    RestrictionData out;
    out.restricted = open_set_restriction(classify_part, spec) + infinity_part;
    for (const auto* rec : must_classify) {
        if (*spec.class_of(rec->point_id) != PointClass::Interior) continue;
        out.interior_singular.push_back(rec);
        if (!rec->delta)
            throw SymbolicDataInsufficient("interior singular point " + rec->point_id +
                                           " has no computable delta invariant");
        out.interior_condition_count += *rec->delta;
    }
    return out;
}

} // namespace

DichotomyReport decide(const CurveModel& model, const OpenSetSpec& spec, const DecideOptions& opts) {
    if (spec.ambient && *spec.ambient != model.ambient)
        throw ParseError("open-set description and curve disagree about the ambient space");

    DichotomyReport rep;
    if (spec.complement == OpenSetSpec::Complement::NonPolar) {
        rep.verdict = DichotomyReport::Verdict::Infinite;
        rep.notes = "complement is not locally polar";
        return rep;
    }

    RestrictionData rd = restrict_for(model, spec);
    rep.verdict = DichotomyReport::Verdict::Finite;
    rep.effective_divisor_used = rd.restricted;
    rep.interior_condition_count = rd.interior_condition_count;

    if (model.rational_normalization() && !opts.bounds_only) {
        long dim = h0_rational(rd.restricted, rd.interior_singular, model);
        rep.exact_dim = dim;
        rep.lower_bound = rep.upper_bound = dim;
        rep.genus = 0;
        return rep;
    }

    if (model.n_components != 1)
        throw UnsupportedGenus("bounds on a reducible curve need rational components");
    int g = model.genus();
    rep.genus = g;
    H0Bounds hb = h0_bounds(rd.restricted.degree(), g);
    if (rd.interior_singular.empty() && hb.exact && !opts.bounds_only) {
        rep.exact_dim = *hb.exact;
        rep.lower_bound = rep.upper_bound = *hb.exact;
        return rep;
    }
    rep.lower_bound = std::max<long>(0, hb.lower - rd.interior_condition_count);
    rep.upper_bound = hb.upper;
    if (opts.require_exact)
        throw UnsupportedGenus("exact dimension unavailable: genus " + std::to_string(g) +
                               " with interior conditions or nonvanishing h^1");
    return rep;
}

L2DeltaResult l2_delta(const CurveModel& model, const OpenSetSpec& spec) {
    if (spec.complement != OpenSetSpec::Complement::LocallyPolar)
        throw Error("the L^2 delta invariant needs a locally polar complement");
    if (!model.rational_normalization())
        throw UnsupportedGenus("exact L^2 delta needs a rational normalization");
    RestrictionData rd = restrict_for(model, spec);
    L2DeltaResult out;
    out.dim_normalized = h0_rational(rd.restricted, {}, model);
    out.dim_pullback = h0_rational(rd.restricted, rd.interior_singular, model);
    out.value = out.dim_normalized - out.dim_pullback;
    return out;
}

long semigroup_gap_count(long lmax, const std::vector<long>& gens) {
    if (gens.empty()) throw Error("semigroup_gap_count: no generators");
    long g = 0;
    for (long x : gens) {
        if (x <= 0) throw Error("semigroup_gap_count: generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1) throw Error("semigroup_gap_count: generators must be coprime overall");
    if (lmax < 0) return 0;
    std::vector<char> member(static_cast<size_t>(lmax) + 1, 0);
    member[0] = 1;
    for (long v = 1; v <= lmax; ++v)
        for (long x : gens)
            if (x <= v && member[static_cast<size_t>(v - x)]) {
                member[static_cast<size_t>(v)] = 1;
                break;
            }
    long gaps = 0;
    for (long v = 0; v <= lmax; ++v)
        if (!member[static_cast<size_t>(v)]) ++gaps;
    return gaps;
}

} // namespace curvedim
