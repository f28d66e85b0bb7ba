#include "curvedim/puiseux.hpp"

#include "curvedim/errors.hpp"
#include "curvedim/resultant.hpp"
#include "curvedim/roots.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace curvedim {

ProjPoint ProjPoint::make(const Rat& x, const Rat& y, const Rat& z) {
    ProjPoint p{{x, y, z}};
    Rat scale;
    if (!z.is_zero()) scale = z;
    else if (!y.is_zero()) scale = y;
    else if (!x.is_zero()) scale = x;
    else throw Error("ProjPoint: all coordinates zero");
    for (auto& c : p.c) c /= scale;
    return p;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
    for (size_t i = 0; i < 3; ++i) {
        if (a.c[i] < b.c[i]) return true;
        if (b.c[i] < a.c[i]) return false;
    }
    return false;
}

std::string ProjPoint::to_string() const {
    return "[" + c[0].to_string() + ":" + c[1].to_string() + ":" + c[2].to_string() + "]";
}

std::vector<std::optional<int>> PuiseuxBranch::component_orders() const {
    std::vector<std::optional<int>> out;
    out.reserve(components.size());
    for (const auto& s : components) out.push_back(s.exact_order());
    return out;
}

int PuiseuxBranch::computed_mult() const {
    int m = -1;
    for (const auto& s : components) {
        auto o = s.exact_order();
        if (o && (m < 0 || *o < m)) m = *o;
    }
    if (m < 0) throw TruncationInsufficient("branch multiplicity undetermined: all components vanish to the truncation order");
    return m;
}

// --- localization -----------------------------------------------------------

Localization localize_at(const Poly& F, const ProjPoint& p) {
    if (F.nvars() != 3) throw Error("localize_at: expected a trivariate form");
    Localization loc;
    if (!p.c[2].is_zero()) {
        loc.chart = Chart::Z;
        Poly f = F.dehomogenize(2); // vars (x, y)
        f = f.translate(0, p.c[0]).translate(1, p.c[1]);
        loc.f = f;
    } else if (!p.c[1].is_zero()) {
        loc.chart = Chart::Y;
        Poly f = F.dehomogenize(1); // vars (x, z)
        f = f.translate(0, p.c[0]);
        loc.f = f;
        loc.hinf_index = 1;
    } else {
        loc.chart = Chart::X;
        Poly f = F.dehomogenize(0); // vars (y, z)
        loc.f = f;
        loc.hinf_index = 1;
    }
    return loc;
}

// --- special points ---------------------------------------------------------

namespace {

UPoly to_upoly(const Poly& p, size_t var) {
    // p must involve only `var`.
    UPoly out(static_cast<size_t>(std::max(p.degree_in(var), 0)) + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) throw Error("to_upoly: polynomial is not univariate");
        out[static_cast<size_t>(e[var])] = c;
    }
    return upoly_trim(out);
}

struct AffineSolveResult {
    std::vector<std::array<Rat, 2>> points;
    std::vector<std::string> unresolved;
};

// Rational solutions of f = df/da = df/db = 0 for a bivariate f.
AffineSolveResult affine_singular_points(const Poly& f) {
    AffineSolveResult out;
    Poly fa = f.partial(0);
    Poly fb = f.partial(1);
    if (fa.is_zero() && fb.is_zero()) return out; // constant, nothing to do

    auto candidates_in = [&](size_t var) -> std::optional<std::vector<Rat>> {
        size_t other = 1 - var;
        std::vector<UPoly> cands;
        for (const Poly* g : {&fa, &fb}) {
            if (g->is_zero()) continue;
            Poly r = g->degree_in(other) > 0 || f.degree_in(other) > 0
                         ? resultant(f, *g, other)
                         : (*g) * f; // both already univariate in `var`
            if (!r.is_zero()) cands.push_back(to_upoly(r, var));
        }
        if (cands.empty()) {
            out.unresolved.push_back("degenerate elimination in variable " + f.vars()[var]);
            return std::nullopt;
        }
        UPoly g = cands[0];
        for (size_t i = 1; i < cands.size(); ++i) g = upoly_gcd(g, cands[i]);
        if (upoly_degree(g) == 0) return std::vector<Rat>{};
        g = upoly_squarefree_part(g);
        RationalRoots rr = rational_roots(g);
        if (!rr.complete || rr.residual_degree > 0) {
            out.unresolved.push_back("singular locus has coordinates not resolvable over Q (variable " +
                                     f.vars()[var] + ")");
        }
        std::vector<Rat> vals;
        for (const auto& [r, m] : rr.roots) vals.push_back(r);
        return vals;
    };

    auto avals = candidates_in(0);
    auto bvals = candidates_in(1);
    if (!avals || !bvals) return out;
    for (const auto& a : *avals) {
        for (const auto& b : *bvals) {
            Poly fv = f.substitute(0, a).substitute(1, b);
            Poly fav = fa.substitute(0, a).substitute(1, b);
            Poly fbv = fb.substitute(0, a).substitute(1, b);
            if (fv.is_zero() && fav.is_zero() && fbv.is_zero())
                out.points.push_back({a, b});
        }
    }
    return out;
}

} // namespace

SpecialPoints find_special_points(const Poly& F) {
    if (F.nvars() != 3) throw Error("find_special_points: expected a trivariate form");
    if (F.is_zero() || F.is_constant()) throw Error("find_special_points: degenerate form");
    if (!F.is_homogeneous()) throw Error("find_special_points: form is not homogeneous");
    if (!is_square_free(F)) throw NotSquareFree("defining form has a repeated factor");

    SpecialPoints sp;
    std::set<ProjPoint> sing;

    // Chart z = 1 catches every singular point off the line z = 0; chart
    // y = 1 restricted to z = 0 catches the rest except [1:0:0].
    {
        Poly f = F.dehomogenize(2);
        AffineSolveResult r = affine_singular_points(f);
        for (const auto& pt : r.points) sing.insert(ProjPoint::make(pt[0], pt[1], Rat(1)));
        for (auto& m : r.unresolved) sp.unresolved_singular.push_back("chart z=1: " + m);
    }
    {
        // On z = 0, y != 0: singular points of the projective curve are
        // singular points of the affine curve in chart y = 1 with z = 0.
        Poly f = F.dehomogenize(1); // vars (x, z)
        AffineSolveResult r = affine_singular_points(f);
        for (const auto& pt : r.points)
            if (pt[1].is_zero()) sing.insert(ProjPoint::make(pt[0], Rat(1), Rat(0)));
        for (auto& m : r.unresolved) sp.unresolved_singular.push_back("chart y=1: " + m);
    }
    {
        Poly f = F.dehomogenize(0); // vars (y, z)
        AffineSolveResult r = affine_singular_points(f);
        for (const auto& pt : r.points)
            if (pt[0].is_zero() && pt[1].is_zero()) sing.insert(ProjPoint::make(Rat(1), Rat(0), Rat(0)));
        for (auto& m : r.unresolved) sp.unresolved_singular.push_back("chart x=1: " + m);
    }
    sp.singular.assign(sing.begin(), sing.end());

    // Points of F = z = 0.
    Poly at_inf = F.substitute(2, Rat(0)); // binary form in (x, y)
    if (at_inf.is_zero()) {
        sp.unresolved_infinity.push_back("the curve contains the line z = 0");
        return sp;
    }
    std::set<ProjPoint> inf;
    Poly g = at_inf.dehomogenize(1).drop_var(1); // univariate in x: F(x, 1, 0)
    UPoly gx = to_upoly(g, 0);
    int deg_total = at_inf.total_degree();
    if (upoly_degree(gx) < deg_total) inf.insert(ProjPoint::make(Rat(1), Rat(0), Rat(0)));
    if (upoly_degree(gx) >= 1) {
        RationalRoots rr = rational_roots(gx);
        if (!rr.complete || rr.residual_degree > 0)
            sp.unresolved_infinity.push_back("points at infinity not resolvable over Q");
        for (const auto& [r, m] : rr.roots) inf.insert(ProjPoint::make(r, Rat(1), Rat(0)));
    }
    sp.infinity.assign(inf.begin(), inf.end());
    return sp;
}

// --- Newton-Puiseux ---------------------------------------------------------

namespace {

struct Support {
    std::vector<std::array<int, 2>> pts; // (i, j) = (u-exp, v-exp)
};

Support support_of(const Poly& f) {
    Support s;
    for (const auto& [e, c] : f.terms()) s.pts.push_back({e[0], e[1]});
    std::sort(s.pts.begin(), s.pts.end());
    return s;
}

long cross(const std::array<int, 2>& o, const std::array<int, 2>& a, const std::array<int, 2>& b) {
    return static_cast<long>(a[0] - o[0]) * (b[1] - o[1]) -
           static_cast<long>(a[1] - o[1]) * (b[0] - o[0]);
}

// Edges of the Newton polygon with strictly negative slope (j decreasing in
// i), ordered by increasing i.
std::vector<std::pair<std::array<int, 2>, std::array<int, 2>>> newton_edges(const Support& s) {
    // Lower hull (Andrew monotone chain); points already sorted by (i, j).
    std::vector<std::array<int, 2>> hull;
    for (const auto& p : s.pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    std::vector<std::pair<std::array<int, 2>, std::array<int, 2>>> edges;
    for (size_t i = 0; i + 1 < hull.size(); ++i)
        if (hull[i + 1][1] < hull[i][1]) edges.emplace_back(hull[i], hull[i + 1]);
    return edges;
}

// f(u1^q, u1^p (c + v1)) / u1^l.
Poly edge_transform(const Poly& f, int q, int p, const Rat& c) {
    const auto& vars = f.vars();
    long l = 0;
    bool first = true;
    for (const auto& [e, k] : f.terms()) {
        long w = static_cast<long>(q) * e[0] + static_cast<long>(p) * e[1];
        if (first || w < l) l = w;
        first = false;
    }
    Poly out(vars);
    for (const auto& [e, k] : f.terms()) {
        long w = static_cast<long>(q) * e[0] + static_cast<long>(p) * e[1] - l;
        // (c + v)^j expanded binomially.
        int j = e[1];
        Rat binom(1);
        Rat cpow = c.pow(j);
        Rat cinv = c.is_zero() ? Rat(0) : c.inverse();
        for (int t = 0; t <= j; ++t) {
            // coefficient of v^t: C(j,t) c^{j-t}
            Poly::Exponents ex(2);
            ex[0] = static_cast<int>(w);
            ex[1] = t;
            out.add_term(ex, k * binom * cpow);
            if (t < j) {
                binom *= Rat(j - t);
                binom /= Rat(t + 1);
                if (c.is_zero()) {
                    cpow = (t + 1 == j) ? Rat(1) : Rat(0);
                } else {
                    cpow *= cinv;
                }
            }
        }
    }
    return out;
}

// Solve f(u, v(u)) = 0 for the unique series v with v(0) = 0, given that
// v = 0 is a simple root of f(0, v). Returns the solution truncated at N,
// marked exact when it terminates as a polynomial solution.
TruncSeries regular_solve(const Poly& f, int N) {
    TruncSeries u = TruncSeries::monomial(N, 1, Rat(1), "t", true);
    TruncSeries v = TruncSeries::zero(N, "t", true);
    Poly fv = f.partial(1);
    int steps = 1;
    for (int prec = 1; prec < N + 1; prec *= 2) ++steps;
    std::array<TruncSeries, 2> args{u, v};
    for (int it = 0; it <= steps + 1; ++it) {
        args[1] = v;
        TruncSeries val = series_compose(f, std::span<const TruncSeries>(args.data(), 2),
                                         ZeroCompose::Allow);
        if (val.is_zero_to_n()) break;
        TruncSeries der = series_compose(fv, std::span<const TruncSeries>(args.data(), 2),
                                         ZeroCompose::Allow);
        v = (v - val * der.inverse()).as_inexact();
    }
    args[1] = v;
    TruncSeries val = series_compose(f, std::span<const TruncSeries>(args.data(), 2),
                                     ZeroCompose::Allow);
    if (!val.is_zero_to_n())
        throw Error("newton_puiseux: regular iteration failed to converge");
    // Exactness: v is a candidate polynomial solution; f(u, v) is a
    // polynomial of bounded degree, so checking it at that order proves it.
    int vdeg = std::max(v.poly_degree(), 0);
    long big = f.degree_in(0) + static_cast<long>(f.degree_in(1)) * std::max(vdeg, 1);
    if (big <= 4096) {
        TruncSeries ub = TruncSeries::monomial(static_cast<int>(big), 1, Rat(1), "t", true);
        TruncSeries vb(static_cast<int>(big), "t", true);
        for (int k = 0; k <= std::min(v.truncation_order(), static_cast<int>(big)); ++k)
            vb.set_coeff(k, v.coeff(k));
        std::array<TruncSeries, 2> ab{ub, vb};
        TruncSeries chk = series_compose(f, std::span<const TruncSeries>(ab.data(), 2),
                                         ZeroCompose::Allow);
        if (chk.identically_zero()) v.mark_exact();
    }
    return v;
}

using BranchPair = std::pair<TruncSeries, TruncSeries>;

std::vector<BranchPair> np_expand(Poly f, int N, int depth) {
    if (depth > 128) throw Error("newton_puiseux: recursion depth exceeded");
    std::vector<BranchPair> out;
    const auto& vars = f.vars();

    // Component u = 0 (only possible at the top level).
    {
        Poly u = Poly::variable(vars, 0);
        auto q = divide_exact(f, u);
        if (q) {
            out.emplace_back(TruncSeries::zero(N, "t", true),
                             TruncSeries::monomial(N, 1, Rat(1), "t", true));
            f = std::move(*q);
            if (divide_exact(f, u))
                throw Error("newton_puiseux: input has a repeated line component");
        }
    }
    // Component v = 0.
    {
        Poly v = Poly::variable(vars, 1);
        auto q = divide_exact(f, v);
        if (q) {
            out.emplace_back(TruncSeries::monomial(N, 1, Rat(1), "t", true),
                             TruncSeries::zero(N, "t", true));
            f = std::move(*q);
            if (divide_exact(f, v))
                throw Error("newton_puiseux: input has a repeated line component");
        }
    }
    if (!f.coeff(Poly::Exponents{0, 0}).is_zero()) return out; // nothing through the origin

    if (f.is_zero() || f.is_constant()) return out;

    Support s = support_of(f);
    for (const auto& [top, bot] : newton_edges(s)) {
        int di = bot[0] - top[0];
        int dj = top[1] - bot[1];
        int g = std::gcd(di, dj);
        int p = di / g, q = dj / g;
        // Edge polynomial in chat = c^q.
        UPoly phi(static_cast<size_t>((top[1] - bot[1]) / q) + 1, Rat(0));
        for (const auto& [e, k] : f.terms()) {
            int i = e[0], j = e[1];
            if (i < top[0] || i > bot[0]) continue;
            if (static_cast<long>(i - top[0]) * (bot[1] - top[1]) !=
                static_cast<long>(j - top[1]) * (bot[0] - top[0]))
                continue;
            phi[static_cast<size_t>((j - bot[1]) / q)] += k;
        }
        phi = upoly_trim(phi);
        RationalRoots rr = rational_roots(phi);
        long found = 0;
        for (const auto& [root, mult] : rr.roots) found += mult;
        if (!rr.complete || rr.residual_degree > 0)
            throw IrrationalCoefficients(
                "Newton polygon edge equation has roots outside Q; use parametrized input");
        for (const auto& [chat, mu] : rr.roots) {
            if (chat.is_zero()) continue; // cannot happen: phi(0) != 0 by construction
            auto croot = chat.nth_root(static_cast<unsigned long>(q));
            if (!croot)
                throw IrrationalCoefficients(
                    "branch requires an irrational root scaling; use parametrized input");
            Rat c = *croot;
            Poly f1 = edge_transform(f, q, p, c);
            std::vector<BranchPair> subs;
            if (mu == 1) {
                subs.emplace_back(TruncSeries::monomial(N, 1, Rat(1), "t", true),
                                  regular_solve(f1, N));
            } else {
                subs = np_expand(f1, N, depth + 1);
            }
            for (auto& [u1, v1] : subs) {
                auto uo = u1.exact_order();
                if (!uo || u1.coeff(*uo) != Rat(1) || u1.poly_degree() != *uo)
                    throw Error("newton_puiseux: non-monomial parameter in recursion");
                TruncSeries U = u1.pow(q);
                TruncSeries V = (TruncSeries::constant(N, c, "t", true) + v1) * u1.pow(p);
                out.emplace_back(std::move(U), std::move(V));
            }
        }
    }
    return out;
}

} // namespace

std::vector<std::pair<TruncSeries, TruncSeries>> newton_puiseux_local(const Poly& f, int N) {
    if (f.nvars() != 2) throw Error("newton_puiseux_local: expected a bivariate polynomial");
    if (N < 4) throw Error("newton_puiseux_local: truncation order too small");
    if (!f.coeff(Poly::Exponents{0, 0}).is_zero())
        throw Error("newton_puiseux_local: the origin does not lie on the curve");
    auto out = np_expand(f, N, 0);
    // Deterministic order: by component orders, then coefficients.
    std::sort(out.begin(), out.end(), [](const BranchPair& a, const BranchPair& b) {
        auto key = [](const BranchPair& x) {
            auto ou = x.first.exact_order(), ov = x.second.exact_order();
            return std::pair<int, int>(ou ? *ou : 1 << 20, ov ? *ov : 1 << 20);
        };
        auto ka = key(a), kb = key(b);
        if (ka != kb) return ka < kb;
        for (int k = 0; k <= a.first.truncation_order(); ++k) {
            if (a.first.coeff(k) != b.first.coeff(k)) return a.first.coeff(k) < b.first.coeff(k);
            if (a.second.coeff(k) != b.second.coeff(k)) return a.second.coeff(k) < b.second.coeff(k);
        }
        return false;
    });
    return out;
}

std::vector<PuiseuxBranch> newton_puiseux(const Poly& F, const ProjPoint& p, int N) {
    Localization loc = localize_at(F, p);
    if (!loc.f.coeff(Poly::Exponents{0, 0}).is_zero())
        throw Error("newton_puiseux: point " + p.to_string() + " does not lie on the curve");
    std::vector<std::pair<TruncSeries, TruncSeries>> pairs;
    try {
        pairs = newton_puiseux_local(loc.f, N);
    } catch (IrrationalCoefficients& e) {
        throw IrrationalCoefficients(std::string(e.what()) + " (at " + p.to_string() + ")");
    }
    std::vector<PuiseuxBranch> out;
    int idx = 0;
    for (auto& [U, V] : pairs) {
        PuiseuxBranch b;
        b.center = p;
        b.chart = loc.chart;
        b.components = {U, V};
        b.at_infinity = p.at_infinity();
        b.mult = b.computed_mult();
        if (b.at_infinity) {
            auto o = b.components[loc.hinf_index].exact_order();
            if (!o)
                throw TruncationInsufficient("intersection with the line at infinity vanishes to the truncation order");
            b.inf_mult = *o;
        }
        b.branch_id = "#" + std::to_string(idx++);
        out.push_back(std::move(b));
    }
    return out;
}

PuiseuxBranch validate_branch(PuiseuxBranch b, const Poly* f_local) {
    if (b.components.empty()) throw Error("validate_branch: branch has no components");
    if (!b.symbolic) {
        int m = b.computed_mult();
        if (b.mult != 0 && b.mult != m)
            throw InconsistentMultiplicity("declared multiplicity " + std::to_string(b.mult) +
                                           " but the components have multiplicity " + std::to_string(m));
        b.mult = m;
        if (f_local) {
            TruncSeries r = series_compose(*f_local, b.components, ZeroCompose::Allow);
            if (!r.is_zero_to_n())
                throw NotOnCurve("parametrization does not satisfy the local equation (order " +
                                 std::to_string(*r.exact_order()) + " obstruction)");
        }
    } else {
        int m = b.computed_mult();
        if (b.mult != 0 && b.mult != m)
            throw InconsistentMultiplicity("declared multiplicity disagrees with component orders");
        b.mult = m;
    }
    if (b.at_infinity) {
        auto o = b.components.back().exact_order();
        if (!o) throw TruncationInsufficient("infinity intersection order undetermined");
        if (b.inf_mult && *b.inf_mult != *o)
            throw InconsistentMultiplicity("declared infinity intersection disagrees with component order");
        b.inf_mult = *o;
    }
    return b;
}

} // namespace curvedim
