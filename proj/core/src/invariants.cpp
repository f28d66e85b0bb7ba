#include "curvedim/invariants.hpp"

#include "curvedim/errors.hpp"
#include "curvedim/series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace curvedim {

IntOrInfinity intersection_multiplicity(const PuiseuxBranch& b, const Poly& g_local) {
    if (b.symbolic) throw SymbolicDataInsufficient("intersection multiplicity needs numeric branch data");
    TruncSeries r = series_compose(g_local, b.components, ZeroCompose::Allow);
    auto o = r.exact_order();
    if (o) return *o;
    if (r.identically_zero()) return InfinityTag{};
    throw TruncationInsufficient("intersection multiplicity exceeds the truncation order");
}

namespace {

// Components of the branch extended to the requested jet order. Throws when
// a component is inexact and too short.
std::vector<TruncSeries> components_at_order(const PuiseuxBranch& b, int order) {
    std::vector<TruncSeries> out;
    out.reserve(b.components.size());
    for (const auto& s : b.components) out.push_back(s.with_order(order));
    return out;
}

// Enumerate exponent tuples alpha with sum_v alpha_v * w_v <= bound, where
// w_v > 0; variables with w_v == 0 are excluded by the caller.
void enumerate_tuples(const std::vector<long>& w, long bound,
                      const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> alpha(w.size(), 0);
    std::function<void(size_t, long)> rec = [&](size_t v, long left) {
        if (v == w.size()) {
            emit(alpha);
            return;
        }
        for (int a = 0;; ++a) {
            long cost = static_cast<long>(a) * w[v];
            if (cost > left) break;
            alpha[v] = a;
            rec(v + 1, left - cost);
        }
        alpha[v] = 0;
    };
    rec(0, bound);
}

} // namespace

RatMatrix monomial_pullback_jets(const std::vector<PuiseuxBranch>& branches, int order) {
    if (branches.empty()) throw Error("monomial_pullback_jets: no branches");
    size_t ncomp = branches[0].components.size();
    for (const auto& b : branches)
        if (b.components.size() != ncomp)
            throw Error("monomial_pullback_jets: branches have mismatched component counts");

    std::vector<std::vector<TruncSeries>> comps;
    comps.reserve(branches.size());
    for (const auto& b : branches) comps.push_back(components_at_order(b, order));

    // Per-variable weight: min over branches of the component order; a
    // variable whose component vanishes on every branch pulls back to zero
    // and is excluded.
    std::vector<long> weights;
    std::vector<size_t> active;
    for (size_t v = 0; v < ncomp; ++v) {
        long w = -1;
        for (const auto& cs : comps) {
            auto o = cs[v].exact_order();
            if (o && (w < 0 || *o < w)) w = *o;
        }
        if (w == 0) throw Error("monomial_pullback_jets: component does not vanish at the center");
        if (w > 0) {
            weights.push_back(w);
            active.push_back(v);
        }
    }

    size_t jetlen = static_cast<size_t>(order) + 1;
    RatMatrix rows;
    enumerate_tuples(weights, order, [&](const std::vector<int>& alpha) {
        std::vector<Rat> row;
        row.reserve(branches.size() * jetlen);
        for (const auto& cs : comps) {
            TruncSeries prod = TruncSeries::constant(order, Rat(1), cs[0].param(), true);
            for (size_t k = 0; k < active.size(); ++k)
                if (alpha[k] > 0) prod = prod * cs[active[k]].pow(alpha[k]);
            for (int t = 0; t <= order; ++t) row.push_back(prod.coeff(t));
        }
        rows.push_back(std::move(row));
    });
    return rows;
}

SemigroupData value_semigroup(const PuiseuxBranch& b, int bound) {
    if (bound < 1) throw Error("value_semigroup: bound must be positive");
    if (b.symbolic) {
        // Orders-only data supports monomial parametrizations exactly.
        for (const auto& s : b.components)
            if (s.poly_degree() >= 0 && s.exact_order() && s.poly_degree() != *s.exact_order())
                throw SymbolicDataInsufficient("value semigroup of a non-monomial symbolic branch");
    }
    RatMatrix m = monomial_pullback_jets({b}, bound);
    std::vector<size_t> pivots = row_reduce(m);
    std::vector<bool> member(static_cast<size_t>(bound) + 1, false);
    for (size_t p : pivots) member[p] = true;
    if (!member[0]) throw Error("value_semigroup: 0 is not realized");

    long minpos = -1;
    for (long s = 1; s <= bound; ++s)
        if (member[static_cast<size_t>(s)]) {
            minpos = s;
            break;
        }
    SemigroupData out;
    if (minpos < 0) throw BoundTooSmall("no positive semigroup element below the bound");

    long last_gap = -1;
    for (long s = 1; s <= bound; ++s)
        if (!member[static_cast<size_t>(s)]) last_gap = s;
    out.conductor = last_gap + 1;
    // Stabilized when a full run of `minpos` consecutive members ends at the
    // bound; everything above is then in the semigroup.
    if (out.conductor + minpos - 1 > bound)
        throw BoundTooSmall("conductor not stabilized below the bound");
    for (long s = 1; s < out.conductor; ++s)
        if (!member[static_cast<size_t>(s)]) out.gaps.push_back(s);

    // Minimal generators: members not expressible as a sum of two positive
    // members; none exceed conductor + minpos.
    for (long s = 1; s <= std::min<long>(bound, out.conductor + minpos); ++s) {
        if (!member[static_cast<size_t>(s)]) continue;
        bool decomposable = false;
        for (long a = minpos; a <= s - minpos && !decomposable; ++a)
            if (member[static_cast<size_t>(a)] && member[static_cast<size_t>(s - a)])
                decomposable = true;
        if (!decomposable) out.generators.push_back(s);
    }
    return out;
}

int delta_point(const std::vector<PuiseuxBranch>& branches) {
    if (branches.empty()) throw Error("delta_point: no branches");
    for (const auto& b : branches) {
        if (!b.symbolic) continue;
        // A single symbolic branch is fine when it is monomial: the value
        // semigroup, and hence the gap count, is determined by orders alone.
        bool monomial = true;
        for (const auto& s : b.components)
            if (s.poly_degree() >= 0 && s.exact_order() && s.poly_degree() != *s.exact_order())
                monomial = false;
        if (branches.size() > 1 || !monomial)
            throw SymbolicDataInsufficient(
                "delta of a multi-branch or non-monomial germ needs numeric coefficients");
    }

    long mult_sum = 0;
    for (const auto& b : branches) {
        int m = b.computed_mult();
        mult_sum += static_cast<long>(m) * (m + 1);
    }
    constexpr int kCap = 512;
    int nc = static_cast<int>(std::clamp<long>(2 * mult_sum, 4, kCap / 2));

    // Monomial unibranch germs: every pulled-back monomial is a single
    // t-power, so the jet span is a coordinate subspace and the corank is
    // the gap count of the order semigroup.
    bool monomial_unibranch = branches.size() == 1;
    std::vector<long> gens;
    if (monomial_unibranch) {
        for (const auto& s : branches[0].components) {
            int d = s.poly_degree();
            if (d < 0) continue;
            auto o = s.exact_order();
            if (!o || *o != d) {
                monomial_unibranch = false;
                break;
            }
            gens.push_back(*o);
        }
        if (gens.empty()) monomial_unibranch = false;
    }

    auto corank_at = [&](int order) -> long {
        if (monomial_unibranch) {
            std::vector<char> member(static_cast<size_t>(order) + 1, 0);
            member[0] = 1;
            for (long v = 1; v <= order; ++v)
                for (long g : gens)
                    if (g <= v && member[static_cast<size_t>(v - g)]) {
                        member[static_cast<size_t>(v)] = 1;
                        break;
                    }
            long gaps = 0;
            for (char m : member)
                if (!m) ++gaps;
            return gaps;
        }
        RatMatrix m = monomial_pullback_jets(branches, order);
        size_t rank = row_reduce(m).size();
        return static_cast<long>(branches.size()) * (order + 1) - static_cast<long>(rank);
    };

    long prev = corank_at(nc);
    while (true) {
        int next = std::min(nc * 2, kCap);
        long cur = corank_at(next);
        if (cur == prev) return static_cast<int>(cur);
        if (next >= kCap) throw TruncationInsufficient("delta: jet truncation cap reached");
        prev = cur;
        nc = next;
    }
}

int genus_of_normalization(int degree, const std::vector<SingularPointRecord>& records) {
    if (degree < 1) throw Error("genus_of_normalization: degree must be positive");
    long delta_sum = 0;
    for (const auto& rec : records) {
        if (!rec.delta)
            throw SymbolicDataInsufficient("genus needs the delta invariant of every singular point");
        delta_sum += *rec.delta;
    }
    long g = static_cast<long>(degree - 1) * (degree - 2) / 2 - delta_sum;
    if (g < 0)
        throw NegativeGenus("degree " + std::to_string(degree) + " with total delta " +
                            std::to_string(delta_sum) + " gives negative genus");
    return static_cast<int>(g);
}

} // namespace curvedim
