#include "curvedim/invariants.hpp"

#include "curvedim/errors.hpp"
#include "curvedim/linalg.hpp"
#include "curvedim/roots.hpp"
#include "curvedim/series.hpp"

#include <doctest.h>

#include <numeric>

using namespace curvedim;

namespace {

const std::vector<std::string> XY{"x", "y"};

PuiseuxBranch monomial_branch(int a, int b, int order = 0) {
    if (order == 0) order = std::max({a, b, 8});
    PuiseuxBranch br;
    br.components = {TruncSeries::monomial(order, a, Rat(1), "t", true),
                     TruncSeries::monomial(order, b, Rat(1), "t", true)};
    br.mult = std::min(a == 0 ? 1 << 20 : a, b == 0 ? 1 << 20 : b);
    return br;
}

PuiseuxBranch series_pair(const TruncSeries& u, const TruncSeries& v) {
    PuiseuxBranch br;
    br.components = {u, v};
    br.mult = br.computed_mult();
    return br;
}

// Independent oracle: corank of the subalgebra generated by two exact
// polynomials inside polynomial jets of degree <= bound (global delta of a
// parametrized rational affine curve, dim O(C)/C[x(t), y(t)]).
long subalgebra_corank(const UPoly& x, const UPoly& y, int bound) {
    RatMatrix rows;
    int dx = upoly_degree(x), dy = upoly_degree(y);
    for (int a = 0; a * std::max(dx, 1) <= bound; ++a) {
        for (int b = 0; a * std::max(dx, 1) + b * std::max(dy, 1) <= bound; ++b) {
            UPoly prod{Rat(1)};
            for (int i = 0; i < a; ++i) prod = upoly_mul(prod, x);
            for (int i = 0; i < b; ++i) prod = upoly_mul(prod, y);
            if (upoly_degree(prod) > bound) continue;
            std::vector<Rat> row(static_cast<size_t>(bound) + 1, Rat(0));
            for (size_t k = 0; k < prod.size(); ++k) row[k] = prod[k];
            rows.push_back(std::move(row));
        }
    }
    return bound + 1 - static_cast<long>(matrix_rank(rows));
}

} // namespace

TEST_CASE("intersection multiplicities") {
    PuiseuxBranch cusp = monomial_branch(2, 3, 10);
    CHECK(std::get<int>(intersection_multiplicity(cusp, Poly::parse("y", XY))) == 3);

    PuiseuxBranch ramphoid = monomial_branch(5, 2, 10);
    CHECK(std::get<int>(intersection_multiplicity(ramphoid, Poly::parse("x", XY))) == 5);

    auto inf = intersection_multiplicity(cusp, Poly::parse("y^2 - x^3", XY));
    CHECK(std::holds_alternative<InfinityTag>(inf));

    // Inexact components cannot certify a vanishing composition.
    PuiseuxBranch trunc = monomial_branch(2, 3, 10);
    for (auto& s : trunc.components) s = s.as_inexact();
    CHECK_THROWS_AS(intersection_multiplicity(trunc, Poly::parse("y^2 - x^3", XY)),
                    TruncationInsufficient);
}

TEST_CASE("value semigroup of t -> (t^7, t^2)") {
    PuiseuxBranch b = monomial_branch(7, 2, 16);
    SemigroupData sg = value_semigroup(b, 16);
    CHECK(sg.generators == std::vector<long>{2, 7});
    CHECK(sg.gaps == std::vector<long>{1, 3, 5});
    CHECK(sg.conductor == 6);
}

TEST_CASE("value semigroup of a smooth branch") {
    PuiseuxBranch b;
    b.components = {TruncSeries::monomial(8, 1, Rat(1), "t", true), TruncSeries::zero(8, "t", true)};
    b.mult = 1;
    SemigroupData sg = value_semigroup(b, 8);
    CHECK(sg.gaps.empty());
    CHECK(sg.conductor == 0);
    CHECK(sg.generators == std::vector<long>{1});
}

TEST_CASE("value semigroup of the plane cusp") {
    PuiseuxBranch b = monomial_branch(2, 3, 12);
    SemigroupData sg = value_semigroup(b, 12);
    CHECK(sg.gaps == std::vector<long>{1});
    CHECK(sg.conductor == 2);
    CHECK(sg.generators == std::vector<long>{2, 3});
}

TEST_CASE("bound too small is reported") {
    PuiseuxBranch b = monomial_branch(7, 2, 16);
    CHECK_THROWS_AS(value_semigroup(b, 5), BoundTooSmall);
}

TEST_CASE("delta of the cusp is one") {
    PuiseuxBranch b = monomial_branch(2, 3, 12);
    CHECK(delta_point({b}) == 1);
}

TEST_CASE("delta of x^2 - y^{2n+1} is n") {
    for (int n = 1; n <= 6; ++n) {
        PuiseuxBranch b = monomial_branch(2 * n + 1, 2, 4 * n + 4);
        CHECK(delta_point({b}) == n);
        SemigroupData sg = value_semigroup(b, 8 * n + 8);
        CHECK(static_cast<int>(sg.gaps.size()) == n);
    }
}

TEST_CASE("delta of a node is one, with the global parametric oracle") {
    // Local: two smooth branches with distinct tangents.
    TruncSeries t = TruncSeries::monomial(10, 1, Rat(1), "t", true);
    PuiseuxBranch b1 = series_pair(t, t);
    PuiseuxBranch b2 = series_pair(t, -t);
    CHECK(delta_point({b1, b2}) == 1);

    // Global: the affine nodal cubic parametrized by t -> (t^2 - 1, t^3 - t)
    // has a single node, so the subalgebra has codimension 1.
    UPoly x{Rat(-1), Rat(0), Rat(1)};         // t^2 - 1
    UPoly y{Rat(0), Rat(-1), Rat(0), Rat(1)}; // t^3 - t
    CHECK(subalgebra_corank(x, y, 12) == 1);
    CHECK(subalgebra_corank(x, y, 16) == 1);
}

TEST_CASE("delta of a tacnode is two") {
    // y^2 = x^4 + x^5: two smooth branches with contact of order two,
    // v = +- x^2 sqrt(1 + x). The square root comes from Newton iteration.
    const int N = 48;
    TruncSeries t = TruncSeries::monomial(N, 1, Rat(1), "t", true);
    TruncSeries t2 = TruncSeries::monomial(N, 2, Rat(1), "t", true);
    TruncSeries one_plus_t = TruncSeries::constant(N, Rat(1)) + t;
    TruncSeries s = TruncSeries::constant(N, Rat(1));
    for (int it = 0; it < 8; ++it)
        s = (s + one_plus_t * s.inverse()).scaled(Rat(1, 2)).as_inexact();
    TruncSeries v1 = (t2 * s).as_inexact();
    TruncSeries v2 = -v1;
    CHECK(delta_point({series_pair(t, v1), series_pair(t, v2)}) == 2);
}

TEST_CASE("delta of a two-level germ matches the classical branch formula") {
    // (y^2 - x^3)^2 = x^7: two cuspidal branches (delta 1 each) meeting with
    // intersection multiplicity 7, so delta = 1 + 1 + 7 = 9.
    Poly f = Poly::parse("y^4 - 2*x^3*y^2 + x^6 - x^7", XY);
    auto pairs = newton_puiseux_local(f, 48);
    REQUIRE(pairs.size() == 2);
    std::vector<PuiseuxBranch> branches;
    for (auto& [u, v] : pairs) branches.push_back(series_pair(u, v));
    CHECK(delta_point(branches) == 9);
    // Each branch alone is the plane cusp.
    CHECK(delta_point({branches[0]}) == 1);
    CHECK(delta_point({branches[1]}) == 1);
}

TEST_CASE("delta of an A5 germ is three") {
    // y^2 = x^6 + x^7: two smooth branches with contact order three.
    Poly f = Poly::parse("y^2 - x^6 - x^7", XY);
    auto pairs = newton_puiseux_local(f, 48);
    REQUIRE(pairs.size() == 2);
    std::vector<PuiseuxBranch> branches;
    for (auto& [u, v] : pairs) branches.push_back(series_pair(u, v));
    CHECK(delta_point(branches) == 3);
}

TEST_CASE("delta of an ordinary triple point is three") {
    TruncSeries t = TruncSeries::monomial(12, 1, Rat(1), "t", true);
    PuiseuxBranch b1 = series_pair(t, t);
    PuiseuxBranch b2 = series_pair(t, -t);
    PuiseuxBranch b3 = series_pair(t, t.scaled(Rat(2)));
    CHECK(delta_point({b1, b2, b3}) == 3);
}

TEST_CASE("delta formula (p-1)(q-1)/2 for coprime monomial branches") {
    for (int p = 2; p <= 8; ++p) {
        for (int q = p + 1; q <= 9; ++q) {
            if (std::gcd(p, q) != 1) continue;
            PuiseuxBranch b = monomial_branch(q, p, 2 * p * q);
            int expected = (p - 1) * (q - 1) / 2;
            CHECK(delta_point({b}) == expected);
            SemigroupData sg = value_semigroup(b, 2 * p * q);
            CHECK(static_cast<int>(sg.gaps.size()) == expected);
        }
    }
}

TEST_CASE("delta is zero exactly at smooth points") {
    PuiseuxBranch smooth;
    smooth.components = {TruncSeries::monomial(8, 1, Rat(1), "t", true),
                         TruncSeries::monomial(8, 4, Rat(3), "t", true)};
    smooth.mult = 1;
    CHECK(delta_point({smooth}) == 0);
    CHECK(delta_point({monomial_branch(2, 3, 10)}) > 0);
}

TEST_CASE("genus of the normalization") {
    std::vector<SingularPointRecord> recs;
    SingularPointRecord rec;
    rec.point_id = "p0";
    rec.m = 2;
    rec.r = 2;
    rec.delta = 1;
    recs.push_back(rec);
    CHECK(genus_of_normalization(3, recs) == 0); // nodal cubic
    CHECK(genus_of_normalization(1, {}) == 0);   // line

    // 375 cusps on a degree-36 curve.
    std::vector<SingularPointRecord> cps;
    for (int i = 0; i < 375; ++i) {
        SingularPointRecord c;
        c.point_id = "c" + std::to_string(i);
        c.m = 2;
        c.r = 1;
        c.delta = 1;
        cps.push_back(c);
    }
    CHECK(genus_of_normalization(36, cps) == 220);

    // Too much delta for the degree.
    SingularPointRecord big;
    big.delta = 2;
    big.m = 2;
    big.r = 1;
    CHECK_THROWS_AS(genus_of_normalization(3, {big}), NegativeGenus);
}

TEST_CASE("delta stability under jet doubling") {
    // The stabilized corank does not change when computed at a higher order
    // directly.
    PuiseuxBranch b = monomial_branch(3, 7, 40);
    RatMatrix m1 = monomial_pullback_jets({b}, 24);
    RatMatrix m2 = monomial_pullback_jets({b}, 36);
    long c1 = 25 - static_cast<long>(matrix_rank(m1));
    long c2 = 37 - static_cast<long>(matrix_rank(m2));
    CHECK(c1 == c2);
    CHECK(c1 == delta_point({b}));
}
