#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "effap/families.hpp"

using namespace effap;

TEST_CASE("hypothesis pins") {
    // Q = t^2, P = 1, a = 5: rhs = 3, margin 2
    FamilySpec f = make_family(IntPoly::constant(1), IntPoly::parse("t^2"), BigInt(5));
    auto h = hypothesis_check(f);
    CHECK(h.holds);
    CHECK(h.margin.contains(Rat(2)));

    // a = 2 fails (2 < 3)
    FamilySpec g = make_family(IntPoly::constant(1), IntPoly::parse("t^2"), BigInt(2));
    CHECK(!hypothesis_check(g).holds);

    // Q = (t^2+1)^11, P = -1, a = 6: R = 1, rhs = 5
    IntPoly q11 = IntPoly::constant(1);
    for (int i = 0; i < 11; ++i) q11 = q11 * IntPoly::parse("t^2+1");
    FamilySpec h11 = make_family(IntPoly::constant(-1), q11, BigInt(6));
    auto r = hypothesis_check(h11);
    CHECK(r.holds);
    CHECK(r.margin.contains(Rat(1)));
}

TEST_CASE("family construction validations") {
    CHECK_THROWS_AS(make_family(IntPoly::zero(), IntPoly::parse("t^2"), BigInt(5)), ParameterViolation);
    CHECK_THROWS_AS(make_family(IntPoly::constant(1), IntPoly::parse("2*t^2"), BigInt(5)),
                    ParameterViolation);  // not monic
    CHECK_THROWS_AS(make_family(IntPoly::parse("t"), IntPoly::parse("t^2"), BigInt(5)),
                    ParameterViolation);  // gcd(P, Q) != 1
    CHECK_THROWS_AS(make_family(IntPoly::parse("t^2+1"), IntPoly::parse("t^2"), BigInt(5)),
                    ParameterViolation);  // deg P >= deg Q
}

TEST_CASE("portrait of t^3 - 5t^2 + 1") {
    FamilySpec f = make_family(IntPoly::constant(1), IntPoly::parse("t^2"), BigInt(5));
    CHECK(f.A() == IntPoly::parse("t^3-5*t^2+1"));
    RootPortrait p = localize_roots(f, 64);
    REQUIRE(p.small_roots.size() == 2);
    long cnt = 0;
    for (const auto& rb : p.small_roots) {
        cnt += rb.multiplicity;
        CHECK(rb.box.abs(64).certainly_lt(Rat(1)));  // R + 1 = 1
    }
    CHECK(cnt == 2);
    CHECK(p.xi_box.certainly_gt(Rat(4)));
    CHECK(p.xi_box.certainly_lt(Rat(6)));
    // the two unit-disk roots sit at -0.4291737298... and 0.4698322886...
    Rat r1 = parse_rat("-429173729837/1000000000000");
    Rat r2 = parse_rat("469832288663/1000000000000");
    CHECK(abs(p.small_roots[0].box.re.mid() - r1) < Rat(1, 1000000000));
    CHECK(abs(p.small_roots[1].box.re.mid() - r2) < Rat(1, 1000000000));
    // gap = 1/xi^2 ~ 0.0406585
    CHECK(p.gap.certainly_gt(Rat(4, 100)));
    CHECK(p.gap.certainly_lt(Rat(41, 1000)));
    // height sandwich
    CHECK(p.xi_height.lo() >= p.sandwich_lo.lo());
    CHECK(p.xi_height.hi() <= p.sandwich_hi.hi());
}

TEST_CASE("portrait with non-real small roots: (t-6)(t^2+1)+1") {
    FamilySpec f = make_family(IntPoly::constant(1), IntPoly::parse("t^2+1"), BigInt(6));
    RootPortrait p = localize_roots(f, 48);
    REQUIRE(p.small_roots.size() == 2);
    for (const auto& rb : p.small_roots) {
        CHECK(!rb.is_real);
        CHECK(rb.box.abs(48).certainly_lt(Rat(2)));
    }
    CHECK(p.xi_box.certainly_gt(Rat(5)));
    CHECK(p.xi_box.certainly_lt(Rat(7)));
}

TEST_CASE("hypothesis violation blocks localization") {
    FamilySpec g = make_family(IntPoly::constant(1), IntPoly::parse("t^2"), BigInt(2));
    CHECK_THROWS_AS(localize_roots(g, 48), HypothesisViolation);
}

TEST_CASE("xi gap identity agrees with the direct enclosure") {
    FamilySpec f = make_family(IntPoly::constant(1), IntPoly::parse("t^2"), BigInt(5));
    Interval xi = locate_xi(f, 128);
    Interval g = xi_gap(f, xi, 128);
    RootPortrait p = localize_roots(f, 64);
    CHECK(g.intersects(p.gap));
    // xi - 5 = -1/xi^2 exactly
    Interval lhs = (xi - Interval(Rat(5), 128)).abs();
    CHECK(lhs.intersects(g));
}

TEST_CASE("gap bounds bracket the true gap") {
    FamilySpec f = make_family(IntPoly::constant(1), IntPoly::parse("t^2"), BigInt(5));
    RootPortrait p = localize_roots(f, 96);
    GapBounds gb = gap_bounds(f, p);
    // lower = 2^-(d + d0 - 1) |xi|^-(d - d0 - 1) = (1/4) xi^-2: strict margin
    CHECK(p.gap.lo() > gb.lower.hi());
    CHECK(p.gap.lo() > gb.lower_sharp.lo() * Rat(99, 100));
    // upper = L(P)|xi|^0/(|xi| - 0)^2 = xi^-2: equality here, consistency only
    CHECK(p.gap.lo() <= gb.upper.hi());
    CHECK(gb.upper.hi() <= gb.upper_loose.hi());
    // d0 = 0 reduction: upper_loose = L(P) 2^(d-1) |xi|^-(d-1)
    Interval expect = Interval(Rat(4), 96) * p.xi_box.abs().pow_int(-2);
    CHECK(gb.upper_loose.intersects(expect));
}

TEST_CASE("gap bounds precondition") {
    // tiny a: |xi| fails > max(1, 2R, 2 L(P)) .. build portrait with a = 3 (hypothesis holds, margin 0)
    FamilySpec f = make_family(IntPoly::constant(1), IntPoly::parse("t^2"), BigInt(3));
    auto h = hypothesis_check(f);
    if (h.holds) {
        RootPortrait p = localize_roots(f, 48);
        // |xi| ~ 2.89 > max(1, 0, 2) holds here, so force the precondition with L(P) large
        CHECK_NOTHROW(gap_bounds(f, p));
    }
    FamilySpec big = make_family(IntPoly::constant(9), IntPoly::parse("t^2"), BigInt(13));
    RootPortrait pb = localize_roots(big, 48);
    // |xi| ~ 12.94 < 2 L(P) = 18
    CHECK_THROWS_AS(gap_bounds(big, pb), PreconditionXiTooSmall);
}

TEST_CASE("abc family constructor") {
    // duplicate quadratic pairs rejected
    std::vector<std::pair<BigInt, BigInt>> dup(11, {BigInt(0), BigInt(1)});
    CHECK_THROWS_AS(abc_family(BigInt(10), {}, dup, 1), ParameterViolation);

    // (0,1), ..., (0,11): valid d = 23 family with R = sqrt(11)
    std::vector<std::pair<BigInt, BigInt>> quads;
    for (long c = 1; c <= 11; ++c) quads.push_back({BigInt(0), BigInt(c)});
    FamilySpec f = abc_family(BigInt(10), {}, quads, 1);
    CHECK(f.d == 23);
    CHECK((f.R * f.R).contains(Rat(11)));
    CHECK(hypothesis_check(f).holds);

    // m = 22 integer shifts: R = 21
    std::vector<BigInt> shifts;
    for (long s = 0; s <= 21; ++s) shifts.emplace_back(s);
    FamilySpec g = abc_family(BigInt(50), shifts, {}, 1);
    CHECK(g.d == 23);
    CHECK(g.R.contains(Rat(21)));

    // nonnegative discriminant rejected
    CHECK_THROWS_AS(abc_family(BigInt(10), {}, {{BigInt(2), BigInt(1)}}, 1), ParameterViolation);
    // m + 2n < 22 rejected
    CHECK_THROWS_AS(abc_family(BigInt(10), {BigInt(0)}, {}, 1), ParameterViolation);
}

TEST_CASE("irreducibility certificates") {
    FamilySpec f = make_family(IntPoly::constant(1), IntPoly::parse("t^2"), BigInt(5));
    auto c = irreducibility_certificate(f);
    CHECK(c.cert.certified());

    // t^23 - 4 t^22 + 1: hypothesis holds with a = 4, R = 0 (4 >= 3)
    FamilySpec b = make_family(IntPoly::constant(1), IntPoly::monomial(BigInt(1), 22), BigInt(4));
    auto cb = irreducibility_certificate(b);
    CHECK(cb.hypothesis_holds);
    CHECK(cb.cert.certified());
}

TEST_CASE("family target carries the sandwich height") {
    FamilySpec f = make_family(IntPoly::constant(1), IntPoly::parse("t^2"), BigInt(5));
    ApproxTarget t = family_target(f, 96);
    CHECK(t.is_real);
    CHECK(t.degree() == 3);
    CHECK(t.height.certainly_ge(Rat(1)));
    // R = 0: the sandwich pins H = |xi|^(1/3); Mahler agrees
    Interval mahler = height_from_minpoly(f.A(), 96);
    CHECK(t.height.intersects(mahler));
}
