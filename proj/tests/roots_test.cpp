#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "effap/roots.hpp"

using namespace effap;

TEST_CASE("sturm counts on t^2 - 2") {
    IntPoly f = IntPoly::parse("t^2-2");
    SturmChain s(f);
    CHECK(s.count_all() == 2);
    CHECK(s.count(Rat(0), Rat(2)) == 1);
    CHECK(s.count(Rat(-2), Rat(0)) == 1);
    CHECK(s.count(Rat(2), Rat(3)) == 0);
}

TEST_CASE("isolate real roots of t^2 - 2") {
    auto roots = isolate_real_roots(IntPoly::parse("t^2-2"), 64);
    REQUIRE(roots.size() == 2);
    // +-1.41421356...
    CHECK(roots[0].certainly_lt(Rat(-14142, 10001)));
    CHECK(roots[0].certainly_gt(Rat(-14143, 10000)));
    CHECK(roots[1].contains(Rat(0)) == false);
    Interval s2prod = roots[1] * roots[1];
    CHECK(s2prod.contains(Rat(2)));
    CHECK(roots[1].width() <= Rat(1, BigInt(1) << 64));
}

TEST_CASE("exact rational roots come out as points") {
    IntPoly f = IntPoly::parse("2*t-3");
    auto roots = isolate_real_roots(f, 32);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].is_point());
    CHECK(roots[0].lo() == Rat(3, 2));
    // (t-1)(t-2)(t-3) with exact midpoint hits
    IntPoly g = IntPoly::parse("t-1") * IntPoly::parse("t-2") * IntPoly::parse("t-3");
    auto r3 = isolate_real_roots(g, 40);
    REQUIRE(r3.size() == 3);
    CHECK(r3[0].contains(Rat(1)));
    CHECK(r3[1].contains(Rat(2)));
    CHECK(r3[2].contains(Rat(3)));
}

TEST_CASE("t^3 - 5t^2 + 1 has three real roots, one near 5") {
    IntPoly f = IntPoly::parse("t^3-5*t^2+1");
    auto roots = isolate_real_roots(f, 80);
    REQUIRE(roots.size() == 3);
    CHECK(roots[2].certainly_gt(Rat(4)));
    CHECK(roots[2].certainly_lt(Rat(6)));
    // cross-check with sign changes at integer points
    CHECK(sgn(f.eval(Rat(4))) != sgn(f.eval(Rat(5))));
    CHECK(roots[0].certainly_lt(Rat(0)));
    CHECK(roots[1].certainly_gt(Rat(0)));
}

TEST_CASE("winding number counts roots in rectangles") {
    // t^2 + 1: roots at +-i
    IntPoly f = IntPoly::parse("t^2+1");
    CHECK(winding_number(f, Rat(-1), Rat(1), Rat(1, 2), Rat(2)) == 1);
    CHECK(winding_number(f, Rat(-1), Rat(1), Rat(-2), Rat(-1, 2)) == 1);
    CHECK(winding_number(f, Rat(1, 2), Rat(2), Rat(1, 2), Rat(2)) == 0);
    // box around both roots
    CHECK(winding_number(f, Rat(-2), Rat(2), Rat(-2), Rat(2)) == 2);
    // real root inside a complex box: t - 1
    IntPoly g = IntPoly::parse("t-1");
    CHECK(winding_number(g, Rat(0), Rat(2), Rat(-1), Rat(1)) == 1);
    CHECK(winding_number(g, Rat(2), Rat(3), Rat(-1), Rat(1)) == 0);
}

TEST_CASE("winding rejects roots on the boundary") {
    IntPoly g = IntPoly::parse("t-1");
    CHECK_THROWS_AS(winding_number(g, Rat(1), Rat(2), Rat(-1), Rat(1)), ParameterViolation);
    CHECK_THROWS_AS(winding_number(g, Rat(0), Rat(1), Rat(0), Rat(1)), ParameterViolation);
}

TEST_CASE("isolate_roots on known spectra") {
    // t^2 - 2: two real simple
    auto r1 = isolate_roots(IntPoly::parse("t^2-2"), 48);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].is_real);
    CHECK(r1[1].is_real);
    CHECK(r1[0].multiplicity == 1);

    // (t-1)^2: one box, multiplicity 2
    auto r2 = isolate_roots(IntPoly::parse("t^2-2*t+1"), 48);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].multiplicity == 2);
    CHECK(r2[0].box.re.contains(Rat(1)));

    // t^2 + 1: conjugate pair
    auto r3 = isolate_roots(IntPoly::parse("t^2+1"), 48);
    REQUIRE(r3.size() == 2);
    CHECK(!r3[0].is_real);
    CHECK(r3[0].box.im.certainly_negative());
    CHECK(r3[1].box.im.certainly_positive());
    CHECK(r3[1].box.im.contains(Rat(1)));
    CHECK(r3[1].box.re.contains(Rat(0)));

    // t^3 - 2: one real, one conjugate pair
    auto r4 = isolate_roots(IntPoly::parse("t^3-2"), 48);
    REQUIRE(r4.size() == 3);
    int reals = 0;
    for (const auto& rb : r4) reals += rb.is_real ? 1 : 0;
    CHECK(reals == 1);
}

TEST_CASE("isolate_roots boxes are disjoint and multiplicities sum to degree") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<long> cc(-8, 8);
    for (int rep = 0; rep < 12; ++rep) {
        // build a poly from random small factors to get clustered roots
        IntPoly f = IntPoly::constant(1);
        int deg = 0;
        while (deg < 5) {
            IntPoly lin({BigInt(cc(rng)), BigInt(1)});
            IntPoly quad({BigInt(cc(rng)), BigInt(cc(rng)), BigInt(1)});
            f = rep % 2 == 0 ? f * lin : f * quad;
            deg = f.degree();
        }
        auto roots = isolate_roots(f, 40);
        long msum = 0;
        for (const auto& rb : roots) msum += rb.multiplicity;
        CHECK(msum == f.degree());
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j) CHECK(!roots[i].box.intersects(roots[j].box));
    }
}

TEST_CASE("refinement nests") {
    IntPoly f = IntPoly::parse("t^3-5*t^2+1");
    auto coarse = isolate_roots(f, 32);
    auto fine = isolate_roots(f, 96);
    REQUIRE(coarse.size() == fine.size());
    for (size_t i = 0; i < coarse.size(); ++i) {
        CHECK(coarse[i].box.re.contains_interval(fine[i].box.re));
        CHECK(coarse[i].box.im.contains_interval(fine[i].box.im));
        CHECK(fine[i].box.re.width() <= Rat(1, BigInt(1) << 96));
    }
}

TEST_CASE("max root modulus of t^3 - 5t^2 + 1") {
    Interval m = max_root_modulus(IntPoly::parse("t^3-5*t^2+1"), 64);
    // dominant root ~ 4.9593
    CHECK(m.certainly_gt(Rat(49, 10)));
    CHECK(m.certainly_lt(Rat(5)));
}

TEST_CASE("refine_real_root reaches requested width") {
    IntPoly f = IntPoly::parse("t^2-2");
    Interval b = refine_real_root(f, Interval::make_raw(Rat(1), Rat(2), 16), 200);
    CHECK(b.width() <= Rat(1, BigInt(1) << 200));
    CHECK((b * b).contains(Rat(2)));
}
