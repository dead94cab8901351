#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "effap/field.hpp"

using namespace effap;

TEST_CASE("mod-p irreducibility") {
    CHECK(irreducible_mod_p(IntPoly::parse("t^2+1"), 3));
    CHECK(!irreducible_mod_p(IntPoly::parse("t^2+1"), 5));  // t^2+1 = (t+2)(t+3) mod 5
    CHECK(irreducible_mod_p(IntPoly::parse("t^3-5*t^2+1"), 2));
    CHECK(certify_irreducible(IntPoly::parse("t^3-5*t^2+1")).has_value());
    CHECK(!certify_irreducible(IntPoly::parse("t^2-1")).has_value());
    CHECK(!certify_irreducible(IntPoly::parse("t^2-4*t+4")).has_value());
}

TEST_CASE("field arithmetic laws") {
    NumberField K = NumberField::create(IntPoly::parse("t^3-2"));
    auto th = K.theta();
    // theta * theta^2 = 2
    auto t2 = K.mul(th, th);
    auto prod = K.mul(th, t2);
    CHECK(prod == K.from_rat(Rat(2)));
    // theta * theta^-1 = 1
    CHECK(K.mul(th, K.inv(th)) == K.one());

    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long> c(-9, 9);
    auto rq = [&](long den) {
        Rat r(c(rng), den);
        r.canonicalize();
        return r;
    };
    for (int rep = 0; rep < 40; ++rep) {
        NumberField::Element a{rq(1), rq(3), rq(1)};
        NumberField::Element b{rq(1), rq(1), rq(2)};
        NumberField::Element cc{rq(1), rq(1), rq(1)};
        // ring axioms
        CHECK(K.mul(a, K.mul(b, cc)) == K.mul(K.mul(a, b), cc));
        CHECK(K.mul(a, K.add(b, cc)) == K.add(K.mul(a, b), K.mul(a, cc)));
        // (a*b)*b^-1 = a
        if (!K.is_zero(b)) CHECK(K.mul(K.mul(a, b), K.inv(b)) == a);
    }
    CHECK_THROWS_AS(K.inv(K.zero()), DivisionByZero);
}

TEST_CASE("height of rationals is max(|p|,|q|)") {
    // minimal polynomial 2t - 3: alpha = 3/2, H = 3
    Interval h = height_from_minpoly(IntPoly::parse("2*t-3"), 128);
    CHECK(h.is_point());
    CHECK(h.contains(Rat(3)));
    // minimal polynomial t: alpha = 0, H = 1
    Interval h0 = height_from_minpoly(IntPoly({BigInt(0), BigInt(1)}), 128);
    CHECK(h0.contains(Rat(1)));
}

TEST_CASE("height of 2^(1/3) via Mahler measure") {
    Interval h = height_from_minpoly(IntPoly::parse("t^3-2"), 128);
    Interval cubed = h.pow_int(3);
    CHECK(cubed.contains(Rat(2)));
    CHECK(h.width() < Rat(1, 1000000));
    // conjugates share the minimal polynomial, so the enclosure is identical
    Interval h2 = height_from_minpoly(IntPoly::parse("t^3-2"), 128);
    CHECK(h.lo() == h2.lo());
    CHECK(h.hi() == h2.hi());
}

TEST_CASE("im_lower_bound pins and domination") {
    // theta = i: H = 1 exactly (quadratic Mahler measure), d = 2 -> 1/2 * 2^-4 = 1/32
    ApproxTarget t = make_target_by_index(IntPoly::parse("t^2+1"), 1, 96);
    CHECK(!t.is_real);
    Rat lb = im_lower_bound(t);
    CHECK(lb == Rat(1, 32));
    CHECK(lb <= 1);  // |Im i| = 1
    // theta = (1 + i sqrt3)/2: t^2 - t + 1, also 1/32, true |Im| = sqrt(3)/2
    ApproxTarget t2 = make_target_by_index(IntPoly::parse("t^2-t+1"), 1, 96);
    CHECK(im_lower_bound(t2) == Rat(1, 32));
    CHECK(Rat(1, 32) <= Rat(86, 100));
    // real target refuses
    ApproxTarget r = make_target_real_near(IntPoly::parse("t^2-2"), Rat(1), 96);
    CHECK_THROWS_AS(im_lower_bound(r), NotNonReal);
}

TEST_CASE("im_lower_bound below certified |Im| on random non-real polys") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<long> c(-9, 9);
    int done = 0;
    while (done < 50) {
        std::vector<BigInt> v;
        int deg = done % 2 == 0 ? 2 : 3;
        for (int i = 0; i <= deg; ++i) v.emplace_back(c(rng));
        IntPoly f(v);
        if (f.degree() != deg) continue;
        if (!certify_irreducible(f, 200)) continue;
        auto roots = isolate_roots(f, 96);
        size_t idx = roots.size();
        for (size_t i = 0; i < roots.size(); ++i)
            if (!roots[i].is_real && roots[i].box.im.certainly_positive()) idx = i;
        if (idx == roots.size()) continue;
        ApproxTarget t = make_target_by_index(f, idx, 96);
        Rat lb = im_lower_bound(t);
        CHECK(Rat(lb) <= t.root_box.im.abs().lo());
        ++done;
    }
}

TEST_CASE("sum minimal polynomial via certified resultant") {
    // sqrt2 + cbrt2: t^6 - 6t^4 - 4t^3 + 12t^2 - 24t - 4, certifiable mod p
    auto s = sum_min_poly_certified(IntPoly::parse("t^2-2"), IntPoly::parse("t^3-2"));
    REQUIRE(s.has_value());
    CHECK(*s == IntPoly::parse("t^6-6*t^4-4*t^3+12*t^2-24*t-4"));
    // the designated sum is a root: certified containment
    Interval s2 = Interval::sqrt2(160);
    Interval c2 = Interval(Rat(2), 160).nth_root(3);
    CHECK(s->eval(s2 + c2, 160).contains(Rat(0)));

    // sqrt2 + sqrt3 generates a biquadratic field: its minimal polynomial is
    // reducible mod every prime, so no witness can exist
    auto biq = sum_min_poly_certified(IntPoly::parse("t^2-2"), IntPoly::parse("t^2-3"));
    CHECK(!biq.has_value());
}

TEST_CASE("height axioms harness") {
    auto rep = check_height_axioms(40, 12345);
    CHECK(rep.all_hold);
    CHECK(rep.rational_checked == 40);
    CHECK(rep.sum_checked >= 40);
    CHECK(rep.modulus_checked == 40);
}

TEST_CASE("trivial height axiom pins") {
    // H(3/2 + 1/2) = H(2) = 2 <= 2 * 3 * 2
    Interval h32 = height_from_minpoly(IntPoly::parse("2*t-3"), 96);
    Interval h12 = height_from_minpoly(IntPoly::parse("2*t-1"), 96);
    Interval hsum = height_from_minpoly(IntPoly::parse("t-2"), 96);
    CHECK(hsum.hi() <= (Interval(Rat(2), 96) * h32 * h12).lo());
    // |-5/7| = 5/7 >= 1/7 (d = 1)
    CHECK(Rat(5, 7) >= Rat(1, 7));
}

TEST_CASE("target designation") {
    ApproxTarget t = make_target_real_near(IntPoly::parse("t^3-5*t^2+1"), Rat(5), 96);
    CHECK(t.is_real);
    CHECK(t.theta_interval().certainly_gt(Rat(4)));
    CHECK(t.theta_interval().certainly_lt(Rat(6)));
    CHECK(t.height.certainly_ge(Rat(1)));
    t.refine(300);
    CHECK(t.theta_interval().width() <= Rat(1, BigInt(1) << 300));
}
