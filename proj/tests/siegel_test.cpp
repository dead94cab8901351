#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "effap/siegel.hpp"
#include "effap/families.hpp"

using namespace effap;

namespace {

ApproxTarget target_d3() { return make_target_real_near(IntPoly::parse("t^3-5*t^2+1"), Rat(5), 96); }

}  // namespace

TEST_CASE("epsilon spec parsing and enclosure") {
    EpsilonSpec r = EpsilonSpec::parse("1/2");
    CHECK(r.is_rational());
    CHECK(r.interval(64).is_point());
    EpsilonSpec s = EpsilonSpec::parse("sqrt2-1");
    Interval si = s.interval(128);
    CHECK(si.certainly_gt(Rat(41421, 100000)));
    CHECK(si.certainly_lt(Rat(41422, 100000)));
}

TEST_CASE("floor helpers decide exactly") {
    // delta = (3 + 1/2)/2 = 7/4, k = 2: floor(7/2) = 3
    CHECK(floor_delta_k(3, 1, EpsilonSpec::rational(Rat(1, 2)), 2) == 3);
    // irrational eps: delta*k = (23 + sqrt2 - 1)*1/11
    CHECK(floor_delta_k(23, 10, EpsilonSpec::sqrt2_minus_one(), 1) == 2);
    CHECK(floor_eps_k_plus_ed(3, 1, EpsilonSpec::rational(Rat(1, 2)), 2) == 4);
}

TEST_CASE("vanishing system shape at d=3, e=1, k=2") {
    ApproxTarget t = target_d3();
    Interval delta(Rat(7, 4), 128);
    SiegelSystem sys = build_vanishing_system(t, 2, 1, delta);
    CHECK(sys.D == 3);
    CHECK(sys.N == 8);
    CHECK(sys.M == 2);
    CHECK(sys.mu == Rat(3));  // 3*2/(8-6)
    CHECK(sys.expanded.size() == 6);
    CHECK(sys.height_bound.certainly_ge(Rat(1)));
}

TEST_CASE("parameter violation when N <= d*k") {
    ApproxTarget t = target_d3();
    // delta = 1 -> D = k, N = (k+1)*2 <= 3k for k >= 2
    CHECK_THROWS_AS(build_vanishing_system(t, 2, 1, Interval(Rat(1), 128)), ParameterViolation);
}

TEST_CASE("small solution on the rational toy system") {
    // K = Q, single form x1 + 2 x2 = 0, bound (sqrt(2)*2)^1
    SiegelSystem sys;
    sys.field = NumberField::create(IntPoly::parse("t-1"));
    sys.k = 1;
    sys.e = 1;
    sys.D = 0;
    sys.M = 1;
    sys.N = 2;
    sys.mu = Rat(1);
    sys.height_bound = Interval(Rat(2), 128);
    sys.forms = {{sys.field.from_rat(Rat(1)), sys.field.from_rat(Rat(2))}};
    sys.expanded = {{BigInt(1), BigInt(2)}};
    IntVec v = small_solution(sys, sys.small_vector_bound());
    CHECK(v == IntVec{BigInt(2), BigInt(-1)});
    CHECK(max_norm(v) == 2);
    // oracle agreement
    auto box = box_search_annihilator(sys.expanded, 2, 2);
    REQUIRE(box.has_value());
    CHECK(*box == v);

    // an identically-zero form admits a unit vector
    SiegelSystem zsys = sys;
    zsys.forms = {{zsys.field.zero(), zsys.field.zero()}};
    zsys.expanded = {{BigInt(0), BigInt(0)}};
    IntVec u = small_solution(zsys, Interval(Rat(2), 128));
    CHECK(max_norm(u) == 1);
}

TEST_CASE("y_primitivize") {
    // P = (y+1) x: Q = y+1, P~ = x
    BiPoly p;
    p.set_coeff(1, 0, 1);
    p.set_coeff(1, 1, 1);
    auto [tilde, Q] = y_primitivize(p);
    CHECK(Q == IntPoly::parse("t+1"));
    BiPoly justx;
    justx.set_coeff(1, 0, 1);
    CHECK(tilde == justx);

    // already y-primitive: Q = 1
    BiPoly q;
    q.set_coeff(0, 1, 1);
    q.set_coeff(1, 0, 2);
    auto [t2, Q2] = y_primitivize(q);
    CHECK(Q2 == IntPoly::constant(1));
    CHECK(t2 == q);

    // integer content folds into Q
    BiPoly c;
    c.set_coeff(1, 0, 6);
    c.set_coeff(0, 0, 4);
    auto [t3, Q3] = y_primitivize(c);
    CHECK(Q3 == IntPoly::constant(2));
    CHECK(t3.coeff(1, 0) == 3);
}

TEST_CASE("y_primitivize round trip on random products") {
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int rep = 0; rep < 40; ++rep) {
        IntPoly qy({BigInt(c(rng)), BigInt(c(rng)), BigInt(1)});  // monic quadratic in y
        BiPoly r;
        for (int t = 0; t < 6; ++t)
            r.set_coeff(static_cast<unsigned>(t % 3), static_cast<unsigned>(t / 3), c(rng));
        if (r.is_zero()) continue;
        // make r y-primitive first
        auto [rp, rQ] = y_primitivize(r);
        (void)rQ;
        BiPoly prod = BiPoly::from_y_poly(qy) * rp;
        auto [back, Q] = y_primitivize(prod);
        CHECK((Q == qy || Q == -qy));
        CHECK(back == rp);
        // the Gelfond route: size(P~) <= 2^e size(P)
        BigInt lhs = back.size();
        BigInt rhs = (BigInt(1) << static_cast<unsigned>(std::max(prod.y_degree(), 0))) * prod.size();
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("aux poly at d=3: exact vanishing, primitivity, size bound") {
    ApproxTarget t = target_d3();
    for (unsigned k : {1u, 2u}) {
        AuxPoly aux = construct_aux_poly(t, k, 1, EpsilonSpec::rational(Rat(1, 2)));
        CHECK(verify_vanishing(t.field, aux.P, k));
        IntPoly g = y_content(aux.P);
        CHECK(g.degree() == 0);
        CHECK(abs(g.lead()) == 1);
        CHECK(Rat(aux.P.size()) <= aux.size_bound.hi());
        CHECK(aux.P.x_degree() <= static_cast<int>(aux.D));
        CHECK(aux.P.y_degree() <= static_cast<int>(aux.e));
        CHECK(!aux.vanishing_hash.empty());
    }
}

TEST_CASE("aux poly determinism") {
    ApproxTarget t = target_d3();
    AuxPoly a1 = construct_aux_poly(t, 2, 1, EpsilonSpec::rational(Rat(1, 2)));
    AuxPoly a2 = construct_aux_poly(t, 2, 1, EpsilonSpec::rational(Rat(1, 2)));
    CHECK(a1.P == a2.P);
    CHECK(a1.vanishing_hash == a2.vanishing_hash);
}

TEST_CASE("aux polys across random small families") {
    std::mt19937_64 rng(79);
    std::uniform_int_distribution<long> ashift(5, 9);
    int built = 0;
    for (int rep = 0; rep < 8 && built < 5; ++rep) {
        unsigned d = 3 + static_cast<unsigned>(rep % 3);
        IntPoly Q = IntPoly::monomial(BigInt(1), d - 1);
        FamilySpec fam = make_family(IntPoly::constant(1), Q, BigInt(ashift(rng)));
        if (!hypothesis_check(fam).holds) continue;
        ApproxTarget t = family_target(fam, 96);
        unsigned e = 1 + static_cast<unsigned>(rep % 2);
        if (e >= d) e = d - 1;
        unsigned k = 1 + static_cast<unsigned>(rep % 3);
        AuxPoly aux = construct_aux_poly(t, k, e, EpsilonSpec::rational(Rat(1, 2)));
        CHECK(verify_vanishing(t.field, aux.P, k));
        CHECK(Rat(aux.P.size()) <= aux.size_bound.hi());
        ++built;
    }
    CHECK(built >= 5);
}
