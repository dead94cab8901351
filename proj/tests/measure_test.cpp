#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "effap/measure.hpp"

using namespace effap;

TEST_CASE("derive_params exact rational case") {
    MeasureParams p = derive_params(3, 1, EpsilonSpec::rational(Rat(1, 2)), 128);
    CHECK(p.delta.contains(Rat(7, 4)));
    CHECK(p.alpha.contains(Rat(21, 2)));
    CHECK(p.beta.contains(Rat(63, 4)));
    CHECK(p.gamma.contains(Rat(1, 2)));
    CHECK(p.delta.is_point());
}

TEST_CASE("derive_params with sqrt2 - 1 at d=23, e=10") {
    MeasureParams p = derive_params(23, 10, EpsilonSpec::sqrt2_minus_one(), 256);
    CHECK(p.delta.certainly_gt(Rat(2128, 1000)));
    CHECK(p.delta.certainly_lt(Rat(2129, 1000)));
}

TEST_CASE("derive_params violations") {
    CHECK_THROWS_AS(derive_params(3, 3, EpsilonSpec::rational(Rat(1, 2)), 128), ParameterViolation);
    CHECK_THROWS_AS(derive_params(3, 1, EpsilonSpec::rational(Rat(2)), 128), ParameterViolation);
    CHECK_THROWS_AS(derive_params(2, 1, EpsilonSpec::rational(Rat(1, 2)), 128), ParameterViolation);
}

TEST_CASE("kappa_hat fixtures") {
    // d = 23, d0 = 0: inside (22.93, 22.94)
    Interval kh = worksheet_kappa_hat(Rat(23), 0, 256);
    CHECK(kh.certainly_gt(Rat(2293, 100)));
    CHECK(kh.certainly_lt(Rat(2294, 100)));

    // asymptote: within 1e-3 of 55/14 (4 + sqrt2) at d = 1e6
    Interval kh6 = worksheet_kappa_hat(Rat(1000000), 0, 256);
    Interval limit = Interval(Rat(55, 14), 256) * (Interval(Rat(4), 256) + Interval::sqrt2(256));
    Interval diff = (kh6 - limit).abs();
    CHECK(diff.certainly_lt(Rat(1, 1000)));
    CHECK(limit.certainly_gt(Rat(212701, 10000)));
    CHECK(limit.certainly_lt(Rat(212702, 10000)));
}

TEST_CASE("kappa_hat monotonically decreasing on a grid") {
    Rat prev_lo;
    bool first = true;
    for (long d : {23L, 25L, 30L, 50L, 100L, 1000L, 100000L}) {
        Interval kh = worksheet_kappa_hat(Rat(d), 0, 256);
        if (!first) CHECK(kh.hi() < prev_lo);
        prev_lo = kh.lo();
        first = false;
    }
}

TEST_CASE("epsilon0 converges to sqrt2 - 1") {
    Interval e0 = epsilon0(Rat(1000000), 256);
    Interval target = Interval::sqrt2(256) - Interval(Rat(1), 256);
    CHECK((e0 - target).abs().certainly_lt(Rat(1, 100000)));
    // and epsilon0(3) is the maximizer near 0.3798
    Interval e3 = epsilon0(Rat(3), 256);
    CHECK(e3.certainly_gt(Rat(37, 100)));
    CHECK(e3.certainly_lt(Rat(39, 100)));
}

TEST_CASE("compute_measure: t^3 - 5t^2 + 1 anchored at 5/1 is NotApplicable") {
    ApproxTarget t = make_target_real_near(IntPoly::parse("t^3-5*t^2+1"), Rat(5), 96);
    auto out = compute_measure(t, 1, EpsilonSpec::rational(Rat(1, 2)), BigInt(5), BigInt(1));
    REQUIRE(std::holds_alternative<NotApplicable>(out));
    // regression pin: log2(Lambda) ~ log2(2e-8) ~ -25.6
    Interval l = std::get<NotApplicable>(out).log2_Lambda;
    CHECK(l.certainly_lt(Rat(-20)));
    CHECK(l.certainly_gt(Rat(-30)));
}

TEST_CASE("compute_measure: far anchor forces NotApplicable") {
    ApproxTarget t = make_target_real_near(IntPoly::parse("t^3-5*t^2+1"), Rat(5), 96);
    auto out = compute_measure(t, 1, EpsilonSpec::rational(Rat(1, 2)), BigInt(50), BigInt(1));
    CHECK(std::holds_alternative<NotApplicable>(out));
}

TEST_CASE("compute_measure produces a certified measure on a d=12 family") {
    // A = t^12 - 2^21 t^11 + 1 with e = 10: Lambda > 1
    FamilySpec f = make_family(IntPoly::constant(1), IntPoly::monomial(BigInt(1), 11),
                               BigInt(1) << 21);
    ApproxTarget t = family_target(f, 128);
    auto out = compute_measure(t, 10, EpsilonSpec::rational(Rat(2, 5)), f.a, BigInt(1));
    REQUIRE(std::holds_alternative<MeasureResult>(out));
    const auto& res = std::get<MeasureResult>(out);
    CHECK(res.anchor.log2_Lambda.certainly_positive());
    CHECK(res.kappa.certainly_gt(Rat(10)));
    CHECK(res.kappa.certainly_lt(Rat(400)));
    CHECK(res.log2_C.certainly_positive());

    // the produced measure validates on convergents
    auto val = check_measure_on_convergents(t, res.log2_C, res.kappa, 10, 4096);
    CHECK(val.min_slack_ge_1);
}

TEST_CASE("corollary constants: bombieri d=23, eta=1/20") {
    auto c = corollary_constants(CorollaryVariant::Bombieri, 23, Rat(1, 20));
    CHECK(c.kappa_hat_below_2294);
    CHECK(c.kappa.certainly_lt(Rat(2299, 100)));
    // a0 <= 2^(1196*23): exponent check with the +1 absorbed
    CHECK(c.log2_a0.hi() + 1 <= Rat(1196 * 23));
    CHECK(c.C_exp_two == Rat(84) * 529);
    CHECK(c.C_exp_a == Rat(28) * 529);
}

TEST_CASE("corollary constants: circular d=25, eta=14/25") {
    auto c = corollary_constants(CorollaryVariant::Circular, 25, Rat(14, 25));
    CHECK(c.kappa_hat_below_2294);
    CHECK(c.kappa.certainly_lt(Rat(47, 2)));  // kappa < 23.5
    CHECK(c.log2_a0.hi() + 1 <= Rat(164 * 25));
    CHECK(c.C_exp_two == Rat(94) * 625);
}

TEST_CASE("corollary parameter gates") {
    CHECK_THROWS_AS(corollary_constants(CorollaryVariant::Bombieri, 22, Rat(1, 20)), ParameterViolation);
    CHECK_THROWS_AS(corollary_constants(CorollaryVariant::Circular, 26, Rat(1, 2)), ParameterViolation);
    CHECK_THROWS_AS(corollary_constants(CorollaryVariant::Bombieri, 23, Rat(0)), ParameterViolation);
}

TEST_CASE("worksheet on the corollary 4.3 shape certifies above a0") {
    // bombieri family at d = 23 with |a| = 2^(1196*23) >= a0
    FamilySpec f = make_family(IntPoly::constant(1), IntPoly::monomial(BigInt(1), 22),
                               BigInt(1) << (1196u * 23u));
    Worksheet w = effective_lower_worksheet(f, Rat(1, 20));
    CHECK(w.kappa_hat.certainly_gt(Rat(2293, 100)));
    CHECK(w.kappa_hat.certainly_lt(Rat(2294, 100)));
    CHECK(w.chain_all_pass);
    CHECK(w.kappa_claim_certified);
    CHECK(!w.below_a0);
    CHECK(w.lambda.certainly_lt(Rat(2)));
    REQUIRE(w.kappa_a.has_value());
    CHECK(w.kappa_a->hi() <= w.kappa.hi());
}

TEST_CASE("worksheet below a0 refuses the kappa claim") {
    FamilySpec f = make_family(IntPoly::constant(1), IntPoly::monomial(BigInt(1), 22), BigInt(4));
    Worksheet w = effective_lower_worksheet(f, Rat(1, 20));
    CHECK(!w.kappa_claim_certified);
    CHECK(w.below_a0);
    // the a-independent chain entries still pass
    for (const auto& le : w.ledger)
        if (le.name == "menatarms" || le.name == "feetofclay" || le.name == "guardsguards")
            CHECK(le.pass);
}

TEST_CASE("worksheet hypothesis gates") {
    // d = 25 with d0 = 1 violates d >= 2.13 d0 + 23 = 25.13
    IntPoly Q = IntPoly::monomial(BigInt(1), 24);
    FamilySpec f = make_family(IntPoly::parse("t+3"), Q, BigInt(100));
    CHECK_THROWS_AS(effective_lower_worksheet(f, Rat(1, 20)), HypothesisViolation);
    FamilySpec g = make_family(IntPoly::constant(1), IntPoly::monomial(BigInt(1), 22), BigInt(4));
    CHECK_THROWS_AS(effective_lower_worksheet(g, Rat(0)), HypothesisViolation);
}

TEST_CASE("liouville pairs validate on convergents") {
    // sqrt(2): kappa = 2 with the explicit constant
    ApproxTarget s2 = make_target_real_near(IntPoly::parse("t^2-2"), Rat(3, 2), 128);
    auto [log2C, kappa] = liouville_pair(s2, 128);
    auto v = check_measure_on_convergents(s2, log2C, Interval(kappa, 128), 20, 2048);
    CHECK(v.min_slack_ge_1);
    CHECK(v.convergents.size() == 20);
    // a kappa above the Liouville exponent stays valid (q >= 1)
    auto v3 = check_measure_on_convergents(s2, log2C, Interval(Rat(3), 128), 20, 2048);
    CHECK(v3.min_slack_ge_1);

    // negative control: kappa < 2 with C = 1 fails on sqrt 2
    auto bad = check_measure_on_convergents(s2, Interval(Rat(0), 128), Interval(Rat(3, 2), 128), 20, 2048);
    CHECK(!bad.min_slack_ge_1);
    CHECK(bad.min_slack_log2.certainly_lt(Rat(0)));

    // the literal (C=1, kappa=3) pair also fails at the first convergent 1/1
    auto c13 = check_measure_on_convergents(s2, Interval(Rat(0), 128), Interval(Rat(3), 128), 3, 2048);
    CHECK(!c13.min_slack_ge_1);
}

TEST_CASE("liouville on the d=3 fixture") {
    ApproxTarget t = make_target_real_near(IntPoly::parse("t^3-5*t^2+1"), Rat(5), 128);
    auto [log2C, kappa] = liouville_pair(t, 128);
    CHECK(kappa == Rat(3));
    auto v = check_measure_on_convergents(t, log2C, Interval(kappa, 128), 30, 4096);
    CHECK(v.min_slack_ge_1);
}

TEST_CASE("materialization honors the memory cap") {
    BigInt a0 = materialize_pow2_upper(Interval(Rat(100), 128), 1 << 20);
    CHECK(a0 == BigInt(1) << 100);
    CHECK_THROWS_AS(materialize_pow2_upper(Interval(Rat(BigInt(1) << 40), 128), 1 << 20),
                    ResourceExhausted);
}

TEST_CASE("full bignum pipeline: corollary 4.3 instance certifies kappa <= 22.99") {
    // d = 23, a = 2^(1196*23), p0 = a, q0 = 1, e = 10, eps = sqrt2 - 1
    FamilySpec f = make_family(IntPoly::constant(1), IntPoly::monomial(BigInt(1), 22),
                               BigInt(1) << (1196u * 23u));
    ApproxTarget t = family_target(f, 128);
    RunConfig cfg;
    cfg.prec_cap = 1u << 21;
    auto out = compute_measure(t, 10, EpsilonSpec::sqrt2_minus_one(), f.a, BigInt(1), cfg);
    REQUIRE(std::holds_alternative<MeasureResult>(out));
    const auto& res = std::get<MeasureResult>(out);
    CHECK(res.anchor.log2_Lambda.certainly_positive());
    CHECK(res.kappa.hi() <= Rat(2299, 100));
    CHECK(res.kappa.certainly_gt(Rat(22)));
    // C stays within the paper's corollary constants: log2 C <= 84 d^2 + 28 d^2 log2|a|
    Rat cap = Rat(84 * 529) + Rat(28 * 529) * Rat(1196 * 23);
    CHECK(res.log2_C.hi() <= cap);
}
