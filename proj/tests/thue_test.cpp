#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "effap/thue.hpp"

using namespace effap;

TEST_CASE("residual evaluation") {
    auto b = ThueInstance::bombieri(23, BigInt(-4), BigInt(1));
    CHECK(b.residual(BigInt(-4), BigInt(1)) == 0);
    CHECK(b.residual(BigInt(1), BigInt(0)) == 0);
    CHECK(b.residual(BigInt(0), BigInt(1)) == 0);
    CHECK(b.residual(BigInt(2), BigInt(3)) != 0);

    auto c = ThueInstance::circular(25, BigInt(-2));
    CHECK(c.residual(BigInt(0), BigInt(0)) == 0);
    CHECK(c.residual(BigInt(1), BigInt(0)) == 0);
    CHECK(c.residual(BigInt(-1), BigInt(0)) == 0);
    CHECK(c.residual(BigInt(-2), BigInt(1)) == 0);
    CHECK(c.residual(BigInt(2), BigInt(-1)) == 0);
    CHECK(c.residual(BigInt(3), BigInt(1)) != 0);
}

TEST_CASE("thue bound branch selection and exponents") {
    BigInt giant = BigInt(1) << (1196u * 23u);
    auto big = thue_bound(ThueInstance::bombieri(23, -giant, BigInt(1)));
    CHECK(big.branch == SolutionBound::Branch::LargeA);
    // log2 bound = (29 d^2 / 0.01) * log2|a| exactly here (|a| a power of two, m = 1)
    Rat expect = Rat(29 * 529) * Rat(100) * Rat(1196 * 23);
    CHECK(big.log2_bound.contains(expect));

    auto small = thue_bound(ThueInstance::bombieri(23, BigInt(-4), BigInt(1)));
    CHECK(small.branch == SolutionBound::Branch::SmallA);
    // log2 bound = 2^(4824 d^2) log2(e): enormous but positive
    CHECK(small.log2_bound.certainly_positive());
    long mag = floor_log2_abs(small.log2_bound.lo());
    CHECK(mag >= 4824L * 529 - 2);
    CHECK(mag <= 4824L * 529 + 2);

    CHECK_THROWS_AS(thue_bound(ThueInstance::bombieri(24, BigInt(-4), BigInt(1))), ParameterViolation);
    CHECK_THROWS_AS(thue_bound(ThueInstance::bombieri(23, BigInt(4), BigInt(1))), ParameterViolation);
}

TEST_CASE("borderline threshold is exact") {
    BigInt just_below = (BigInt(1) << (1196u * 23u)) - 1;
    auto s = thue_bound(ThueInstance::bombieri(23, -just_below, BigInt(1)));
    CHECK(s.branch == SolutionBound::Branch::SmallA);
}

TEST_CASE("baker bound") {
    // d=3, H=1, m=1: log2 = 3^120 * log2(e)
    Interval b = baker_bound_log2(3, BigInt(1), BigInt(1));
    Interval expect = Interval::exact_int(big_pow(BigInt(3), 120), 192) * Interval::log2_e(192);
    CHECK(b.intersects(expect));
    // m = 0 convention
    CHECK(baker_bound_log2(3, BigInt(1), BigInt(0)).contains(Rat(0)));
    // doubling H multiplies the exponent by 2^(4d) exactly
    Interval b2 = baker_bound_log2(3, BigInt(2), BigInt(1));
    Interval ratio = b2 / b;
    CHECK(ratio.contains(Rat(1) << 12));
}

TEST_CASE("exhaustive search recovers the known solutions") {
    auto b = ThueInstance::bombieri(23, BigInt(-4), BigInt(1));
    auto sols = exhaustive_search(b, 100);
    auto has = [&](long x, long y) {
        return std::find(sols.begin(), sols.end(), Solution{BigInt(x), BigInt(y)}) != sols.end();
    };
    CHECK(has(-4, 1));
    CHECK(has(1, 0));
    CHECK(has(0, 1));

    auto c = ThueInstance::circular(25, BigInt(-2));
    auto csols = exhaustive_search(c, 100);
    auto chas = [&](long x, long y) {
        return std::find(csols.begin(), csols.end(), Solution{BigInt(x), BigInt(y)}) != csols.end();
    };
    CHECK(chas(0, 0));
    CHECK(chas(1, 0));
    CHECK(chas(-1, 0));
    CHECK(chas(-2, 1));
    CHECK(chas(2, -1));
    // symmetry: solutions come in +- pairs
    for (const auto& [x, y] : csols) CHECK(chas(-static_cast<long>(x.get_si()), -static_cast<long>(y.get_si())));
}

TEST_CASE("scan order and sharding do not matter") {
    auto b = ThueInstance::bombieri(23, BigInt(-4), BigInt(1));
    auto s1 = exhaustive_search(b, 60, RunConfig(), 1);
    auto s4 = exhaustive_search(b, 60, RunConfig(), 4);
    auto sr = exhaustive_search_reversed(b, 60);
    CHECK(s1 == s4);
    CHECK(s1 == sr);
    CHECK(solution_set_hash(s1) == solution_set_hash(s4));

    // negative: no solutions for an unachieved m
    auto none = ThueInstance::bombieri(23, BigInt(-4), BigInt(3));
    auto n1 = exhaustive_search(none, 40);
    auto n2 = exhaustive_search_reversed(none, 40);
    CHECK(n1.empty());
    CHECK(n1 == n2);
}

TEST_CASE("gap chain dominates the closed form") {
    BigInt a = BigInt(1) << (164u * 25u);
    auto g = gap_chain(25, a, BigInt(4), 3);
    CHECK(g.dominates_closed_form);
    CHECK(g.log2_y.size() == 3);
    // n = 1: the chain is just [y1]
    auto g1 = gap_chain(25, a, BigInt(4), 1);
    CHECK(g1.log2_y.size() == 1);
    CHECK(g1.log2_y[0].contains(Rat(2)));

    CHECK_THROWS_AS(gap_chain(25, a, BigInt(3), 3), ParameterViolation);
    CHECK_THROWS_AS(gap_chain(24, a, BigInt(4), 3), ParameterViolation);
    CHECK_THROWS_AS(gap_chain(25, BigInt(8), BigInt(4), 3), ParameterViolation);
}

TEST_CASE("count ledger certification") {
    BigInt a = BigInt(1) << (164u * 25u);
    auto led = count_bound(25, a);
    CHECK(led.hypothesis_ok);
    CHECK(led.bound == 11);
    CHECK(led.arithmetic_certified);

    auto led23 = count_bound(23, a);
    CHECK(!led23.hypothesis_ok);

    BigInt below = (BigInt(1) << (164u * 25u)) - 1;
    auto ledb = count_bound(25, below);
    CHECK(!ledb.hypothesis_ok);

    for (unsigned d : {27u, 99u}) {
        BigInt ad = BigInt(1) << (164u * d);
        auto l = count_bound(d, ad);
        CHECK(l.hypothesis_ok);
        CHECK(l.arithmetic_certified);
    }
}

TEST_CASE("verify_within_bound") {
    auto b = ThueInstance::bombieri(23, BigInt(-4), BigInt(1));
    auto sols = exhaustive_search(b, 100);
    auto bound = thue_bound(b);
    CHECK(verify_within_bound(b, sols, bound));
    CHECK(verify_within_bound(b, {}, bound));  // vacuous

    // synthetic violation against a tiny synthetic bound
    SolutionBound tiny;
    tiny.log2_bound = Interval(Rat(10), 128);
    std::vector<Solution> fake{{BigInt(2048), BigInt(0)}};
    CHECK(!verify_within_bound(b, fake, tiny));
}
