#pragma once

#include <string>
#include <utility>
#include <vector>

#include "effap/measure.hpp"

namespace effap {

enum class ThueForm { Bombieri, Circular };

// Bombieri: x^d - a x^(d-1) y + y^d = m.
// Circular: (x - a y)(x^2 + y^2)^((d-1)/2) - y^d = x + y (rhs fixed, m unused).
struct ThueInstance {
    ThueForm form = ThueForm::Bombieri;
    unsigned d = 0;
    BigInt a;
    BigInt m;

    static ThueInstance bombieri(unsigned d, const BigInt& a, const BigInt& m);
    static ThueInstance circular(unsigned d, const BigInt& a);

    // lhs - rhs, exactly; a solution iff zero
    BigInt residual(const BigInt& x, const BigInt& y) const;
};

struct SolutionBound {
    enum class Branch { LargeA, SmallA } branch = Branch::SmallA;
    Interval log2_bound;  // log2 of the max{|x|,|y|} bound
};

// Theorem-backed bound for the Bombieri instance; branch chosen by the exact
// comparison |a| >= 2^(1196 d).
SolutionBound thue_bound(const ThueInstance& inst, const RunConfig& cfg = RunConfig());

// log2 of exp(d^(40d) H^(4d)) |m|^(d^(40d) H^(4d)); [0,0] for m = 0.
Interval baker_bound_log2(unsigned d, const BigInt& H_coeff, const BigInt& m, unsigned bits = 192);

using Solution = std::pair<BigInt, BigInt>;

// All integer solutions with max(|x|,|y|) <= box, exact evaluation,
// lex-sorted. The x-range is sharded across threads and merged
// deterministically.
std::vector<Solution> exhaustive_search(const ThueInstance& inst, long box,
                                        const RunConfig& cfg = RunConfig(), unsigned threads = 4);
// anti-lex scan order, re-sorted: the order-independence oracle
std::vector<Solution> exhaustive_search_reversed(const ThueInstance& inst, long box,
                                                 const RunConfig& cfg = RunConfig());
std::string solution_set_hash(const std::vector<Solution>& sols);

struct GapChain {
    unsigned d = 0;
    BigInt a;
    std::vector<Interval> log2_y;  // certified lower bounds, log2 scale
    std::vector<LedgerEntry> closed_form_checks;
    bool dominates_closed_form = false;
};

// y_{n+1} >= (1/9)(|a|/4)^(d-2) y_n^(d-2), checked against the closed form
// 4^((d-4)^(n-1)) (|a|/4)^((d-2)^(n-1)) in exponent form.
GapChain gap_chain(unsigned d, const BigInt& a, const BigInt& y1, int n);

struct CountLedger {
    unsigned d = 0;
    BigInt a;
    bool hypothesis_ok = false;  // d >= 25 odd and |a| >= 2^(164 d), exact
    int bound = 11;
    std::vector<LedgerEntry> ledger;
    bool arithmetic_certified = false;
};

CountLedger count_bound(unsigned d, const BigInt& a, const RunConfig& cfg = RunConfig());

// every solution satisfies log2 max(|x|,|y|) <= log2_bound, certified
bool verify_within_bound(const ThueInstance& inst, const std::vector<Solution>& sols,
                         const SolutionBound& bound);

}  // namespace effap
