#pragma once

#include <utility>
#include <vector>

#include "effap/field.hpp"
#include "effap/roots.hpp"

namespace effap {

// The parametric family A(t) = (t - a) Q(t) + P(t) with Q monic and
// gcd(P, Q) = 1 (nonzero resultant, checked exactly).
struct FamilySpec {
    IntPoly P;
    IntPoly Q;
    BigInt a;
    unsigned d = 0;      // deg A = deg Q + 1
    unsigned d0 = 0;     // deg P
    BigInt LP;           // length of P
    BigInt b;            // leading coefficient of P
    Interval R;          // max root modulus of Q
    Interval R_prime;    // max root modulus of P (0 when d0 = 0)

    IntPoly A() const;
};

FamilySpec make_family(const IntPoly& P, const IntPoly& Q, const BigInt& a,
                       const RunConfig& cfg = RunConfig());

// (t-a) * prod (t - a_i) * prod (t^2 + b_j t + c_j) +- 1; the ABC-field shape.
// Root moduli of the quadratic factors are sqrt(c_j) exactly.
FamilySpec abc_family(const BigInt& a, const std::vector<BigInt>& shifts,
                      const std::vector<std::pair<BigInt, BigInt>>& quadratics, int sign);

struct HypothesisReport {
    bool holds = false;
    Interval margin;  // |a| - rhs
};

// |a| >= max{1, L(P)} max{2^(d0/(d-d0-1)), (R+1)^d0} + 2R + 2
HypothesisReport hypothesis_check(const FamilySpec& f, const RunConfig& cfg = RunConfig());
// |a| >= L(P) max{2, (R+1)^d0} + 2R + 2  (the stricter variant)
HypothesisReport hypothesis_check_theorem(const FamilySpec& f, const RunConfig& cfg = RunConfig());

struct RootPortrait {
    std::vector<RootBox> small_roots;  // exactly d-1 counted with multiplicity, inside |z| < R+1
    Interval xi_box;                   // the distinguished real root, |xi - a| < 1
    Interval xi_height;                // H(xi) enclosure
    Interval gap;                      // |xi - a|
    Interval sandwich_lo;              // |xi|^(1/d)
    Interval sandwich_hi;              // (R+1) |xi|^(1/d)
};

RootPortrait localize_roots(const FamilySpec& f, unsigned bits, const RunConfig& cfg = RunConfig());

// xi alone: sign-bracket refinement inside [a-1, a+1] (hypothesis assumed
// already certified). Much cheaper than the full portrait.
Interval locate_xi(const FamilySpec& f, unsigned bits);

// |xi - a| through the identity (a - xi) Q(xi) = P(xi): needs only a xi box.
Interval xi_gap(const FamilySpec& f, const Interval& xi_box, unsigned bits);

struct FamilyIrredResult {
    IrredCertificate cert;
    bool hypothesis_holds = false;
};
// Mod-p witness when one exists below the prime cap, else the Lemma
// guarantee (hypothesis certified); never claims reducibility.
FamilyIrredResult irreducibility_certificate(const FamilySpec& f, unsigned long max_prime = 100,
                                             const RunConfig& cfg = RunConfig());

struct GapBounds {
    Interval upper;       // L(P) |xi|^d0 / (|xi| - R)^(d-1)
    Interval upper_loose; // L(P) 2^(d-1) |xi|^-(d-d0-1)
    Interval lower;       // 2^-(d+d0-1) |xi|^-(d-d0-1)
    Interval lower_sharp; // |b| (|xi| - R')^d0 / (|xi| + R)^(d-1)
};
GapBounds gap_bounds(const FamilySpec& f, const RootPortrait& portrait, const RunConfig& cfg = RunConfig());

// ApproxTarget for xi with the height sandwich enclosure; cheap (no full
// isolation), valid whenever the hypothesis is certified.
ApproxTarget family_target(const FamilySpec& f, unsigned bits, const RunConfig& cfg = RunConfig());

}  // namespace effap
