#include "effap/families.hpp"

#include <algorithm>
#include <set>

namespace effap {

IntPoly FamilySpec::A() const {
    IntPoly lin({BigInt(-a), BigInt(1)});
    return lin * Q + P;
}

FamilySpec make_family(const IntPoly& P, const IntPoly& Q, const BigInt& a, const RunConfig& cfg) {
    if (P.is_zero()) throw ParameterViolation("family requires P != 0");
    if (Q.degree() < 1 || !Q.is_monic()) throw ParameterViolation("family requires monic Q of degree >= 1");
    if (P.degree() >= Q.degree()) throw ParameterViolation("family requires deg P < deg Q");
    if (IntPoly::resultant(P, Q) == 0) throw ParameterViolation("family requires gcd(P, Q) = 1");
    FamilySpec f;
    f.P = P;
    f.Q = Q;
    f.a = a;
    f.d = static_cast<unsigned>(Q.degree()) + 1;
    f.d0 = static_cast<unsigned>(P.degree());
    f.LP = P.length();
    f.b = P.lead();
    f.R = max_root_modulus(Q, 64, cfg);
    if (f.R.lo() < 0) f.R = Interval::make_raw(Rat(0), f.R.hi(), f.R.bits());
    f.R_prime = f.d0 == 0 ? Interval(Rat(0), 64) : max_root_modulus(P, 64, cfg);
    if (f.d0 > 0 && f.R_prime.lo() > Rat(f.LP))
        throw TheoremViolation("R' exceeds L(P)");
    return f;
}

FamilySpec abc_family(const BigInt& a, const std::vector<BigInt>& shifts,
                      const std::vector<std::pair<BigInt, BigInt>>& quadratics, int sign) {
    if (sign != 1 && sign != -1) throw ParameterViolation("abc_family sign must be +-1");
    size_t m = shifts.size(), n = quadratics.size();
    if (m + 2 * n < 22) throw ParameterViolation("abc_family requires m + 2n >= 22");
    {
        std::set<BigInt> s(shifts.begin(), shifts.end());
        if (s.size() != m) throw ParameterViolation("abc_family shifts must be distinct");
        std::set<std::pair<BigInt, BigInt>> qset(quadratics.begin(), quadratics.end());
        if (qset.size() != n) throw ParameterViolation("abc_family quadratic pairs must be distinct");
    }
    for (const auto& [b, c] : quadratics)
        if (b * b - 4 * c >= 0) throw ParameterViolation("abc_family quadratics need b^2 - 4c < 0");

    IntPoly Q = IntPoly::constant(1);
    for (const auto& s : shifts) Q = Q * IntPoly({BigInt(-s), BigInt(1)});
    for (const auto& [b, c] : quadratics) Q = Q * IntPoly({c, b, BigInt(1)});

    FamilySpec f;
    f.P = IntPoly::constant(sign);
    f.Q = Q;
    f.a = a;
    f.d = static_cast<unsigned>(m + 2 * n + 1);
    f.d0 = 0;
    f.LP = 1;
    f.b = sign;
    f.R_prime = Interval(Rat(0), 64);
    // max root modulus: shifts contribute |a_i|; a conjugate pair of
    // t^2 + bt + c has modulus sqrt(c) exactly
    Interval R(Rat(0), 96);
    for (const auto& s : shifts) {
        Interval v = Interval::exact_int(abs(s), 96);
        R = Interval::make_raw(std::max(R.lo(), v.lo()), std::max(R.hi(), v.hi()), 96);
    }
    for (const auto& [b, c] : quadratics) {
        Interval v = Interval::exact_int(c, 96).sqrt();
        R = Interval::make_raw(std::max(R.lo(), v.lo()), std::max(R.hi(), v.hi()), 96);
    }
    f.R = R;
    return f;
}

namespace {

Interval interval_max(const Interval& a, const Interval& b) {
    return Interval::make_raw(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()),
                              std::max(a.bits(), b.bits()));
}

HypothesisReport hypothesis_generic(const FamilySpec& f, bool lemma_form, const RunConfig& cfg) {
    for (unsigned bits : PrecisionSchedule(cfg)) {
        Interval R = f.R.with_bits(bits);
        Interval Rp1 = R + Interval(Rat(1), bits);
        Interval lp(Rat(f.LP), bits);
        Interval rhs;
        if (lemma_form) {
            Interval first = interval_max(Interval(Rat(1), bits), lp);
            Interval p2 = Interval(Rat(2), bits)
                              .pow(Interval(Rat(static_cast<long>(f.d0), static_cast<long>(f.d - f.d0 - 1)), bits));
            Interval second = interval_max(p2, Rp1.pow_int(static_cast<long>(f.d0)));
            rhs = first * second + Interval(Rat(2), bits) * R + Interval(Rat(2), bits);
        } else {
            Interval second = interval_max(Interval(Rat(2), bits), Rp1.pow_int(static_cast<long>(f.d0)));
            rhs = lp * second + Interval(Rat(2), bits) * R + Interval(Rat(2), bits);
        }
        Interval margin = Interval::exact_int(abs(f.a), bits) - rhs;
        if (margin.certainly_ge(Rat(0))) return {true, margin};
        if (margin.certainly_negative()) return {false, margin};
    }
    throw UndecidableAtPrecision("family hypothesis margin straddles zero");
}

}  // namespace

HypothesisReport hypothesis_check(const FamilySpec& f, const RunConfig& cfg) {
    return hypothesis_generic(f, true, cfg);
}

HypothesisReport hypothesis_check_theorem(const FamilySpec& f, const RunConfig& cfg) {
    return hypothesis_generic(f, false, cfg);
}

Interval locate_xi(const FamilySpec& f, unsigned bits) {
    IntPoly A = f.A();
    Rat lo = Rat(f.a) - 1, hi = Rat(f.a) + 1;
    return refine_real_root(A, Interval::make_raw(lo, hi, bits), bits);
}

Interval xi_gap(const FamilySpec& f, const Interval& xi_box, unsigned bits) {
    // (xi - a) = -P(xi)/Q(xi), exact at the root
    for (unsigned b = std::max(bits, xi_box.bits()); b <= (1u << 24); b *= 2) {
        Interval xb = xi_box;
        if (xb.width() > Rat(1, BigInt(1) << b))
            xb = refine_real_root(f.A(), xi_box, b);
        Interval qv = f.Q.eval(xb, b);
        if (qv.contains_zero()) continue;
        Interval pv = f.P.eval(xb, b);
        Interval g = (pv / qv).abs();
        if (g.certainly_positive()) return g;
    }
    throw UndecidableAtPrecision("xi gap through P/Q");
}

RootPortrait localize_roots(const FamilySpec& f, unsigned bits, const RunConfig& cfg) {
    auto hyp = hypothesis_check(f, cfg);
    if (!hyp.holds) throw HypothesisViolation("rouche_hypothesis", "family fails the localization hypothesis");
    IntPoly A = f.A();
    auto cert = irreducibility_certificate(f, 100, cfg);

    RootPortrait out;
    unsigned ib = std::max(bits, 64u);
    for (unsigned attempt = 0;; ++attempt) {
        auto roots = isolate_roots(A, ib, cfg);
        out.small_roots.clear();
        bool xi_found = false;
        bool undecided = false;
        for (const auto& rb : roots) {
            Interval mod = rb.box.abs(ib);
            Interval Rp1 = f.R + Interval(Rat(1), ib);
            // distance to a
            Interval dist =
                ((rb.box.re - Interval::exact_int(f.a, ib)).pow_int(2) + rb.box.im.pow_int(2)).sqrt();
            if (mod.certainly_lt(Rp1)) {
                out.small_roots.push_back(rb);
            } else if (dist.certainly_lt(Rat(1))) {
                if (xi_found || !rb.is_real || rb.multiplicity != 1)
                    throw RoucheMismatch("xi must be unique, real, simple");
                out.xi_box = rb.box.re;
                xi_found = true;
            } else {
                undecided = true;
                break;
            }
        }
        if (!undecided) {
            long small_count = 0;
            for (const auto& rb : out.small_roots) small_count += rb.multiplicity;
            if (!xi_found || small_count != static_cast<long>(f.d) - 1)
                throw RoucheMismatch("expected (d-1, 1) split");
            break;
        }
        if (ib >= (1u << 20)) throw UndecidableAtPrecision("root classification against R+1 disk");
        ib *= 2;
    }

    out.gap = (out.xi_box - Interval::exact_int(f.a, ib)).abs();
    Interval xiabs = out.xi_box.abs();
    Interval xiroot = xiabs.nth_root(f.d);
    out.sandwich_lo = xiroot;
    out.sandwich_hi = (f.R + Interval(Rat(1), ib)) * xiroot;
    if (cert.cert.certified()) {
        // A monic irreducible: it is the minimal polynomial, so H comes from
        // the Mahler measure over the portrait boxes
        Interval m(Rat(1), ib);
        for (const auto& rb : out.small_roots) {
            Interval av = rb.box.abs(ib);
            Rat lo = std::max(Rat(1), av.lo()), hi = std::max(Rat(1), av.hi());
            for (int rep = 0; rep < rb.multiplicity; ++rep) m = m * Interval::make_raw(lo, hi, ib);
        }
        m = m * interval_max(Interval(Rat(1), ib), xiabs);
        Interval h = m.nth_root(f.d);
        // intersect with the sandwich; both are valid enclosures
        Rat lo = std::max(h.lo(), out.sandwich_lo.lo());
        Rat hi = std::min(h.hi(), out.sandwich_hi.hi());
        out.xi_height = lo <= hi ? Interval::make_raw(lo, hi, ib) : h;
    } else {
        out.xi_height = Interval::make_raw(out.sandwich_lo.lo(), out.sandwich_hi.hi(), ib);
    }
    return out;
}

FamilyIrredResult irreducibility_certificate(const FamilySpec& f, unsigned long max_prime,
                                             const RunConfig& cfg) {
    FamilyIrredResult r;
    IntPoly A = f.A();
    auto p = certify_irreducible(A, max_prime);
    auto hyp = hypothesis_check(f, cfg);
    r.hypothesis_holds = hyp.holds;
    if (p)
        r.cert = IrredCertificate::mod_p(*p);
    else if (hyp.holds)
        r.cert = IrredCertificate::lemma_guarantee();
    else
        r.cert = IrredCertificate::unknown();
    return r;
}

GapBounds gap_bounds(const FamilySpec& f, const RootPortrait& portrait, const RunConfig& cfg) {
    (void)cfg;
    unsigned bits = std::max(128u, portrait.xi_box.bits());
    Interval xiabs = portrait.xi_box.abs().with_bits(bits);
    Rat floor_req = std::max(Rat(1), std::max(Rat(Rat(2) * f.R.hi()), Rat(Rat(2) * Rat(f.LP))));
    if (!(xiabs.lo() > floor_req)) throw PreconditionXiTooSmall();

    long dm1 = static_cast<long>(f.d) - 1;
    long dd01 = static_cast<long>(f.d) - static_cast<long>(f.d0) - 1;
    GapBounds g;
    Interval lp(Rat(f.LP), bits);
    g.upper = lp * xiabs.pow_int(static_cast<long>(f.d0)) / (xiabs - f.R.with_bits(bits)).pow_int(dm1);
    g.upper_loose = lp * Interval::exact_int(BigInt(1) << static_cast<unsigned>(f.d - 1), bits) *
                    xiabs.pow_int(-dd01);
    g.lower = Interval(Rat(1, BigInt(1) << static_cast<unsigned>(f.d + f.d0 - 1)), bits) *
              xiabs.pow_int(-dd01);
    g.lower_sharp = Interval::exact_int(abs(f.b), bits) *
                    (xiabs - f.R_prime.with_bits(bits)).pow_int(static_cast<long>(f.d0)) /
                    (xiabs + f.R.with_bits(bits)).pow_int(dm1);
    return g;
}

ApproxTarget family_target(const FamilySpec& f, unsigned bits, const RunConfig& cfg) {
    auto cert = irreducibility_certificate(f, 100, cfg);
    if (!cert.cert.certified())
        throw HypothesisViolation("rouche_hypothesis", "cannot certify irreducibility for the family target");
    IntPoly A = f.A();
    ApproxTarget t;
    t.field = NumberField::create_guaranteed(A, cert.cert);
    Interval xi = locate_xi(f, std::max(bits, 96u));
    t.root_box = Box{xi, Interval(Rat(0), xi.bits())};
    t.is_real = true;
    Interval xiabs = xi.abs();
    Interval xiroot = xiabs.nth_root(f.d);
    Interval hi_side = (f.R.with_bits(xi.bits()) + Interval(Rat(1), xi.bits())) * xiroot;
    t.height = Interval::make_raw(std::max(Rat(1), xiroot.lo()), std::max(Rat(1), hi_side.hi()), xi.bits());
    return t;
}

}  // namespace effap
