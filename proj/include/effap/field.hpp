#pragma once

#include <optional>
#include <string>
#include <vector>

#include "effap/config.hpp"
#include "effap/poly.hpp"
#include "effap/roots.hpp"

namespace effap {

// Irreducibility evidence for an integer polynomial.
struct IrredCertificate {
    enum class Kind { ModP, LemmaGuarantee, Unknown } kind = Kind::Unknown;
    unsigned long p = 0;  // witness prime for ModP

    bool certified() const { return kind != Kind::Unknown; }
    static IrredCertificate mod_p(unsigned long p) { return {Kind::ModP, p}; }
    static IrredCertificate lemma_guarantee() { return {Kind::LemmaGuarantee, 0}; }
    static IrredCertificate unknown() { return {Kind::Unknown, 0}; }
};

// f mod p irreducible over F_p (requires p prime, p not dividing lead(f)).
bool irreducible_mod_p(const IntPoly& f, unsigned long p);
// First prime <= max_prime certifying irreducibility; nullopt if none found.
std::optional<unsigned long> certify_irreducible(const IntPoly& f, unsigned long max_prime = 200);

// Q(theta) presented by a primitive irreducible minimal polynomial.
class NumberField {
public:
    NumberField() = default;  // empty until assigned from create()

    // Requires a certificate: either found mod p or supplied as a guarantee.
    static NumberField create(const IntPoly& min_poly, unsigned long max_prime = 200);
    static NumberField create_guaranteed(const IntPoly& min_poly, IrredCertificate cert);

    const IntPoly& min_poly() const { return min_poly_; }
    unsigned degree() const { return degree_; }
    const IrredCertificate& certificate() const { return cert_; }

    // elements in the power basis 1, theta, ..., theta^(d-1)
    using Element = std::vector<Rat>;
    Element zero() const { return Element(degree_, Rat(0)); }
    Element one() const;
    Element from_rat(const Rat& r) const;
    Element theta() const;
    Element theta_power(long k) const;  // k may be negative
    bool is_zero(const Element& a) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element scale(const Element& a, const Rat& k) const;
    Element inv(const Element& a) const;  // throws DivisionByZero on zero
    Element reduce(const RatPoly& p) const;

private:
    IntPoly min_poly_;
    unsigned degree_ = 0;
    IrredCertificate cert_;
};

// A designated root theta of a number field, with certified box and height.
struct ApproxTarget {
    NumberField field;
    Box root_box;      // isolates exactly this root
    Interval height;   // encloses H(theta); lo >= 1
    bool is_real = false;

    unsigned degree() const { return field.degree(); }
    Interval theta_interval() const { return root_box.re; }
    // shrink the real root box until its width is below 2^-bits
    void refine(unsigned bits);
};

// H(alpha) from the minimal polynomial via the Mahler measure
// (|lead| * prod max(1, |root|))^(1/d).
Interval height_from_minpoly(const IntPoly& min_poly, unsigned bits, const RunConfig& cfg = RunConfig());

// Certified target construction: isolates roots of min_poly and designates
// the real root closest to `near`.
ApproxTarget make_target_real_near(const IntPoly& min_poly, const Rat& near, unsigned bits,
                                   const RunConfig& cfg = RunConfig());
// ... or a designated root by index in the isolate_roots ordering.
ApproxTarget make_target_by_index(const IntPoly& min_poly, size_t index, unsigned bits,
                                  const RunConfig& cfg = RunConfig());

// 1/2 * (2 H_up^2)^(-d^2) <= |Im theta| for non-real theta, as an exact rational.
Rat im_lower_bound(const ApproxTarget& target);

// Height-axiom harness: H(p/q) = max(|p|,|q|); H(a+b) <= 2 H(a) H(b);
// |a| >= H(a)^(-d). Pairs are sampled with exactly constructible sum minimal
// polynomials (rational shifts, same-field sums, resultants certified mod p).
struct HeightAxiomReport {
    int rational_checked = 0;
    int sum_checked = 0;
    int modulus_checked = 0;
    int resampled = 0;
    bool all_hold = false;
};
HeightAxiomReport check_height_axioms(int pairs, std::uint64_t seed, const RunConfig& cfg = RunConfig());

// Minimal polynomial of alpha + beta given their minimal polynomials, as the
// squarefree part of Res_x(f(x), g(z - x)); the result is certified
// irreducible mod p or nullopt is returned.
std::optional<IntPoly> sum_min_poly_certified(const IntPoly& f, const IntPoly& g, unsigned long max_prime = 500);

}  // namespace effap
