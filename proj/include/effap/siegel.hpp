#pragma once

#include <string>
#include <vector>

#include "effap/field.hpp"
#include "effap/lattice.hpp"
#include "effap/params.hpp"

namespace effap {

// The homogeneous vanishing system: M = k linear forms over K = Q(theta) in
// N = (D+1)(e+1) unknowns p_ij, expanded over the power basis into d*M
// integer rows. Column order: index = i*(e+1) + j.
struct SiegelSystem {
    NumberField field;
    unsigned k = 0, e = 0, D = 0;
    unsigned M = 0, N = 0;
    Rat mu;                 // d*M / (N - d*M)
    Interval height_bound;  // 2^D / sqrt(D) * H^(D+e), the form-height cap
    std::vector<std::vector<NumberField::Element>> forms;
    IntMat expanded;

    // (sqrt(N) * height_bound)^mu
    Interval small_vector_bound() const;
    size_t col(unsigned i, unsigned j) const { return static_cast<size_t>(i) * (e + 1) + j; }
};

SiegelSystem build_vanishing_system(const ApproxTarget& target, unsigned k, unsigned e,
                                    const Interval& delta);
// same, with D = floor(delta*k) already decided exactly by the caller
SiegelSystem build_vanishing_system(const ApproxTarget& target, unsigned k, unsigned e, unsigned D);

// Nonzero integer vector annihilating every form, max-norm within the bound's
// upper endpoint, minimal by (max-norm, lex). CertifiedBoundMiss carries a
// completed-enumeration proof of absence.
IntVec small_solution(const SiegelSystem& system, const Interval& bound);

struct AuxPoly {
    BiPoly P;            // y-primitive
    unsigned k = 0;      // vanishing order
    unsigned e = 0;      // y-degree cap
    unsigned D = 0;      // x-degree cap, floor(delta*k)
    EpsilonSpec eps;
    Interval size_bound;  // c1 * (2H)^(alpha*k)
    Interval c1;
    std::string vanishing_hash;

    std::string certificate_string() const;
};

AuxPoly construct_aux_poly(const ApproxTarget& target, unsigned k, unsigned e, const EpsilonSpec& eps,
                           const RunConfig& cfg = RunConfig());

// P = Q(y) * P_tilde with Q in Z[y] (integer content included) and P_tilde
// y-primitive: the gcd of its y-coefficient polynomials is +-1.
std::pair<BiPoly, IntPoly> y_primitivize(const BiPoly& P);

// Exact check in Q(theta): P_l(theta, theta) = 0 for all 0 <= l < k.
bool verify_vanishing(const NumberField& field, const BiPoly& P, unsigned k);

// gcd over i of the y-coefficient polynomials (integer content included).
IntPoly y_content(const BiPoly& P);

}  // namespace effap
