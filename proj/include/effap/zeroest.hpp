#pragma once

#include <vector>

#include "effap/params.hpp"
#include "effap/siegel.hpp"

namespace effap {

// Exact Wronskian determinant of the derivative matrix; zero iff the inputs
// are linearly dependent over Q.
IntPoly wronskian(const std::vector<IntPoly>& polys);

struct NonvanishingCertificate {
    unsigned l = 0;
    Rat value;       // exact P_l(xi, eta), nonzero
    Interval L_cap;  // eps*k + e*d
};

// Least l with 0 <= l <= eps*k + e*d and P_l(xi, eta) != 0, scanned in
// ascending order with exact rational evaluation.
NonvanishingCertificate nonvanishing_index(const AuxPoly& aux, const Rat& xi, const Rat& eta,
                                           const ApproxTarget& target, const RunConfig& cfg = RunConfig());

enum class LhsExponentMode { FloorDeltaK, RealDeltaK };

struct UpperEstimateReport {
    Interval lhs;  // a point interval (exact rational) in floor mode
    Interval rhs;
    Interval c3;
    bool holds = false;
    LhsExponentMode mode = LhsExponentMode::FloorDeltaK;
    unsigned k = 0;
};

// q0^(-delta*k) q^(-e) <= c3 (2H)^(beta*k) { gap0^(gamma*k - e*d) + gap },
// certified by comparing the lhs upper endpoint against the rhs lower
// endpoint. Both exponent conventions for the lhs are available.
UpperEstimateReport verify_upper_estimate(const ApproxTarget& target, const MeasureParams& params,
                                          const BigInt& p0, const BigInt& q0, const BigInt& p,
                                          const BigInt& q, unsigned k,
                                          LhsExponentMode mode = LhsExponentMode::FloorDeltaK,
                                          const RunConfig& cfg = RunConfig());

}  // namespace effap
