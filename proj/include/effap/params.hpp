#pragma once

#include <string>

#include "effap/interval.hpp"

namespace effap {

// Exact description of the parameter epsilon: either a rational value or the
// distinguished sqrt(2)-1, regenerable at any precision.
struct EpsilonSpec {
    enum class Kind { Rational, SqrtTwoMinusOne };
    Kind kind = Kind::Rational;
    Rat value{1, 2};

    static EpsilonSpec rational(const Rat& v) { return {Kind::Rational, v}; }
    static EpsilonSpec sqrt2_minus_one() { return {Kind::SqrtTwoMinusOne, Rat(0)}; }
    static EpsilonSpec parse(const std::string& s);

    bool is_rational() const { return kind == Kind::Rational; }
    Interval interval(unsigned bits) const;
    std::string str() const;
};

// delta = (d+eps)/(e+1), alpha = d*delta/eps, beta = d*delta + alpha,
// gamma = 1 - eps, all as certified enclosures.
struct MeasureParams {
    unsigned d = 0;
    unsigned e = 0;
    EpsilonSpec eps;
    Interval epsilon;
    Interval delta;
    Interval alpha;
    Interval beta;
    Interval gamma;
};

MeasureParams derive_params(unsigned d, unsigned e, const EpsilonSpec& eps, unsigned bits);

// floor(delta * k), decided exactly (rational eps) or by refining the
// enclosure (sqrt(2)-1 makes delta*k irrational, so the floor terminates).
unsigned floor_delta_k(unsigned d, unsigned e, const EpsilonSpec& eps, unsigned k, unsigned prec_cap = 1u << 16);

// floor(eps*k + e*d), same decision procedure.
long floor_eps_k_plus_ed(unsigned d, unsigned e, const EpsilonSpec& eps, unsigned k, unsigned prec_cap = 1u << 16);

}  // namespace effap
