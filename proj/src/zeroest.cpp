#include "effap/zeroest.hpp"

#include <algorithm>

namespace effap {

namespace {

BigInt det_bareiss(std::vector<std::vector<BigInt>> s) {
    size_t N = s.size();
    if (N == 0) return BigInt(1);
    BigInt denom = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < N; ++k) {
        if (s[k][k] == 0) {
            size_t p = k + 1;
            while (p < N && s[p][k] == 0) ++p;
            if (p == N) return BigInt(0);
            std::swap(s[k], s[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < N; ++i) {
            for (size_t j = k + 1; j < N; ++j) s[i][j] = (s[k][k] * s[i][j] - s[i][k] * s[k][j]) / denom;
            s[i][k] = 0;
        }
        denom = s[k][k];
    }
    return sign > 0 ? s[N - 1][N - 1] : BigInt(-s[N - 1][N - 1]);
}

}  // namespace

IntPoly wronskian(const std::vector<IntPoly>& polys) {
    if (polys.empty()) throw ParameterViolation("wronskian of empty list");
    size_t n = polys.size();
    for (const auto& p : polys)
        if (p.is_zero()) return IntPoly::zero();

    std::vector<std::vector<IntPoly>> deriv(n);
    long degsum = 0;
    for (size_t c = 0; c < n; ++c) {
        deriv[c].push_back(polys[c]);
        for (size_t r = 1; r < n; ++r) deriv[c].push_back(deriv[c].back().derivative());
        degsum += std::max(polys[c].degree(), 0);
    }

    // evaluation-interpolation: W has integer coefficients and degree <= degsum
    std::vector<Rat> xs, ys;
    for (long x = 0; x <= degsum; ++x) {
        std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) m[r][c] = deriv[c][r].eval_int(BigInt(x));
        xs.emplace_back(x);
        ys.emplace_back(det_bareiss(std::move(m)));
    }
    RatPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        RatPoly term = RatPoly::constant(ys[i]);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            RatPoly lin({-xs[j], Rat(1)});
            term = term * lin.scaled(1 / (xs[i] - xs[j]));
        }
        acc = acc + term;
    }
    std::vector<BigInt> coeffs;
    coeffs.reserve(acc.coeffs().size());
    for (const auto& c : acc.coeffs()) {
        if (c.get_den() != 1) throw TheoremViolation("Wronskian interpolation produced a non-integer");
        coeffs.push_back(c.get_num());
    }
    return IntPoly(std::move(coeffs));
}

NonvanishingCertificate nonvanishing_index(const AuxPoly& aux, const Rat& xi, const Rat& eta,
                                           const ApproxTarget& target, const RunConfig& cfg) {
    if (aux.k < aux.e) throw ParameterViolation("nonvanishing_index requires k >= e");
    if (sgn(target.field.min_poly().eval(xi)) == 0) throw PreconditionXiConjugate();
    unsigned d = target.degree();
    long cap = floor_eps_k_plus_ed(d, aux.e, aux.eps, aux.k, cfg.prec_cap);
    Interval L_cap = aux.eps.interval(128) * Interval(Rat(aux.k), 128) + Interval(Rat(aux.e) * Rat(d), 128);
    for (long l = 0; l <= cap; ++l) {
        Rat v = aux.P.partial_x_scaled(static_cast<unsigned>(l)).eval(xi, eta);
        if (sgn(v) != 0) return NonvanishingCertificate{static_cast<unsigned>(l), v, L_cap};
    }
    throw TheoremViolation("no nonvanishing index within eps*k + e*d");
}

UpperEstimateReport verify_upper_estimate(const ApproxTarget& target, const MeasureParams& params,
                                          const BigInt& p0, const BigInt& q0, const BigInt& p,
                                          const BigInt& q, unsigned k, LhsExponentMode mode,
                                          const RunConfig& cfg) {
    if (q0 < 1 || q < 1) throw ParameterViolation("q0 and q must be >= 1");
    if (!target.is_real) throw ParameterViolation("verify_upper_estimate requires a real target");
    unsigned d = target.degree();
    unsigned e = params.e;
    Rat r0(p0, q0), r1(p, q);
    r0.canonicalize();
    r1.canonicalize();

    ApproxTarget t = target;
    for (unsigned bits : PrecisionSchedule(cfg)) {
        t.refine(bits);
        Interval theta = t.theta_interval().with_bits(bits);
        Interval gap0 = (theta - Interval(r0, bits)).abs();
        Interval gap1 = (theta - Interval(r1, bits)).abs();
        if (gap0.certainly_ge(Rat(1)) || gap1.certainly_ge(Rat(1)))
            throw PreconditionGap("|theta - p/q| >= 1");
        if (!gap0.certainly_lt(Rat(1)) || !gap1.certainly_lt(Rat(1))) continue;
        if (!gap0.certainly_positive() || !gap1.certainly_positive()) continue;

        MeasureParams pr = derive_params(d, e, params.eps, bits);
        // certify k >= e*d / gamma
        if (params.eps.is_rational()) {
            if (Rat(k) * (1 - params.eps.value) < Rat(e) * Rat(d))
                throw ParameterViolation("k below e*d/gamma");
        } else {
            Interval kmin = Interval(Rat(e) * Rat(d), bits) / pr.gamma;
            if (Rat(k) < kmin.lo()) throw ParameterViolation("k below e*d/gamma");
            if (Rat(k) < kmin.hi()) continue;  // threshold not yet certified
        }

        Interval H = t.height.with_bits(bits);
        Interval two(Rat(2), bits);
        Interval ep1(Rat(e + 1), bits);
        Interval a_over_2d = Interval(Rat(d), bits) / (two * pr.epsilon);
        Interval ae_over_d = Interval(Rat(d) * Rat(e), bits) / pr.epsilon;
        Interval c1 = two.pow(Interval(Rat(e), bits) + a_over_2d) * ep1.pow(a_over_2d) * H.pow(ae_over_d);
        Interval c3 = two * ep1 * H.pow_int(static_cast<long>(e) * d) * c1;

        Interval lhs;
        if (mode == LhsExponentMode::FloorDeltaK) {
            unsigned D = floor_delta_k(d, e, params.eps, k, cfg.prec_cap);
            Rat v = rat_pow(Rat(q0), -static_cast<long>(D)) * rat_pow(Rat(q), -static_cast<long>(e));
            lhs = Interval(v, bits);
        } else {
            Interval dk = pr.delta * Interval(Rat(k), bits);
            Interval q0i = Interval::exact_int(q0, bits);
            lhs = (q0 == 1 ? Interval(Rat(1), bits) : q0i.pow(-dk)) *
                  Interval::exact_int(q, bits).pow_int(-static_cast<long>(e));
        }

        Interval expo = pr.gamma * Interval(Rat(k), bits) - Interval(Rat(e) * Rat(d), bits);
        Interval rhs = c3 * (two * H).pow(pr.beta * Interval(Rat(k), bits)) * (gap0.pow(expo) + gap1);

        UpperEstimateReport rep;
        rep.lhs = lhs;
        rep.rhs = rhs;
        rep.c3 = c3;
        rep.mode = mode;
        rep.k = k;
        if (lhs.hi() <= rhs.lo()) {
            rep.holds = true;
            return rep;
        }
        if (lhs.lo() > rhs.hi()) {
            rep.holds = false;  // certified violation: signals a bug upstream
            return rep;
        }
    }
    throw UndecidableAtPrecision("upper-estimate comparison");
}

}  // namespace effap
