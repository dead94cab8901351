#include "effap/siegel.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace effap {

EpsilonSpec EpsilonSpec::parse(const std::string& s) {
    if (s == "sqrt2-1" || s == "sqrt(2)-1") return sqrt2_minus_one();
    return rational(parse_rat(s));
}

Interval EpsilonSpec::interval(unsigned bits) const {
    if (kind == Kind::Rational) return Interval(value, bits);
    return Interval::sqrt2(bits) - Interval(Rat(1), bits);
}

std::string EpsilonSpec::str() const {
    return kind == Kind::Rational ? rat_string(value) : std::string("sqrt2-1");
}

MeasureParams derive_params(unsigned d, unsigned e, const EpsilonSpec& eps, unsigned bits) {
    if (d < 3) throw ParameterViolation("derive_params requires d >= 3");
    if (e < 1 || e >= d) throw ParameterViolation("derive_params requires 1 <= e < d");
    Interval ei = eps.interval(bits);
    if (!ei.certainly_positive() || !ei.certainly_lt(Rat(1)))
        throw ParameterViolation("epsilon must satisfy 0 < epsilon < 1");
    MeasureParams p;
    p.d = d;
    p.e = e;
    p.eps = eps;
    p.epsilon = ei;
    Interval dd(Rat(d), bits), ee1(Rat(e + 1), bits);
    p.delta = (dd + ei) / ee1;
    p.alpha = dd * p.delta / ei;
    p.beta = dd * p.delta + p.alpha;
    p.gamma = Interval(Rat(1), bits) - ei;
    return p;
}

namespace {

long floor_of_point(const Rat& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q.get_si();
}

long floor_of_interval_exactly(const std::function<Interval(unsigned)>& gen, unsigned prec_cap) {
    for (unsigned bits : PrecisionSchedule(128, prec_cap)) {
        Interval v = gen(bits);
        long flo = floor_of_point(v.lo());
        long fhi = floor_of_point(v.hi());
        if (flo == fhi) return flo;
    }
    throw UndecidableAtPrecision("floor of an interval quantity");
}

}  // namespace

unsigned floor_delta_k(unsigned d, unsigned e, const EpsilonSpec& eps, unsigned k, unsigned prec_cap) {
    if (eps.is_rational()) {
        Rat dk = (Rat(d) + eps.value) * Rat(k) / Rat(e + 1);
        return static_cast<unsigned>(floor_of_point(dk));
    }
    long v = floor_of_interval_exactly(
        [&](unsigned bits) {
            return (Interval(Rat(d), bits) + eps.interval(bits)) * Interval(Rat(k), bits) /
                   Interval(Rat(e + 1), bits);
        },
        prec_cap);
    return static_cast<unsigned>(v);
}

long floor_eps_k_plus_ed(unsigned d, unsigned e, const EpsilonSpec& eps, unsigned k, unsigned prec_cap) {
    if (eps.is_rational()) return floor_of_point(eps.value * Rat(k) + Rat(e) * Rat(d));
    return floor_of_interval_exactly(
        [&](unsigned bits) {
            return eps.interval(bits) * Interval(Rat(k), bits) + Interval(Rat(e) * Rat(d), bits);
        },
        prec_cap);
}

Interval SiegelSystem::small_vector_bound() const {
    unsigned bits = std::max(128u, height_bound.bits());
    Interval sqrtN = Interval(Rat(N), bits).sqrt();
    return (sqrtN * height_bound).pow(Interval(mu, bits));
}

SiegelSystem build_vanishing_system(const ApproxTarget& target, unsigned k, unsigned e,
                                    const Interval& delta) {
    Interval dk = delta * Interval(Rat(k), delta.bits());
    long Dlo = 0, Dhi = 0;
    {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), dk.lo().get_num().get_mpz_t(), dk.lo().get_den().get_mpz_t());
        Dlo = q.get_si();
        mpz_fdiv_q(q.get_mpz_t(), dk.hi().get_num().get_mpz_t(), dk.hi().get_den().get_mpz_t());
        Dhi = q.get_si();
    }
    if (Dlo != Dhi) throw UndecidableAtPrecision("floor(delta*k) not determined by the given enclosure");
    if (Dlo < 1) throw ParameterViolation("D = floor(delta*k) must be >= 1");
    return build_vanishing_system(target, k, e, static_cast<unsigned>(Dlo));
}

SiegelSystem build_vanishing_system(const ApproxTarget& target, unsigned k, unsigned e, unsigned D) {
    unsigned d = target.degree();
    if (k < 1) throw ParameterViolation("vanishing order k must be >= 1");
    if (e < 1 || e >= d) throw ParameterViolation("y-degree cap must satisfy 1 <= e < d");
    if (D < 1) throw ParameterViolation("D must be >= 1");

    SiegelSystem sys;
    sys.field = target.field;
    sys.k = k;
    sys.e = e;
    sys.D = D;
    sys.M = k;
    sys.N = (D + 1) * (e + 1);
    if (sys.N <= d * sys.M) throw ParameterViolation("need N = (D+1)(e+1) > d*k unknowns");
    sys.mu = Rat(static_cast<long>(d) * sys.M, static_cast<long>(sys.N) - static_cast<long>(d) * sys.M);
    sys.mu.canonicalize();

    unsigned hb = std::max(128u, target.height.bits());
    Interval H = target.height;
    sys.height_bound = Interval::exact_int(BigInt(1) << D, hb) / Interval(Rat(D), hb).sqrt() *
                       H.pow_int(static_cast<long>(D + e));
    if (sys.height_bound.lo() < 1)
        sys.height_bound = Interval::make_raw(Rat(1), std::max(Rat(1), sys.height_bound.hi()), hb);

    // cache theta powers up to D+e
    const NumberField& K = sys.field;
    std::vector<NumberField::Element> pw;
    pw.reserve(D + e + 1);
    pw.push_back(K.one());
    for (unsigned m = 1; m <= D + e; ++m) pw.push_back(K.mul(pw.back(), K.theta()));

    sys.forms.assign(sys.M, std::vector<NumberField::Element>(sys.N, K.zero()));
    for (unsigned l = 0; l < k; ++l) {
        for (unsigned i = 0; i <= D; ++i) {
            if (i < l) continue;  // binomial C(i,l) vanishes, no negative powers arise
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), i, l);
            for (unsigned j = 0; j <= e; ++j) {
                sys.forms[l][sys.col(i, j)] = K.scale(pw[i - l + j], Rat(binom));
            }
        }
    }

    // expand over the power basis and clear denominators row-wise
    sys.expanded.reserve(static_cast<size_t>(d) * sys.M);
    for (unsigned l = 0; l < k; ++l) {
        for (unsigned b = 0; b < d; ++b) {
            BigInt lcm = 1;
            for (unsigned c = 0; c < sys.N; ++c)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), sys.forms[l][c][b].get_den().get_mpz_t());
            IntVec row(sys.N);
            for (unsigned c = 0; c < sys.N; ++c) {
                Rat v = sys.forms[l][c][b] * Rat(lcm);
                row[c] = v.get_num();
            }
            sys.expanded.push_back(std::move(row));
        }
    }
    return sys;
}

IntVec small_solution(const SiegelSystem& system, const Interval& bound) {
    if (bound.hi() < 1) throw ParameterViolation("small_solution bound must be >= 1");
    IntMat kern = kernel_basis(system.expanded, system.N);
    if (kern.empty())
        throw CertifiedBoundMiss("kernel lattice is trivial; no nonzero solution exists at all");
    lll_reduce(kern);
    auto best = smallest_within_maxnorm(kern, bound.hi());
    if (!best) throw CertifiedBoundMiss("complete enumeration found no vector within the bound");
    // exact annihilation re-check against the expanded rows
    for (const auto& row : system.expanded) {
        BigInt s = 0;
        for (size_t j = 0; j < row.size(); ++j) s += row[j] * (*best)[j];
        if (s != 0) throw TheoremViolation("kernel vector fails exact annihilation");
    }
    return *best;
}

IntPoly y_content(const BiPoly& P) {
    IntPoly g;
    int xd = P.x_degree();
    for (int i = 0; i <= xd; ++i) {
        IntPoly qi = P.y_coeff(static_cast<unsigned>(i));
        if (qi.is_zero()) continue;
        g = g.is_zero() ? qi : IntPoly::gcd(g, qi);
    }
    if (g.is_zero()) throw ParameterViolation("y_content of zero polynomial");
    // reattach the integer content so division leaves a content-1 quotient
    BigInt c = 0;
    for (const auto& [k, v] : P.terms()) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
    g = g.primitive_part().scaled(c);
    if (g.lead() < 0) g = -g;
    return g;
}

std::pair<BiPoly, IntPoly> y_primitivize(const BiPoly& P) {
    if (P.is_zero()) throw ParameterViolation("y_primitivize of zero polynomial");
    IntPoly Q = y_content(P);
    BiPoly tilde;
    int xd = P.x_degree();
    for (int i = 0; i <= xd; ++i) {
        IntPoly qi = P.y_coeff(static_cast<unsigned>(i));
        if (qi.is_zero()) continue;
        IntPoly div = qi.exact_div(Q);
        for (size_t j = 0; j < div.coeffs().size(); ++j)
            if (div[j] != 0) tilde.set_coeff(static_cast<unsigned>(i), static_cast<unsigned>(j), div[j]);
    }
    return {tilde, Q};
}

bool verify_vanishing(const NumberField& field, const BiPoly& P, unsigned k) {
    unsigned xd = static_cast<unsigned>(std::max(P.x_degree(), 0));
    unsigned yd = static_cast<unsigned>(std::max(P.y_degree(), 0));
    std::vector<NumberField::Element> pw;
    pw.push_back(field.one());
    for (unsigned m = 1; m <= xd + yd; ++m) pw.push_back(field.mul(pw.back(), field.theta()));
    for (unsigned l = 0; l < k; ++l) {
        NumberField::Element acc = field.zero();
        for (const auto& [key, v] : P.terms()) {
            auto [i, j] = key;
            if (i < l) continue;
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), i, l);
            acc = field.add(acc, field.scale(pw[i - l + j], Rat(v * binom)));
        }
        if (!field.is_zero(acc)) return false;
    }
    return true;
}

namespace {

std::string fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace

std::string AuxPoly::certificate_string() const {
    std::ostringstream os;
    os << "k=" << k << ";e=" << e << ";D=" << D << ";eps=" << eps.str() << ";P=" << P.str();
    return os.str();
}

AuxPoly construct_aux_poly(const ApproxTarget& target, unsigned k, unsigned e, const EpsilonSpec& eps,
                           const RunConfig& cfg) {
    unsigned d = target.degree();
    if (e < 1 || e >= d) throw ParameterViolation("construct_aux_poly requires 1 <= e < d");
    if (k < 1) throw ParameterViolation("construct_aux_poly requires k >= 1");
    unsigned D = floor_delta_k(d, e, eps, k, cfg.prec_cap);
    unsigned bits = std::max(cfg.prec_start, 128u);

    Interval epsI = eps.interval(bits);
    if (!epsI.certainly_positive() || !epsI.certainly_lt(Rat(1)))
        throw ParameterViolation("epsilon must satisfy 0 < epsilon < 1");

    SiegelSystem sys = build_vanishing_system(target, k, e, D);
    Interval delta = (Interval(Rat(d), bits) + epsI) / Interval(Rat(e + 1), bits);
    IntVec sol = small_solution(sys, sys.small_vector_bound());

    BiPoly raw;
    for (unsigned i = 0; i <= sys.D; ++i)
        for (unsigned j = 0; j <= e; ++j) {
            const BigInt& v = sol[sys.col(i, j)];
            if (v != 0) raw.set_coeff(i, j, v);
        }
    auto [tilde, Q] = y_primitivize(raw);
    (void)Q;

    if (!verify_vanishing(target.field, tilde, k))
        throw TheoremViolation("auxiliary polynomial fails exact vanishing at (theta, theta)");
    {
        IntPoly g = y_content(tilde);
        if (g.degree() != 0 || abs(g.lead()) != 1)
            throw TheoremViolation("auxiliary polynomial is not y-primitive after division");
    }

    Interval H = target.height;
    Interval two(Rat(2), bits);
    Interval ep1(Rat(e + 1), bits);
    Interval a_over_2d = Interval(Rat(d), bits) / (two * epsI);           // alpha/(2 delta) = d/(2 eps)
    Interval ae_over_d = Interval(Rat(d) * Rat(e), bits) / epsI;          // alpha*e/delta = d*e/eps
    Interval c1 = two.pow(Interval(Rat(e), bits) + a_over_2d) * ep1.pow(a_over_2d) * H.pow(ae_over_d);
    Interval alpha = Interval(Rat(d), bits) * delta / epsI;
    Interval size_bound = c1 * (two * H).pow(alpha * Interval(Rat(k), bits));

    if (Rat(tilde.size()) > size_bound.hi())
        throw TheoremViolation("auxiliary polynomial size exceeds the certified bound");

    AuxPoly aux;
    aux.P = tilde;
    aux.k = k;
    aux.e = e;
    aux.D = sys.D;
    aux.eps = eps;
    aux.size_bound = size_bound;
    aux.c1 = c1;
    aux.vanishing_hash = fnv1a(aux.certificate_string());
    return aux;
}

}  // namespace effap
