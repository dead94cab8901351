#include "effap/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

namespace effap {

BigInt big_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw DivisionByZero("rat_pow");
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) {
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

long floor_log2_abs(const Rat& x) {
    if (sgn(x) == 0) throw DivisionByZero("floor_log2_abs(0)");
    BigInt n = abs(x.get_num());
    BigInt d = x.get_den();
    long ln = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    long ld = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    // 2^(ln-1) <= n < 2^ln, so the answer is ln-ld or ln-ld-1 (one check needed)
    long g = ln - ld;
    // |x| >= 2^g  <=>  n >= d * 2^g
    BigInt lhs = n, rhs = d;
    if (g >= 0)
        rhs <<= static_cast<unsigned long>(g);
    else
        lhs <<= static_cast<unsigned long>(-g);
    return lhs >= rhs ? g : g - 1;
}

long ceil_log2_abs(const Rat& x) {
    long f = floor_log2_abs(x);
    // exact power of two iff |x| == 2^f
    Rat p = (f >= 0) ? Rat(BigInt(1) << static_cast<unsigned long>(f))
                     : Rat(1, BigInt(1) << static_cast<unsigned long>(-f));
    return (abs(x) == p) ? f : f + 1;
}

namespace {

// floor(x * 2^k) / 2^k  with k chosen so the result keeps `bits` significant bits
Rat dyadic_floor(const Rat& x, long k) {
    BigInt n = x.get_num(), d = x.get_den();
    if (k >= 0)
        n <<= static_cast<unsigned long>(k);
    else
        d <<= static_cast<unsigned long>(-k);
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    Rat r;
    if (k >= 0)
        r = Rat(q, BigInt(1) << static_cast<unsigned long>(k));
    else
        r = Rat(q * (BigInt(1) << static_cast<unsigned long>(-k)), 1);
    r.canonicalize();
    return r;
}

Rat dyadic_ceil(const Rat& x, long k) { return -dyadic_floor(-x, k); }

long grain_exponent(const Rat& x, unsigned bits) {
    // grid 2^-k with k = bits - 1 - floor(log2 |x|): keeps ~bits significant bits
    long e = floor_log2_abs(x);
    return static_cast<long>(bits) - 1 - e;
}

}  // namespace

Rat round_down(const Rat& x, unsigned bits) {
    if (sgn(x) == 0) return x;
    return dyadic_floor(x, grain_exponent(x, bits));
}

Rat round_up(const Rat& x, unsigned bits) {
    if (sgn(x) == 0) return x;
    return dyadic_ceil(x, grain_exponent(x, bits));
}

std::string rat_string(const Rat& x) {
    std::ostringstream os;
    os << x.get_num();
    if (x.get_den() != 1) os << "/" << x.get_den();
    return os.str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        Rat r(parse_bigint(s));
        return r;
    }
    BigInt n = parse_bigint(s.substr(0, slash));
    BigInt d = parse_bigint(s.substr(slash + 1));
    if (d == 0) throw ParameterViolation("rational with zero denominator: " + s);
    Rat r(n, d);
    r.canonicalize();
    return r;
}

BigInt parse_bigint(const std::string& s0) {
    std::string s = s0;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '_'; }), s.end());
    if (s.empty()) throw ParameterViolation("empty integer literal");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    auto caret = s.find('^', i);
    BigInt v;
    if (caret == std::string::npos) {
        if (mpz_set_str(v.get_mpz_t(), s.substr(i).c_str(), 10) != 0)
            throw ParameterViolation("bad integer literal: " + s0);
    } else {
        BigInt base;
        if (mpz_set_str(base.get_mpz_t(), s.substr(i, caret - i).c_str(), 10) != 0)
            throw ParameterViolation("bad integer literal: " + s0);
        unsigned long e = std::stoul(s.substr(caret + 1));
        v = big_pow(base, e);
    }
    return neg ? BigInt(-v) : v;
}

Interval::Interval(const Rat& lo, const Rat& hi, unsigned bits) : bits_(bits) {
    if (lo > hi) throw ParameterViolation("interval with lo > hi");
    lo_ = round_down(lo, bits);
    hi_ = round_up(hi, bits);
}

Interval Interval::make_raw(const Rat& lo, const Rat& hi, unsigned bits) {
    Interval iv;
    iv.lo_ = lo;
    iv.hi_ = hi;
    iv.bits_ = bits;
    assert(lo <= hi);
    return iv;
}

Interval Interval::with_bits(unsigned bits) const {
    return make_raw(round_down(lo_, bits), round_up(hi_, bits), bits);
}

Interval operator+(const Interval& a, const Interval& b) {
    unsigned bits = std::max(a.bits_, b.bits_);
    return Interval::make_raw(round_down(a.lo_ + b.lo_, bits), round_up(a.hi_ + b.hi_, bits), bits);
}

Interval operator-(const Interval& a, const Interval& b) {
    unsigned bits = std::max(a.bits_, b.bits_);
    return Interval::make_raw(round_down(a.lo_ - b.hi_, bits), round_up(a.hi_ - b.lo_, bits), bits);
}

Interval operator*(const Interval& a, const Interval& b) {
    unsigned bits = std::max(a.bits_, b.bits_);
    Rat p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return Interval::make_raw(round_down(lo, bits), round_up(hi, bits), bits);
}

Interval Interval::inv() const {
    if (contains_zero()) throw DivisionByZero("interval contains zero");
    Rat lo = 1 / hi_, hi = 1 / lo_;
    return make_raw(round_down(lo, bits_), round_up(hi, bits_), bits_);
}

Interval operator/(const Interval& a, const Interval& b) { return a * b.inv(); }

Interval Interval::abs() const {
    if (sgn(lo_) >= 0) return *this;
    if (sgn(hi_) <= 0) return -*this;
    return make_raw(Rat(0), std::max(Rat(-lo_), hi_), bits_);
}

namespace {

// x^e for x >= 0, square-and-multiply, rounding each step in the stated direction
Rat pow_nonneg_dir(const Rat& x, unsigned long e, unsigned bits, bool up) {
    Rat acc(1), base = x;
    auto rnd = [&](const Rat& v) { return up ? round_up(v, bits) : round_down(v, bits); };
    while (e > 0) {
        if (e & 1) acc = rnd(acc * base);
        e >>= 1;
        if (e) base = rnd(base * base);
    }
    return acc;
}

}  // namespace

Interval Interval::pow_int(long n) const {
    if (n == 0) return Interval(Rat(1), bits_);
    if (n < 0) return pow_int(-n).inv();
    unsigned long e = static_cast<unsigned long>(n);
    if (n % 2 == 0) {
        // even powers factor through |x|: monotone on [0, inf)
        Interval a = abs();
        return make_raw(pow_nonneg_dir(a.lo_, e, bits_, false), pow_nonneg_dir(a.hi_, e, bits_, true), bits_);
    }
    // odd powers are monotone on all of R
    Rat lo = sgn(lo_) >= 0 ? pow_nonneg_dir(lo_, e, bits_, false) : Rat(-pow_nonneg_dir(Rat(-lo_), e, bits_, true));
    Rat hi = sgn(hi_) >= 0 ? pow_nonneg_dir(hi_, e, bits_, true) : Rat(-pow_nonneg_dir(Rat(-hi_), e, bits_, false));
    return make_raw(lo, hi, bits_);
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    return make_raw(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_), std::max(a.bits_, b.bits_));
}

Interval Interval::intersect(const Interval& o) const {
    Rat lo = std::max(lo_, o.lo_), hi = std::min(hi_, o.hi_);
    if (lo > hi) throw TheoremViolation("empty interval intersection");
    return make_raw(lo, hi, std::max(bits_, o.bits_));
}

namespace {

struct MpfrVal {
    mpfr_t f;
    explicit MpfrVal(unsigned bits) { mpfr_init2(f, std::max(8u, bits)); }
    ~MpfrVal() { mpfr_clear(f); }
    MpfrVal(const MpfrVal&) = delete;
    MpfrVal& operator=(const MpfrVal&) = delete;
};

Rat mpfr_to_rat(const mpfr_t f) {
    if (mpfr_zero_p(f)) return Rat(0);
    if (!mpfr_number_p(f)) throw UndecidableAtPrecision("mpfr overflow/nan in transcendental kernel");
    BigInt m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), f);
    Rat r;
    if (e >= 0)
        r = Rat(m * (BigInt(1) << static_cast<unsigned long>(e)), 1);
    else
        r = Rat(m, BigInt(1) << static_cast<unsigned long>(-e));
    r.canonicalize();
    return r;
}

// One-endpoint transcendental evaluation with directed rounding.
template <typename Op>
Rat mpfr_endpoint(const Rat& x, unsigned bits, mpfr_rnd_t rnd, Op op) {
    MpfrVal in(bits + 8), out(bits + 8);
    mpfr_set_q(in.f, x.get_mpq_t(), rnd);
    op(out.f, in.f, rnd);
    return mpfr_to_rat(out.f);
}

}  // namespace

Interval Interval::sqrt() const {
    if (sgn(lo_) < 0) throw ParameterViolation("sqrt of interval with negative lower endpoint");
    Rat lo = mpfr_endpoint(lo_, bits_, MPFR_RNDD, [](mpfr_t o, const mpfr_t i, mpfr_rnd_t r) { mpfr_sqrt(o, i, r); });
    Rat hi = mpfr_endpoint(hi_, bits_, MPFR_RNDU, [](mpfr_t o, const mpfr_t i, mpfr_rnd_t r) { mpfr_sqrt(o, i, r); });
    if (sgn(lo) < 0) lo = 0;
    return make_raw(lo, hi, bits_);
}

Interval Interval::nth_root(unsigned long n) const {
    if (n == 0) throw ParameterViolation("0th root");
    if (sgn(lo_) < 0) throw ParameterViolation("nth_root of interval with negative lower endpoint");
    Rat lo = mpfr_endpoint(lo_, bits_, MPFR_RNDD,
                           [n](mpfr_t o, const mpfr_t i, mpfr_rnd_t r) { mpfr_rootn_ui(o, i, n, r); });
    Rat hi = mpfr_endpoint(hi_, bits_, MPFR_RNDU,
                           [n](mpfr_t o, const mpfr_t i, mpfr_rnd_t r) { mpfr_rootn_ui(o, i, n, r); });
    if (sgn(lo) < 0) lo = 0;
    return make_raw(lo, hi, bits_);
}

Interval Interval::ln() const {
    if (sgn(lo_) <= 0) throw ParameterViolation("ln of interval touching (-inf, 0]");
    Rat lo = mpfr_endpoint(lo_, bits_, MPFR_RNDD, [](mpfr_t o, const mpfr_t i, mpfr_rnd_t r) { mpfr_log(o, i, r); });
    Rat hi = mpfr_endpoint(hi_, bits_, MPFR_RNDU, [](mpfr_t o, const mpfr_t i, mpfr_rnd_t r) { mpfr_log(o, i, r); });
    return make_raw(lo, hi, bits_);
}

Interval Interval::exp() const {
    Rat lo = mpfr_endpoint(lo_, bits_, MPFR_RNDD, [](mpfr_t o, const mpfr_t i, mpfr_rnd_t r) { mpfr_exp(o, i, r); });
    Rat hi = mpfr_endpoint(hi_, bits_, MPFR_RNDU, [](mpfr_t o, const mpfr_t i, mpfr_rnd_t r) { mpfr_exp(o, i, r); });
    return make_raw(lo, hi, bits_);
}

Interval Interval::log2() const {
    if (sgn(lo_) <= 0) throw ParameterViolation("log2 of interval touching (-inf, 0]");
    Rat lo = mpfr_endpoint(lo_, bits_, MPFR_RNDD, [](mpfr_t o, const mpfr_t i, mpfr_rnd_t r) { mpfr_log2(o, i, r); });
    Rat hi = mpfr_endpoint(hi_, bits_, MPFR_RNDU, [](mpfr_t o, const mpfr_t i, mpfr_rnd_t r) { mpfr_log2(o, i, r); });
    return make_raw(lo, hi, bits_);
}

Interval Interval::exp2() const {
    Rat lo = mpfr_endpoint(lo_, bits_, MPFR_RNDD, [](mpfr_t o, const mpfr_t i, mpfr_rnd_t r) { mpfr_exp2(o, i, r); });
    Rat hi = mpfr_endpoint(hi_, bits_, MPFR_RNDU, [](mpfr_t o, const mpfr_t i, mpfr_rnd_t r) { mpfr_exp2(o, i, r); });
    return make_raw(lo, hi, bits_);
}

Interval Interval::pow(const Interval& t) const {
    if (t.is_point() && t.lo().get_den() == 1 && t.lo().get_num().fits_slong_p())
        return pow_int(t.lo().get_num().get_si());
    return (log2() * t).exp2();
}

Interval Interval::sqrt2(unsigned bits) { return Interval(Rat(2), bits).sqrt(); }

Interval Interval::pi(unsigned bits) {
    MpfrVal lo(bits + 8), hi(bits + 8);
    mpfr_const_pi(lo.f, MPFR_RNDD);
    mpfr_const_pi(hi.f, MPFR_RNDU);
    return make_raw(mpfr_to_rat(lo.f), mpfr_to_rat(hi.f), bits);
}

Interval Interval::ln2(unsigned bits) {
    MpfrVal lo(bits + 8), hi(bits + 8);
    mpfr_const_log2(lo.f, MPFR_RNDD);
    mpfr_const_log2(hi.f, MPFR_RNDU);
    return make_raw(mpfr_to_rat(lo.f), mpfr_to_rat(hi.f), bits);
}

Interval Interval::log2_e(unsigned bits) { return Interval(Rat(1), bits + 8) / ln2(bits + 8); }

std::string Interval::str() const {
    return "[" + rat_string(lo_) + ", " + rat_string(hi_) + "]";
}

std::string Interval::str_decimal(int digits) const {
    MpfrVal lo(256), hi(256);
    mpfr_set_q(lo.f, lo_.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.f, hi_.get_mpq_t(), MPFR_RNDU);
    char* slo = nullptr;
    char* shi = nullptr;
    mpfr_asprintf(&slo, "%.*Rg", digits, lo.f);
    mpfr_asprintf(&shi, "%.*Rg", digits, hi.f);
    std::string out = std::string("[") + slo + ", " + shi + "]";
    mpfr_free_str(slo);
    mpfr_free_str(shi);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) { return os << iv.str_decimal(); }

}  // namespace effap
