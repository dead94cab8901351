#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "effap/errors.hpp"

namespace effap {

using BigInt = mpz_class;
using Rat = mpq_class;

BigInt big_pow(const BigInt& base, unsigned long e);
Rat rat_pow(const Rat& base, long e);
// floor(log2 |x|) for x != 0, exact.
long floor_log2_abs(const Rat& x);
// ceil(log2 |x|) for x != 0, exact.
long ceil_log2_abs(const Rat& x);

// Largest/smallest dyadic with `bits` significant bits on the given side of x.
Rat round_down(const Rat& x, unsigned bits);
Rat round_up(const Rat& x, unsigned bits);

std::string rat_string(const Rat& x);
Rat parse_rat(const std::string& s);     // "n", "n/d"
BigInt parse_bigint(const std::string& s);  // "n", "2^k", "-2^k", "n^k"

// Closed interval with exact rational (dyadic after rounding) endpoints.
// Every operation rounds lo down and hi up; the exact image of any selection
// of points from the inputs lies inside the output.
class Interval {
public:
    Interval() : lo_(0), hi_(0), bits_(128) {}
    explicit Interval(const Rat& point, unsigned bits = 128) : lo_(point), hi_(point), bits_(bits) {}
    Interval(const Rat& lo, const Rat& hi, unsigned bits);
    Interval(long lo, long hi, unsigned bits) : Interval(Rat(lo), Rat(hi), bits) {}

    static Interval exact(const Rat& v, unsigned bits = 128) { return Interval(v, bits); }
    static Interval exact_int(const BigInt& v, unsigned bits = 128) { return Interval(Rat(v), bits); }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    unsigned bits() const { return bits_; }
    Rat width() const { return hi_ - lo_; }
    Rat mid() const { return (hi_ + lo_) / 2; }

    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
    bool contains_interval(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool strictly_contains(const Interval& o) const { return lo_ < o.lo_ && o.hi_ < hi_; }
    bool intersects(const Interval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }

    bool certainly_positive() const { return sgn(lo_) > 0; }
    bool certainly_negative() const { return sgn(hi_) < 0; }
    bool certainly_nonzero() const { return certainly_positive() || certainly_negative(); }
    bool certainly_lt(const Rat& x) const { return hi_ < x; }
    bool certainly_le(const Rat& x) const { return hi_ <= x; }
    bool certainly_gt(const Rat& x) const { return lo_ > x; }
    bool certainly_ge(const Rat& x) const { return lo_ >= x; }
    bool certainly_lt(const Interval& o) const { return hi_ < o.lo_; }
    bool certainly_le(const Interval& o) const { return hi_ <= o.lo_; }
    bool certainly_gt(const Interval& o) const { return lo_ > o.hi_; }
    bool certainly_ge(const Interval& o) const { return lo_ >= o.hi_; }

    Interval with_bits(unsigned bits) const;

    Interval operator-() const { return make_raw(-hi_, -lo_, bits_); }
    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);  // throws if b contains 0
    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }

    Interval inv() const;
    Interval abs() const;
    Interval pow_int(long n) const;
    Interval sqrt() const;             // requires lo >= 0
    Interval nth_root(unsigned long n) const;  // requires lo >= 0
    Interval ln() const;               // requires lo > 0
    Interval exp() const;
    Interval log2() const;             // requires lo > 0
    Interval exp2() const;
    Interval pow(const Interval& t) const;  // x^t for lo > 0

    static Interval hull(const Interval& a, const Interval& b);
    Interval intersect(const Interval& o) const;  // throws TheoremViolation if empty

    static Interval sqrt2(unsigned bits);
    static Interval pi(unsigned bits);
    static Interval ln2(unsigned bits);
    static Interval log2_e(unsigned bits);

    std::string str() const;         // "[lo, hi]" as exact rationals
    std::string str_decimal(int digits = 12) const;

    // Bypasses rounding; caller guarantees lo <= hi.
    static Interval make_raw(const Rat& lo, const Rat& hi, unsigned bits);

private:
    Rat lo_, hi_;
    unsigned bits_;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

}  // namespace effap
