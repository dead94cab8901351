#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "effap/config.hpp"
#include "effap/interval.hpp"

namespace effap {

// Univariate polynomial with exact integer coefficients, index = exponent.
// Zero polynomial: empty coefficient vector, degree() == -1 (sentinel only,
// never used in exponent arithmetic).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const BigInt& v) { return IntPoly({v}); }
    static IntPoly monomial(const BigInt& coeff, unsigned exp);
    // variable t or x, integer coefficients: "t^3 - 5*t^2 + 1"
    static IntPoly parse(const std::string& s);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& operator[](size_t i) const { return c_[i]; }
    BigInt coeff(size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& lead() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    IntPoly scaled(const BigInt& k) const;
    IntPoly shifted(unsigned k) const;  // * t^k

    IntPoly derivative() const;
    BigInt content() const;                  // gcd of |coefficients|, 0 for zero poly
    IntPoly primitive_part() const;          // content divided out, sign of lead preserved
    bool divides(const IntPoly& other) const;
    IntPoly exact_div(const IntPoly& divisor) const;  // throws if not exact

    static IntPoly gcd(const IntPoly& a, const IntPoly& b);  // primitive, positive lead
    static BigInt resultant(const IntPoly& a, const IntPoly& b);
    // Yun decomposition: returns {(g_i, i)} with f = content * prod g_i^i, g_i squarefree.
    std::vector<std::pair<IntPoly, int>> squarefree_decomposition() const;
    IntPoly squarefree_part() const;

    BigInt eval_int(const BigInt& x) const;
    Rat eval(const Rat& x) const;            // sparse-aware exact evaluation
    Interval eval(const Interval& x, unsigned bits) const;
    IntPoly compose_linear_int(const BigInt& a, const BigInt& b) const;  // f(a + b t)

    BigInt size() const;    // max |a_i|
    BigInt length() const;  // sum |a_i|
    size_t term_count() const;

    // 1 + max |a_i / lead|: all complex roots have modulus < this
    Rat cauchy_root_bound() const;
    // min of the Cauchy bound and 2 max_k |a_(n-k)/a_n|^(1/k); much tighter
    // for polynomials with one large low-order coefficient
    Rat root_bound() const;

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<BigInt> c_;
};

// Rational-coefficient univariate polynomial; support type for field arithmetic
// and edge restrictions.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static RatPoly from_int(const IntPoly& p);
    static RatPoly constant(const Rat& v) { return RatPoly({v}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& lead() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator-() const;
    RatPoly scaled(const Rat& k) const;

    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
    static RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic
    // g = gcd(a,b) together with u,v: u*a + v*b = g
    static std::tuple<RatPoly, RatPoly, RatPoly> extended_gcd(const RatPoly& a, const RatPoly& b);

    RatPoly derivative() const;
    Rat eval(const Rat& x) const;
    // primitive integer polynomial with the same roots and the same sign on R
    IntPoly int_scaled() const;

private:
    void normalize();
    std::vector<Rat> c_;
};

// Bivariate polynomial with exact integer coefficients, sparse map
// (x-exponent, y-exponent) -> coefficient; stored coefficients all nonzero.
class BiPoly {
public:
    using Key = std::pair<unsigned, unsigned>;

    BiPoly() = default;
    static BiPoly zero() { return BiPoly(); }
    static BiPoly from_terms(const std::map<Key, BigInt>& terms);
    static BiPoly from_x_poly(const IntPoly& p);  // p(x) as BiPoly
    static BiPoly from_y_poly(const IntPoly& p);

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, BigInt>& terms() const { return c_; }
    int x_degree() const;  // -1 for zero
    int y_degree() const;
    BigInt coeff(unsigned i, unsigned j) const;
    void set_coeff(unsigned i, unsigned j, const BigInt& v);

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

    // (1/l!) d^l/dx^l: coefficient C(i,l)*p_ij at (i-l, j); zero if l > x_degree
    BiPoly partial_x_scaled(unsigned l) const;
    BiPoly derivative_x() const;
    BiPoly derivative_y() const;

    Rat eval(const Rat& x, const Rat& y) const;
    Interval eval(const Interval& x, const Interval& y, unsigned bits) const;

    IntPoly y_coeff(unsigned i) const;  // Q_i(y), coefficient of x^i
    IntPoly x_coeff(unsigned j) const;  // P_j(x), coefficient of y^j

    BigInt size() const;
    BigInt length() const;
    size_t term_count() const { return c_.size(); }

    std::string str() const;

private:
    std::map<Key, BigInt> c_;
};

// size/length for either polynomial type, as the (size, length) pair
std::pair<BigInt, BigInt> size_and_length(const IntPoly& p);
std::pair<BigInt, BigInt> size_and_length(const BiPoly& p);

struct GelfondReport {
    BigInt lhs;  // |P1| * |P2|
    BigInt rhs;  // 2^n * |P1*P2|
    bool holds;
};
GelfondReport check_gelfond(const IntPoly& p1, const IntPoly& p2);

// C(n,l) <= sqrt(2/pi) * 2^N / sqrt(N) for all 0 <= l <= n <= N,
// certified by outward-rounded evaluation of the right side.
bool check_binom_bound(unsigned N, const RunConfig& cfg = RunConfig());

}  // namespace effap
