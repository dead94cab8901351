#include "effap/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>
#include <tuple>

namespace effap {

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(const BigInt& coeff, unsigned exp) {
    if (coeff == 0) return IntPoly();
    std::vector<BigInt> v(exp + 1, BigInt(0));
    v[exp] = coeff;
    return IntPoly(std::move(v));
}

const BigInt& IntPoly::lead() const {
    if (c_.empty()) throw ParameterViolation("lead of zero polynomial");
    return c_.back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            v[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> v = c_;
    for (auto& x : v) x = -x;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const BigInt& k) const {
    if (k == 0) return IntPoly();
    std::vector<BigInt> v = c_;
    for (auto& x : v) x *= k;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> v(c_.size() + k, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<BigInt> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(v));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    std::vector<BigInt> v = c_;
    for (auto& x : v) x /= g;
    return IntPoly(std::move(v));
}

bool IntPoly::divides(const IntPoly& other) const {
    if (is_zero()) return other.is_zero();
    auto [q, r] = RatPoly::divmod(RatPoly::from_int(other), RatPoly::from_int(*this));
    if (!r.is_zero()) return false;
    for (const auto& x : q.coeffs())
        if (x.get_den() != 1) return false;
    return true;
}

IntPoly IntPoly::exact_div(const IntPoly& divisor) const {
    auto [q, r] = RatPoly::divmod(RatPoly::from_int(*this), RatPoly::from_int(divisor));
    if (!r.is_zero()) throw ParameterViolation("exact_div: nonzero remainder");
    std::vector<BigInt> v;
    v.reserve(q.coeffs().size());
    for (const auto& x : q.coeffs()) {
        if (x.get_den() != 1) throw ParameterViolation("exact_div: non-integer quotient");
        v.push_back(x.get_num());
    }
    return IntPoly(std::move(v));
}

namespace {

// Pseudo-remainder with a guaranteed *positive* multiplier:
// pos_mult * a = q*b + r, deg r < deg b. Used for sign-faithful PRS.
IntPoly signed_prem(const IntPoly& a, const IntPoly& b) {
    assert(!b.is_zero());
    IntPoly r = a;
    const BigInt& lb = b.lead();
    long steps = r.degree() - b.degree() + 1;
    if (steps <= 0) return r;
    // even power of the leading coefficient keeps the multiplier positive
    long k = steps % 2 == 0 ? steps : steps + 1;
    BigInt mult = big_pow(lb, static_cast<unsigned long>(k));
    RatPoly rr = RatPoly::from_int(r.scaled(mult));
    auto [q, rem] = RatPoly::divmod(rr, RatPoly::from_int(b));
    (void)q;
    std::vector<BigInt> v;
    v.reserve(rem.coeffs().size());
    for (const auto& x : rem.coeffs()) {
        assert(x.get_den() == 1);
        v.push_back(x.get_num());
    }
    return IntPoly(std::move(v));
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly f = a, g = b;
    if (f.degree() < g.degree()) std::swap(f, g);
    if (g.is_zero()) {
        if (f.is_zero()) return IntPoly();
        IntPoly r = f.primitive_part();
        return r.lead() < 0 ? -r : r;
    }
    f = f.primitive_part();
    g = g.primitive_part();
    while (!g.is_zero()) {
        IntPoly r = signed_prem(f, g).primitive_part();
        f = g;
        g = r;
    }
    return f.lead() < 0 ? -f : f;
}

BigInt IntPoly::resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return BigInt(0);
    int m = a.degree(), n = b.degree();
    if (m == 0) return big_pow(a.lead(), static_cast<unsigned long>(n));
    if (n == 0) return big_pow(b.lead(), static_cast<unsigned long>(m));
    // Sylvester matrix, fraction-free Bareiss
    size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<BigInt>> s(N, std::vector<BigInt>(N, BigInt(0)));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) s[row][row + k] = a[static_cast<size_t>(m - k)];
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k) s[n + row][row + k] = b[static_cast<size_t>(n - k)];

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
            for (size_t j = k + 1; j < N; ++j) {
                s[i][j] = (s[k][k] * s[i][j] - s[i][k] * s[k][j]) / denom;
            }
            s[i][k] = 0;
        }
        denom = s[k][k];
    }
    return sign > 0 ? s[N - 1][N - 1] : BigInt(-s[N - 1][N - 1]);
}

std::vector<std::pair<IntPoly, int>> IntPoly::squarefree_decomposition() const {
    std::vector<std::pair<IntPoly, int>> out;
    if (is_zero() || degree() == 0) return out;
    IntPoly f = primitive_part();
    IntPoly a = gcd(f, f.derivative());
    IntPoly b = f.exact_div(a);
    IntPoly c = f.derivative().exact_div(a);
    IntPoly d = c - b.derivative();
    int i = 1;
    while (true) {
        if (b.degree() == 0) break;
        IntPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g.lead() < 0 ? -g : g, i);
        b = b.exact_div(g);
        c = d.exact_div(g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

IntPoly IntPoly::squarefree_part() const {
    if (is_zero() || degree() == 0) return primitive_part();
    IntPoly g = gcd(*this, derivative());
    return exact_div(g).primitive_part();
}

BigInt IntPoly::eval_int(const BigInt& x) const {
    BigInt acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

namespace {

// shared powers for sparse evaluation: x^e via square-and-multiply with memo
template <typename T>
T power_of(const T& x, unsigned long e, std::map<unsigned long, T>& memo, const T& one) {
    if (e == 0) return one;
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    T r = (e % 2 == 0) ? power_of(x, e / 2, memo, one) : x;
    if (e % 2 == 0)
        r = r * r;
    else
        r = r * power_of(x, e - 1, memo, one);
    memo.emplace(e, r);
    return r;
}

}  // namespace

Rat IntPoly::eval(const Rat& x) const {
    if (is_zero()) return Rat(0);
    size_t nz = term_count();
    if (nz * 4 <= c_.size()) {
        std::map<unsigned long, Rat> memo;
        Rat one(1), acc(0);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            acc += Rat(c_[i]) * power_of(x, i, memo, one);
        }
        return acc;
    }
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
}

Interval IntPoly::eval(const Interval& x, unsigned bits) const {
    Interval acc(Rat(0), bits);
    if (is_zero()) return acc;
    size_t nz = term_count();
    if (nz * 4 <= c_.size()) {
        std::map<unsigned long, Interval> memo;
        Interval one(Rat(1), bits);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            acc += Interval(Rat(c_[i]), bits) * power_of(x.with_bits(bits), i, memo, one);
        }
        return acc;
    }
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Interval(Rat(c_[i]), bits);
    return acc;
}

IntPoly IntPoly::compose_linear_int(const BigInt& a, const BigInt& b) const {
    // Horner: f(a + b t)
    IntPoly acc;
    IntPoly lin({a, b});
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + IntPoly::constant(c_[i]);
    return acc;
}

BigInt IntPoly::size() const {
    BigInt m = 0;
    for (const auto& x : c_) {
        BigInt a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

BigInt IntPoly::length() const {
    BigInt s = 0;
    for (const auto& x : c_) s += abs(x);
    return s;
}

size_t IntPoly::term_count() const {
    size_t n = 0;
    for (const auto& x : c_)
        if (x != 0) ++n;
    return n;
}

Rat IntPoly::cauchy_root_bound() const {
    if (is_zero() || degree() == 0) return Rat(1);
    Rat m(0);
    for (size_t i = 0; i + 1 < c_.size(); ++i) {
        Rat q(abs(c_[i]), abs(c_.back()));
        q.canonicalize();
        if (q > m) m = q;
    }
    return m + 1;
}

Rat IntPoly::root_bound() const {
    Rat cauchy = cauchy_root_bound();
    if (is_zero() || degree() <= 1) return cauchy;
    size_t n = c_.size() - 1;
    Rat fuji(0);
    for (size_t k = 1; k <= n; ++k) {
        const BigInt& a = c_[n - k];
        if (a == 0) continue;
        Rat q(abs(a), abs(c_.back()));
        q.canonicalize();
        Rat r = Interval(q, 64).nth_root(static_cast<unsigned long>(k)).hi();
        if (r > fuji) fuji = r;
    }
    // 65/64 bump turns the non-strict Fujiwara inequality into a strict bound
    fuji = 2 * fuji * Rat(65, 64);
    if (fuji < Rat(1, 2)) fuji = Rat(1, 2);
    return std::min(cauchy, fuji);
}

IntPoly IntPoly::parse(const std::string& s) {
    // terms: [+-] [coeff] [* ] [var [^exp]]
    std::vector<BigInt> coeffs;
    auto bump = [&](unsigned exp, const BigInt& v) {
        if (coeffs.size() <= exp) coeffs.resize(exp + 1, BigInt(0));
        coeffs[exp] += v;
    };
    size_t i = 0, n = s.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    bool first = true;
    while (i < n) {
        int sign = 1;
        skip_ws();
        if (i < n && (s[i] == '+' || s[i] == '-')) {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParameterViolation("polynomial parse: expected +/- at '" + s.substr(i) + "'");
        }
        first = false;
        skip_ws();
        BigInt coeff = 1;
        bool have_coeff = false;
        if (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            mpz_set_str(coeff.get_mpz_t(), s.substr(i, j - i).c_str(), 10);
            i = j;
            have_coeff = true;
        }
        skip_ws();
        if (i < n && s[i] == '*') {
            ++i;
            skip_ws();
        }
        unsigned exp = 0;
        if (i < n && (s[i] == 't' || s[i] == 'x' || s[i] == 'u')) {
            ++i;
            exp = 1;
            skip_ws();
            if (i < n && s[i] == '^') {
                ++i;
                skip_ws();
                size_t j = i;
                while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw ParameterViolation("polynomial parse: missing exponent");
                exp = static_cast<unsigned>(std::stoul(s.substr(i, j - i)));
                i = j;
            }
        } else if (!have_coeff) {
            throw ParameterViolation("polynomial parse: empty term in '" + s + "'");
        }
        bump(exp, sign > 0 ? coeff : BigInt(-coeff));
        skip_ws();
    }
    return IntPoly(std::move(coeffs));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        BigInt a = abs(c_[i]);
        if (first) {
            if (c_[i] < 0) os << "-";
            first = false;
        } else {
            os << (c_[i] < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a;
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---- RatPoly ----

void RatPoly::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RatPoly RatPoly::from_int(const IntPoly& p) {
    std::vector<Rat> v;
    v.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) v.emplace_back(x);
    return RatPoly(std::move(v));
}

const Rat& RatPoly::lead() const {
    if (c_.empty()) throw ParameterViolation("lead of zero polynomial");
    return c_.back();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x = -x;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::scaled(const Rat& k) const {
    if (sgn(k) == 0) return RatPoly();
    std::vector<Rat> v = c_;
    for (auto& x : v) x *= k;
    return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division");
    std::vector<Rat> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rat> q(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
    for (int i = a.degree(); i >= db; --i) {
        Rat& top = r[static_cast<size_t>(i)];
        if (sgn(top) == 0) continue;
        Rat f = top / b.lead();
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= f * b.c_[static_cast<size_t>(j)];
        top = 0;
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly RatPoly::gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly f = a, g = b;
    while (!g.is_zero()) {
        auto [q, r] = divmod(f, g);
        (void)q;
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    return f.scaled(1 / f.lead());
}

std::tuple<RatPoly, RatPoly, RatPoly> RatPoly::extended_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(Rat(1)), s1;
    RatPoly t0, t1 = RatPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s = s0 - q * s1;
        RatPoly t = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rat inv = 1 / r0.lead();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return RatPoly(std::move(v));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

IntPoly RatPoly::int_scaled() const {
    if (is_zero()) return IntPoly();
    BigInt l = 1;
    for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<BigInt> v;
    v.reserve(c_.size());
    for (const auto& x : c_) {
        Rat y = x * Rat(l);
        assert(y.get_den() == 1);
        v.push_back(y.get_num());
    }
    return IntPoly(std::move(v)).primitive_part();
}

// ---- BiPoly ----

BiPoly BiPoly::from_terms(const std::map<Key, BigInt>& terms) {
    BiPoly p;
    for (const auto& [k, v] : terms)
        if (v != 0) p.c_.emplace(k, v);
    return p;
}

BiPoly BiPoly::from_x_poly(const IntPoly& p) {
    BiPoly out;
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        if (p[i] != 0) out.c_.emplace(Key{static_cast<unsigned>(i), 0}, p[i]);
    return out;
}

BiPoly BiPoly::from_y_poly(const IntPoly& p) {
    BiPoly out;
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        if (p[i] != 0) out.c_.emplace(Key{0, static_cast<unsigned>(i)}, p[i]);
    return out;
}

int BiPoly::x_degree() const {
    int d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, static_cast<int>(k.first));
    return d;
}

int BiPoly::y_degree() const {
    int d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, static_cast<int>(k.second));
    return d;
}

BigInt BiPoly::coeff(unsigned i, unsigned j) const {
    auto it = c_.find(Key{i, j});
    return it == c_.end() ? BigInt(0) : it->second;
}

void BiPoly::set_coeff(unsigned i, unsigned j, const BigInt& v) {
    if (v == 0)
        c_.erase(Key{i, j});
    else
        c_[Key{i, j}] = v;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [k, v] : b.c_) {
        auto it = out.c_.find(k);
        if (it == out.c_.end())
            out.c_.emplace(k, v);
        else {
            it->second += v;
            if (it->second == 0) out.c_.erase(it);
        }
    }
    return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [k, v] : b.c_) {
        auto it = out.c_.find(k);
        if (it == out.c_.end())
            out.c_.emplace(k, BigInt(-v));
        else {
            it->second -= v;
            if (it->second == 0) out.c_.erase(it);
        }
    }
    return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_) {
            BiPoly::Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = out.c_.find(k);
            if (it == out.c_.end())
                out.c_.emplace(k, va * vb);
            else {
                it->second += va * vb;
                if (it->second == 0) out.c_.erase(it);
            }
        }
    return out;
}

BiPoly BiPoly::partial_x_scaled(unsigned l) const {
    BiPoly out;
    for (const auto& [k, v] : c_) {
        if (k.first < l) continue;
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), k.first, l);
        out.c_.emplace(Key{k.first - l, k.second}, v * binom);
    }
    return out;
}

BiPoly BiPoly::derivative_x() const {
    BiPoly out;
    for (const auto& [k, v] : c_) {
        if (k.first == 0) continue;
        out.c_.emplace(Key{k.first - 1, k.second}, v * static_cast<long>(k.first));
    }
    return out;
}

BiPoly BiPoly::derivative_y() const {
    BiPoly out;
    for (const auto& [k, v] : c_) {
        if (k.second == 0) continue;
        out.c_.emplace(Key{k.first, k.second - 1}, v * static_cast<long>(k.second));
    }
    return out;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
    std::map<unsigned long, Rat> mx, my;
    Rat one(1), acc(0);
    for (const auto& [k, v] : c_)
        acc += Rat(v) * power_of(x, k.first, mx, one) * power_of(y, k.second, my, one);
    return acc;
}

Interval BiPoly::eval(const Interval& x, const Interval& y, unsigned bits) const {
    std::map<unsigned long, Interval> mx, my;
    Interval one(Rat(1), bits), acc(Rat(0), bits);
    Interval xb = x.with_bits(bits), yb = y.with_bits(bits);
    for (const auto& [k, v] : c_)
        acc += Interval(Rat(v), bits) * power_of(xb, k.first, mx, one) * power_of(yb, k.second, my, one);
    return acc;
}

IntPoly BiPoly::y_coeff(unsigned i) const {
    std::vector<BigInt> v;
    for (const auto& [k, c] : c_) {
        if (k.first != i) continue;
        if (v.size() <= k.second) v.resize(k.second + 1, BigInt(0));
        v[k.second] = c;
    }
    return IntPoly(std::move(v));
}

IntPoly BiPoly::x_coeff(unsigned j) const {
    std::vector<BigInt> v;
    for (const auto& [k, c] : c_) {
        if (k.second != j) continue;
        if (v.size() <= k.first) v.resize(k.first + 1, BigInt(0));
        v[k.first] = c;
    }
    return IntPoly(std::move(v));
}

BigInt BiPoly::size() const {
    BigInt m = 0;
    for (const auto& [k, v] : c_) {
        BigInt a = abs(v);
        if (a > m) m = a;
    }
    return m;
}

BigInt BiPoly::length() const {
    BigInt s = 0;
    for (const auto& [k, v] : c_) s += abs(v);
    return s;
}

std::string BiPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [k, v] = *it;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        BigInt a = abs(v);
        bool unit = a == 1 && (k.first > 0 || k.second > 0);
        if (!unit) os << a;
        if (k.first > 0) os << (unit ? "" : "*") << "x" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) os << (k.first > 0 || !unit ? "*" : "") << "y" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    return os.str();
}

std::pair<BigInt, BigInt> size_and_length(const IntPoly& p) { return {p.size(), p.length()}; }
std::pair<BigInt, BigInt> size_and_length(const BiPoly& p) { return {p.size(), p.length()}; }

GelfondReport check_gelfond(const IntPoly& p1, const IntPoly& p2) {
    GelfondReport r;
    r.lhs = p1.size() * p2.size();
    IntPoly prod = p1 * p2;
    long n = std::max(p1.degree(), 0) + std::max(p2.degree(), 0);
    r.rhs = (BigInt(1) << static_cast<unsigned long>(n)) * prod.size();
    r.holds = r.lhs <= r.rhs;
    return r;
}

bool check_binom_bound(unsigned N, const RunConfig& cfg) {
    if (N < 1) throw ParameterViolation("check_binom_bound requires N >= 1");
    // max over 0 <= l <= n <= N is the central binomial at n = N
    BigInt maxbin = 0;
    for (unsigned n = 0; n <= N; ++n) {
        BigInt b;
        mpz_bin_uiui(b.get_mpz_t(), n, n / 2);
        if (b > maxbin) maxbin = b;
    }
    for (unsigned bits : PrecisionSchedule(cfg)) {
        Interval rhs = (Interval(Rat(2), bits) / Interval::pi(bits)).sqrt() *
                       Interval::exact_int(BigInt(1) << N, bits) / Interval(Rat(N), bits).sqrt();
        if (rhs.certainly_ge(Rat(maxbin))) return true;
        if (rhs.certainly_lt(Rat(maxbin))) return false;
    }
    throw UndecidableAtPrecision("binomial bound comparison");
}

}  // namespace effap
