#include "effap/roots.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace effap {

Interval Box::abs(unsigned bits) const {
    Interval r2 = re.with_bits(bits).pow_int(2) + im.with_bits(bits).pow_int(2);
    return r2.sqrt();
}

CBox CBox::inv() const {
    Interval n = re.pow_int(2) + im.pow_int(2);
    if (n.contains_zero()) throw DivisionByZero("complex box inverse");
    return {re / n, -im / n};
}

namespace {

int sign_at(const IntPoly& f, const Rat& x) {
    // cheap operands: exact evaluation immediately
    size_t xbits = mpz_sizeinbase(x.get_num().get_mpz_t(), 2) + mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
    size_t fbits = mpz_sizeinbase(f.size().get_mpz_t(), 2);
    size_t exact_cost = xbits * static_cast<size_t>(std::max(f.degree(), 1)) + fbits;
    if (exact_cost < 8192) return sgn(f.eval(x));
    // otherwise escalate interval precision; beyond the exact cost the
    // interval route cannot be cheaper, so fall back
    for (unsigned bits = 256; static_cast<size_t>(bits) < 2 * exact_cost; bits *= 4) {
        Interval v = f.eval(Interval(x, bits), bits);
        if (v.certainly_positive()) return 1;
        if (v.certainly_negative()) return -1;
    }
    return sgn(f.eval(x));
}

}  // namespace

SturmChain::SturmChain(const IntPoly& f) {
    IntPoly p0 = f.primitive_part();
    if (p0.is_zero()) throw ParameterViolation("Sturm chain of zero polynomial");
    chain_.push_back(p0);
    IntPoly p1 = p0.derivative();
    if (p1.is_zero()) return;
    chain_.push_back(p1.primitive_part());
    while (chain_.back().degree() > 0) {
        const IntPoly& a = chain_[chain_.size() - 2];
        const IntPoly& b = chain_.back();
        auto [q, r] = RatPoly::divmod(RatPoly::from_int(a), RatPoly::from_int(b));
        (void)q;
        if (r.is_zero()) break;
        chain_.push_back((-r).int_scaled());
    }
}

int SturmChain::variations_at(const Rat& x) const {
    int var = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::variations_at_pos_inf() const {
    int var = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = sgn(p.lead());
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::variations_at_neg_inf() const {
    int var = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = sgn(p.lead()) * (p.degree() % 2 == 0 ? 1 : -1);
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count(const Rat& a, const Rat& b) const {
    if (a >= b) return 0;
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

std::vector<Interval> isolate_real_roots(const IntPoly& f, unsigned bits) {
    if (f.is_zero()) throw ParameterViolation("isolate_real_roots of zero polynomial");
    IntPoly g = f.squarefree_part();
    std::vector<Interval> out;
    if (g.degree() <= 0) return out;
    if (g.degree() == 1) {
        Rat r(-g[0], g[1]);
        r.canonicalize();
        out.emplace_back(Interval::make_raw(r, r, bits));
        return out;
    }
    SturmChain sturm(g);
    Rat B = g.root_bound();
    struct Seg {
        Rat a, b;
        int n;
    };
    std::deque<Seg> work;
    int total = sturm.count(-B, B);
    if (total > 0) work.push_back({-B, B, total});
    while (!work.empty()) {
        Seg s = work.front();
        work.pop_front();
        if (s.n == 1) {
            // exactly one root in (a, b]; endpoints are never roots by construction
            out.push_back(refine_real_root(g, Interval::make_raw(s.a, s.b, bits), bits));
            continue;
        }
        Rat m = (s.a + s.b) / 2;
        if (sign_at(g, m) == 0) {
            out.emplace_back(Interval::make_raw(m, m, bits));
            Rat d = (s.b - s.a) / 4;
            while (sturm.count(m - d, m + d) > 1 || sign_at(g, m - d) == 0 || sign_at(g, m + d) == 0) d /= 2;
            int left = sturm.count(s.a, m - d);
            int right = sturm.count(m + d, s.b);
            if (left > 0) work.push_back({s.a, m - d, left});
            if (right > 0) work.push_back({m + d, s.b, right});
            continue;
        }
        int left = sturm.count(s.a, m);
        int right = s.n - left;
        if (left > 0) work.push_back({s.a, m, left});
        if (right > 0) work.push_back({m, s.b, right});
    }
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo() < y.lo(); });
    return out;
}

Interval refine_real_root(const IntPoly& f, const Interval& bracket, unsigned bits) {
    Rat lo = bracket.lo(), hi = bracket.hi();
    if (lo == hi) return Interval::make_raw(lo, hi, bits);
    int sl = sign_at(f, lo);
    int sh = sign_at(f, hi);
    if (sl == 0) return Interval::make_raw(lo, lo, bits);
    if (sh == 0) return Interval::make_raw(hi, hi, bits);
    if (sl == sh) throw ParameterViolation("refine_real_root: no sign change across bracket");
    IntPoly df = f.derivative();
    Rat target = Rat(1, BigInt(1) << bits);
    unsigned long budget = static_cast<unsigned long>(std::max<long>(0, ceil_log2_abs(hi - lo))) + bits + 64 +
                           8 * static_cast<unsigned long>(f.degree());
    unsigned long bisections = 0;
    long magbits = 0;
    {
        Rat m = std::max(Rat(abs(lo)), Rat(abs(hi)));
        if (sgn(m) != 0) magbits = std::max<long>(0, floor_log2_abs(m) + 1);
    }
    while (hi - lo > target) {
        Rat w = hi - lo;
        long acc = -floor_log2_abs(w);
        // enough significant bits to resolve both the root magnitude and the
        // cancellation depth of f near the root
        unsigned wb = static_cast<unsigned>(std::max<long>(64, 2 * std::max<long>(acc, 1) + 2 * magbits + 128));
        Interval X = Interval::make_raw(lo, hi, wb);
        bool newton_ok = false;
        Interval dfX = df.eval(X, wb);
        if (!dfX.contains_zero()) {
            Rat m = round_down(X.mid(), wb);
            if (m <= lo || m >= hi) m = X.mid();
            Interval Fm = f.eval(Interval(m, wb), wb);
            Interval N = Interval(m, wb) - Fm / dfX;
            Rat nlo = std::max(lo, N.lo()), nhi = std::min(hi, N.hi());
            if (nlo <= nhi && (nhi - nlo) < w * Rat(3, 4)) {
                int snl = nlo > lo ? sign_at(f, nlo) : sl;
                int snh = nhi < hi ? sign_at(f, nhi) : sh;
                if (snl == 0) return Interval::make_raw(nlo, nlo, bits);
                if (snh == 0) return Interval::make_raw(nhi, nhi, bits);
                if (snl == sl && snh == sh) {
                    lo = nlo;
                    hi = nhi;
                    newton_ok = true;
                }
            }
        }
        if (!newton_ok) {
            Rat m = lo + w / 2;
            int sm = sign_at(f, m);
            if (sm == 0) return Interval::make_raw(m, m, bits);
            if (sm == sl)
                lo = m;
            else
                hi = m;
            if (++bisections > budget) throw TheoremViolation("refine_real_root failed to converge");
        }
    }
    return Interval::make_raw(lo, hi, bits);
}

namespace {

struct EdgeHit {};

// f restricted to the segment z(t) = (a + b t) + i (c + d t), t in [0,1]:
// (u, v) are integer polynomials, each a positive multiple of Re/Im f(z(t)).
std::pair<IntPoly, IntPoly> edge_restriction(const IntPoly& f, const Rat& a, const Rat& b, const Rat& c,
                                             const Rat& d) {
    RatPoly P({a, b}), Q({c, d});
    RatPoly U, V;
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        RatPoly nu = U * P - V * Q;
        RatPoly nv = U * Q + V * P;
        U = nu + RatPoly::constant(Rat(f[i]));
        V = nv;
    }
    return {U.int_scaled(), V.int_scaled()};
}

// position on the 8-cycle of sign states around the origin
int state_pos(int su, int sv) {
    static const int table[3][3] = {
        // sv = -1, 0, +1 ; su rows -1, 0, +1
        {5, 4, 3},
        {6, -1, 2},
        {7, 0, 1},
    };
    int p = table[su + 1][sv + 1];
    if (p < 0) throw EdgeHit{};
    return p;
}

int centered_mod8(int d) {
    d %= 8;
    if (d < 0) d += 8;
    return d > 4 ? d - 8 : d;
}

// uniform sign of a Bernstein coefficient vector: +1 when all >= 0 (some > 0),
// -1 when all <= 0; the convex-hull property then pins the sign on the piece,
// with zeros possible only at the piece endpoints
int uniform_sign(const std::vector<Rat>& b) {
    bool pos = true, neg = true;
    for (const auto& c : b) {
        int s = sgn(c);
        if (s > 0) neg = false;
        if (s < 0) pos = false;
        if (!pos && !neg) return 0;
    }
    return pos ? 1 : -1;
}

// power basis -> Bernstein coefficients on [0,1]: b_i = sum_j C(i,j)/C(n,j) a_j
std::vector<Rat> to_bernstein(const IntPoly& p) {
    size_t n = static_cast<size_t>(p.degree());
    std::vector<Rat> b(n + 1, Rat(0));
    for (size_t i = 0; i <= n; ++i) {
        Rat acc(0);
        for (size_t j = 0; j <= i; ++j) {
            if (p[j] == 0) continue;
            BigInt num, den;
            mpz_bin_uiui(num.get_mpz_t(), i, j);
            mpz_bin_uiui(den.get_mpz_t(), n, j);
            Rat w(num, den);
            w.canonicalize();
            acc += w * Rat(p[j]);
        }
        b[i] = acc;
    }
    return b;
}

// de Casteljau split at the midpoint: left = first column, right = diagonal
void decasteljau_half(const std::vector<Rat>& b, std::vector<Rat>& left, std::vector<Rat>& right) {
    size_t n = b.size();
    std::vector<Rat> row = b;
    left.resize(n);
    right.resize(n);
    left[0] = row.front();
    right[n - 1] = row.back();
    for (size_t lvl = 1; lvl < n; ++lvl) {
        for (size_t i = 0; i + lvl < n; ++i) row[i] = (row[i] + row[i + 1]) / 2;
        left[lvl] = row.front();
        right[n - 1 - lvl] = row[n - 1 - lvl];
    }
}

// net eighth-turns when the path is confined to a closed half-circle of sign
// states: positions are linearly ordered there, so the net is the difference
int arc_steps(int s0, int s1, int anchor) {
    int l0 = centered_mod8(s0 - anchor);
    int l1 = centered_mod8(s1 - anchor);
    if (l0 < -2 || l0 > 2 || l1 < -2 || l1 > 2) throw TheoremViolation("edge walk left its sign arc");
    return l1 - l0;
}

// Signed eighth-turns of (u(t), v(t)) between the exact endpoint states of a
// piece, on Bernstein coefficient vectors. When one coordinate has uniform
// sign the state path is confined to a half-circle; only double straddles
// split further.
int walk_steps(const std::vector<Rat>& bu, const std::vector<Rat>& bv, const IntPoly& u,
               const IntPoly& v, const Rat& t0, const Rat& t1, int s0, int s1, int depth) {
    int su = uniform_sign(bu);
    int sv = uniform_sign(bv);
    if (su > 0) return arc_steps(s0, s1, 0);   // u >= 0: states around (+,0)
    if (su < 0) return arc_steps(s0, s1, 4);   // u <= 0: states around (-,0)
    if (sv > 0) return arc_steps(s0, s1, 2);   // v >= 0: states around (0,+)
    if (sv < 0) return arc_steps(s0, s1, 6);   // v <= 0: states around (0,-)

    if (depth > 2000) throw UndecidableAtPrecision("edge walk bisection depth");
    if (depth == 64) {
        // persistent double straddle: rule out a common root on this piece
        IntPoly g = IntPoly::gcd(u, v);
        if (g.degree() > 0 && (sign_at(g, t0) == 0 || sign_at(g, t1) == 0 || SturmChain(g).count(t0, t1) > 0))
            throw EdgeHit{};
    }
    std::vector<Rat> buL, buR, bvL, bvR;
    decasteljau_half(bu, buL, buR);
    decasteljau_half(bv, bvL, bvR);
    int um = sgn(buL.back()), vm = sgn(bvL.back());
    if (um == 0 && vm == 0) throw EdgeHit{};
    int sm = state_pos(um, vm);
    Rat m = (t0 + t1) / 2;
    return walk_steps(buL, bvL, u, v, t0, m, s0, sm, depth + 1) +
           walk_steps(buR, bvR, u, v, m, t1, sm, s1, depth + 1);
}

// Signed eighth-turns of (u(t), v(t)) around the origin for t in [0,1].
int edge_turns(const IntPoly& u, const IntPoly& v) {
    if (u.is_zero() && v.is_zero()) throw EdgeHit{};
    if (u.is_zero() || v.is_zero()) {
        const IntPoly& nz = u.is_zero() ? v : u;
        if (sign_at(nz, Rat(0)) == 0 || sign_at(nz, Rat(1)) == 0) throw EdgeHit{};
        if (nz.degree() >= 1 && SturmChain(nz).count(Rat(0), Rat(1)) > 0) throw EdgeHit{};
        return 0;
    }
    std::vector<Rat> bu = to_bernstein(u), bv = to_bernstein(v);
    int u0 = sgn(bu.front()), v0 = sgn(bv.front());
    int u1 = sgn(bu.back()), v1 = sgn(bv.back());
    if ((u0 == 0 && v0 == 0) || (u1 == 0 && v1 == 0)) throw EdgeHit{};
    return walk_steps(bu, bv, u, v, Rat(0), Rat(1), state_pos(u0, v0), state_pos(u1, v1), 0);
}

int winding_impl(const IntPoly& f, const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) {
    int turns = 0;
    {
        auto [u, v] = edge_restriction(f, x0, x1 - x0, y0, Rat(0));
        turns += edge_turns(u, v);
    }
    {
        auto [u, v] = edge_restriction(f, x1, Rat(0), y0, y1 - y0);
        turns += edge_turns(u, v);
    }
    {
        auto [u, v] = edge_restriction(f, x1, x0 - x1, y1, Rat(0));
        turns += edge_turns(u, v);
    }
    {
        auto [u, v] = edge_restriction(f, x0, Rat(0), y1, y0 - y1);
        turns += edge_turns(u, v);
    }
    if (turns % 8 != 0) throw TheoremViolation("winding turns not a multiple of 8");
    return turns / 8;
}

struct CRect {
    Rat x0, x1, y0, y1;
    Rat width() const { return x1 - x0; }
    Rat height() const { return y1 - y0; }
};

// splits along the longer side; the split line is perturbed off any root
std::pair<CRect, CRect> split_rect(const IntPoly& f, const CRect& r, int& wa, int& wb, int expected) {
    bool vertical = r.width() >= r.height();
    Rat lo = vertical ? r.x0 : r.y0;
    Rat hi = vertical ? r.x1 : r.y1;
    Rat w = hi - lo;
    for (int attempt = 0; attempt < 31; ++attempt) {
        long j = (attempt + 1) / 2 * (attempt % 2 == 1 ? 1 : -1);  // 0, +1, -1, +2, -2, ...
        Rat m = lo + w / 2 + w * Rat(j, 64);
        CRect a = r, b = r;
        if (vertical) {
            a.x1 = m;
            b.x0 = m;
        } else {
            a.y1 = m;
            b.y0 = m;
        }
        try {
            wa = winding_impl(f, a.x0, a.x1, a.y0, a.y1);
            wb = winding_impl(f, b.x0, b.x1, b.y0, b.y1);
        } catch (const EdgeHit&) {
            continue;
        }
        if (wa + wb != expected) throw TheoremViolation("root count split mismatch");
        return {a, b};
    }
    throw UndecidableAtPrecision("could not find a root-free split line");
}

CRect refine_complex_singleton(const IntPoly& f, const IntPoly& df, CRect r, const Rat& target) {
    (void)df;
    size_t n = f.coeffs().size();
    while (r.width() > target || r.height() > target) {
        Rat w = std::max(r.width(), r.height());
        long acc = -floor_log2_abs(w);
        unsigned wb = static_cast<unsigned>(std::max<long>(64, 2 * std::max<long>(acc, 1) + 64));
        bool contracted = false;
        {
            // complex Taylor shift at the midpoint: b[k] = f^(k)(m)/k!, so the
            // Newton data stays at the local scale of the box
            Rat mx = (r.x0 + r.x1) / 2, my = (r.y0 + r.y1) / 2;
            CBox M{Interval(mx, wb), Interval(my, wb)};
            std::vector<CBox> b;
            b.reserve(n);
            for (const auto& c : f.coeffs()) b.push_back(CBox{Interval(Rat(c), wb), Interval(Rat(0), wb)});
            for (size_t i = 0; i + 1 < n; ++i)
                for (size_t j = n - 1; j-- > i;) b[j] = b[j] + M * b[j + 1];
            CBox S{Interval::make_raw(r.x0 - mx, r.x1 - mx, wb),
                   Interval::make_raw(r.y0 - my, r.y1 - my, wb)};
            // f'(m + s) over the box: Horner on coefficients (j+1) b[j+1]
            CBox dfZ{Interval(Rat(0), wb), Interval(Rat(0), wb)};
            for (size_t j = n; j-- > 1;) {
                dfZ = dfZ * S;
                Interval jj(Rat(static_cast<long>(j)), wb);
                dfZ.re += jj * b[j].re;
                dfZ.im += jj * b[j].im;
            }
            if (!dfZ.contains_zero()) {
                CBox N = M - b[0] * dfZ.inv();
                Rat nx0 = std::max(r.x0, N.re.lo()), nx1 = std::min(r.x1, N.re.hi());
                Rat ny0 = std::max(r.y0, N.im.lo()), ny1 = std::min(r.y1, N.im.hi());
                if (nx0 <= nx1 && ny0 <= ny1 && std::max(nx1 - nx0, ny1 - ny0) < w * Rat(3, 4)) {
                    r = {nx0, nx1, ny0, ny1};
                    contracted = true;
                }
            }
        }
        if (!contracted) {
            int wa = 0, wb2 = 0;
            auto [a, b] = split_rect(f, r, wa, wb2, 1);
            r = (wa == 1) ? a : b;
        }
    }
    return r;
}

}  // namespace

int winding_number(const IntPoly& f, const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) {
    if (f.is_zero()) throw ParameterViolation("winding_number of zero polynomial");
    if (x0 >= x1 || y0 >= y1) throw ParameterViolation("winding_number: degenerate rectangle");
    try {
        return winding_impl(f, x0, x1, y0, y1);
    } catch (const EdgeHit&) {
        throw ParameterViolation("winding_number: root on box boundary");
    }
}

std::vector<RootBox> isolate_roots(const IntPoly& f, unsigned bits, const RunConfig& cfg) {
    (void)cfg;
    if (f.is_zero()) throw ParameterViolation("isolate_roots of zero polynomial");
    if (f.degree() == 0) return {};
    Rat target = Rat(1, BigInt(1) << bits);
    std::vector<RootBox> out;
    std::vector<size_t> factor_of;            // parallel: index into `factors`
    std::vector<long> partner;                // conjugate partner index, -1 for real
    auto factors = f.squarefree_decomposition();
    for (size_t fi = 0; fi < factors.size(); ++fi) {
        const IntPoly& g = factors[fi].first;
        int mult = factors[fi].second;
        std::vector<Interval> real = isolate_real_roots(g, bits);
        for (const auto& iv : real) {
            out.push_back(RootBox{Box{iv, Interval(Rat(0), bits)}, mult, true});
            factor_of.push_back(fi);
            partner.push_back(-1);
        }
        int nonreal = g.degree() - static_cast<int>(real.size());
        if (nonreal % 2 != 0) throw TheoremViolation("non-real root count must be even");
        int pairs = nonreal / 2;
        if (pairs == 0) continue;

        // lower bound for |Im| over the non-real roots: half the root separation
        unsigned sb = 128;
        int n = g.degree();
        Interval norm2(Rat(0), sb);
        for (const auto& c : g.coeffs()) norm2 += Interval(Rat(c), sb).pow_int(2);
        Interval sep = Interval(Rat(3), sb).sqrt() /
                       (Interval(Rat(n), sb).pow_int(n + 2).sqrt() * norm2.sqrt().pow_int(n - 1));
        Rat ylow = sep.lo() / 4;
        if (sgn(ylow) <= 0) throw TheoremViolation("separation bound collapsed");
        Rat B = g.root_bound();
        if (ylow >= B) ylow = B / 2;

        CRect topbox{-B, B, ylow, B};
        int w0;
        try {
            w0 = winding_impl(g, topbox.x0, topbox.x1, topbox.y0, topbox.y1);
        } catch (const EdgeHit&) {
            throw TheoremViolation("outer box boundary hit a root");
        }
        if (w0 != pairs) throw TheoremViolation("upper half-plane count mismatch");
        IntPoly dg = g.derivative();
        std::deque<std::pair<CRect, int>> work;
        work.push_back({topbox, w0});
        while (!work.empty()) {
            auto [r, cnt] = work.front();
            work.pop_front();
            if (cnt == 1) {
                CRect fine = refine_complex_singleton(g, dg, r, target);
                Box b{Interval::make_raw(fine.x0, fine.x1, bits), Interval::make_raw(fine.y0, fine.y1, bits)};
                long up = static_cast<long>(out.size());
                out.push_back(RootBox{b, mult, false});
                factor_of.push_back(fi);
                partner.push_back(up + 1);
                out.push_back(RootBox{b.conjugate(), mult, false});
                factor_of.push_back(fi);
                partner.push_back(up);
                continue;
            }
            int wa = 0, wb = 0;
            auto [a, b] = split_rect(g, r, wa, wb, cnt);
            if (wa > 0) work.push_back({a, wa});
            if (wb > 0) work.push_back({b, wb});
        }
    }

    // boxes of distinct squarefree factors hold distinct roots; shrink until disjoint
    if (factors.size() > 1) {
        for (int rounds = 0;; ++rounds) {
            if (rounds > 128) throw UndecidableAtPrecision("box disjointness refinement");
            bool overlap = false;
            for (size_t i = 0; i < out.size() && !overlap; ++i)
                for (size_t j = i + 1; j < out.size() && !overlap; ++j)
                    if (factor_of[i] != factor_of[j] && out[i].box.intersects(out[j].box)) overlap = true;
            if (!overlap) break;
            for (size_t i = 0; i < out.size(); ++i) {
                RootBox& rb = out[i];
                const IntPoly& g = factors[factor_of[i]].first;
                unsigned nb = std::max(rb.box.re.bits() * 2, 256u);
                if (rb.is_real) {
                    if (!rb.box.re.is_point()) rb.box.re = refine_real_root(g, rb.box.re, nb);
                    rb.box.im = Interval(Rat(0), nb);
                } else if (sgn(rb.box.im.lo()) > 0) {
                    CRect r{rb.box.re.lo(), rb.box.re.hi(), rb.box.im.lo(), rb.box.im.hi()};
                    CRect fine = refine_complex_singleton(g, g.derivative(), r, Rat(1, BigInt(1) << nb));
                    rb.box = Box{Interval::make_raw(fine.x0, fine.x1, nb),
                                 Interval::make_raw(fine.y0, fine.y1, nb)};
                    out[static_cast<size_t>(partner[i])].box = rb.box.conjugate();
                }
            }
        }
    }

    long msum = 0;
    for (const auto& rb : out) msum += rb.multiplicity;
    if (msum != f.degree()) throw TheoremViolation("multiplicities do not sum to the degree");

    std::sort(out.begin(), out.end(), [](const RootBox& a, const RootBox& b) {
        if (a.box.re.lo() != b.box.re.lo()) return a.box.re.lo() < b.box.re.lo();
        return a.box.im.lo() < b.box.im.lo();
    });
    return out;
}

Interval max_root_modulus(const IntPoly& f, unsigned bits, const RunConfig& cfg) {
    auto roots = isolate_roots(f, bits, cfg);
    if (roots.empty()) throw ParameterViolation("max_root_modulus of constant polynomial");
    Rat lo(0), hi(0);
    bool first = true;
    for (const auto& rb : roots) {
        Interval m = rb.box.abs(bits);
        if (first) {
            lo = m.lo();
            hi = m.hi();
            first = false;
        } else {
            lo = std::max(lo, m.lo());
            hi = std::max(hi, m.hi());
        }
    }
    return Interval::make_raw(lo, hi, std::max(bits, 64u));
}

}  // namespace effap
