#include "effap/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace effap {

BigInt max_norm(const IntVec& v) {
    BigInt m = 0;
    for (const auto& x : v) {
        BigInt a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

IntVec sign_normalized(IntVec v) {
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

IntMat kernel_basis(const IntMat& mat, size_t ncols) {
    // Column elimination over Z with a unimodular transform: A*U = [H | 0];
    // the trailing columns of U span the *saturated* integer kernel (every
    // integer solution, not just a finite-index sublattice).
    size_t m = mat.size();
    std::vector<IntVec> A(m, IntVec(ncols, BigInt(0)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < ncols && j < mat[i].size(); ++j) A[i][j] = mat[i][j];
    std::vector<IntVec> U(ncols, IntVec(ncols, BigInt(0)));
    for (size_t j = 0; j < ncols; ++j) U[j][j] = 1;  // U[j] is the j-th column

    auto col_sub = [&](size_t j, size_t c, const BigInt& q) {
        for (size_t i = 0; i < m; ++i) A[i][j] -= q * A[i][c];
        for (size_t i = 0; i < ncols; ++i) U[j][i] -= q * U[c][i];
    };
    auto nearest_div = [](const BigInt& a, const BigInt& b) {
        BigInt q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (2 * r > abs(b)) q += (b > 0 ? 1 : -1);
        return q;
    };

    size_t col = 0;
    for (size_t r = 0; r < m && col < ncols; ++r) {
        while (true) {
            size_t piv = ncols;
            BigInt best;
            for (size_t j = col; j < ncols; ++j) {
                if (A[r][j] == 0) continue;
                BigInt a = abs(A[r][j]);
                if (piv == ncols || a < best) {
                    piv = j;
                    best = a;
                }
            }
            if (piv == ncols) break;  // row r vanishes on the tail columns
            if (piv != col) {
                for (size_t i = 0; i < m; ++i) std::swap(A[i][col], A[i][piv]);
                std::swap(U[col], U[piv]);
            }
            bool residue = false;
            for (size_t j = col + 1; j < ncols; ++j) {
                if (A[r][j] == 0) continue;
                BigInt q = nearest_div(A[r][j], A[r][col]);
                if (q != 0) col_sub(j, col, q);
                if (A[r][j] != 0) residue = true;
            }
            if (!residue) {
                ++col;
                break;
            }
        }
    }

    IntMat basis;
    for (size_t j = col; j < ncols; ++j) basis.push_back(sign_normalized(U[j]));
    return basis;
}

namespace {

Rat dot(const IntVec& a, const IntVec& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i] * b[i]);
    return s;
}

Rat dotq(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct GramSchmidt {
    std::vector<std::vector<Rat>> star;
    std::vector<std::vector<Rat>> mu;  // mu[i][j], j < i
    std::vector<Rat> B;                // |b*_i|^2

    explicit GramSchmidt(const IntMat& b) { recompute(b); }

    void recompute(const IntMat& b) {
        size_t n = b.size();
        star.assign(n, {});
        mu.assign(n, {});
        B.assign(n, Rat(0));
        for (size_t i = 0; i < n; ++i) {
            std::vector<Rat> v(b[i].size());
            for (size_t k = 0; k < b[i].size(); ++k) v[k] = Rat(b[i][k]);
            mu[i].assign(i, Rat(0));
            for (size_t j = 0; j < i; ++j) {
                if (sgn(B[j]) == 0) {
                    mu[i][j] = 0;
                    continue;
                }
                Rat m(0);
                for (size_t k = 0; k < v.size(); ++k) m += Rat(b[i][k]) * star[j][k];
                m /= B[j];
                mu[i][j] = m;
                for (size_t k = 0; k < v.size(); ++k) v[k] -= m * star[j][k];
            }
            B[i] = dotq(v, v);
            star[i] = std::move(v);
        }
    }
};

BigInt nearest_int(const Rat& m) {
    Rat half = m + Rat(1, 2);
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
    return r;
}

// integer candidates x with B*(x - c)^2 <= T lie in [lo, hi]
void int_range(const Rat& c, const Rat& B, const Rat& T, BigInt& lo, BigInt& hi, bool& empty) {
    if (sgn(T) < 0) {
        empty = true;
        return;
    }
    empty = false;
    if (sgn(B) == 0) throw TheoremViolation("degenerate Gram-Schmidt norm in enumeration");
    Rat rad2 = T / B;
    BigInt snum, sden;
    mpz_sqrt(snum.get_mpz_t(), rad2.get_num().get_mpz_t());
    snum += 1;
    mpz_sqrt(sden.get_mpz_t(), rad2.get_den().get_mpz_t());
    if (sden == 0) sden = 1;
    Rat s(snum, sden);  // >= sqrt(rad2)
    Rat l = c - s, h = c + s;
    mpz_cdiv_q(lo.get_mpz_t(), l.get_num().get_mpz_t(), l.get_den().get_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
}

}  // namespace

void lll_reduce(IntMat& basis) {
    if (basis.size() <= 1) return;
    size_t n = basis.size();
    GramSchmidt gs(basis);
    const Rat delta(3, 4);
    size_t k = 1;
    unsigned long guard = 0;
    while (k < n) {
        if (++guard > 2000000) throw ResourceExhausted("LLL iteration bound");
        bool reduced_any = false;
        for (size_t j = k; j-- > 0;) {
            BigInt r = nearest_int(gs.mu[k][j]);
            if (r != 0) {
                for (size_t c = 0; c < basis[k].size(); ++c) basis[k][c] -= r * basis[j][c];
                reduced_any = true;
            }
        }
        if (reduced_any) gs.recompute(basis);
        if (gs.B[k] < (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1]) {
            std::swap(basis[k], basis[k - 1]);
            gs.recompute(basis);
            k = k > 1 ? k - 1 : 1;
        } else {
            ++k;
        }
    }
}

std::optional<IntVec> enumerate_shortest(const IntMat& basis, const Rat& radius2, std::uint64_t node_budget) {
    if (basis.empty()) return std::nullopt;
    size_t n = basis.size();
    GramSchmidt gs(basis);
    for (const auto& Bi : gs.B)
        if (sgn(Bi) == 0) throw ParameterViolation("enumerate_shortest requires an independent basis");

    std::optional<IntVec> best;
    BigInt best_norm;
    std::vector<BigInt> x(n, BigInt(0));
    std::uint64_t nodes = 0;

    std::function<void(size_t, const Rat&)> rec = [&](size_t level, const Rat& remaining) {
        if (++nodes > node_budget) throw ResourceExhausted("lattice enumeration budget");
        size_t i = level - 1;
        Rat c(0);
        for (size_t j = i + 1; j < n; ++j) c -= gs.mu[j][i] * Rat(x[j]);
        BigInt lo, hi;
        bool empty;
        int_range(c, gs.B[i], remaining, lo, hi, empty);
        if (empty) return;
        for (BigInt xi = lo; xi <= hi; ++xi) {
            Rat diff = Rat(xi) - c;
            Rat contrib = gs.B[i] * diff * diff;
            if (contrib > remaining) continue;
            x[i] = xi;
            if (i == 0) {
                IntVec v(basis[0].size(), BigInt(0));
                bool allzero = true;
                for (size_t j = 0; j < n; ++j) {
                    if (x[j] == 0) continue;
                    allzero = false;
                    for (size_t cix = 0; cix < v.size(); ++cix) v[cix] += x[j] * basis[j][cix];
                }
                if (!allzero) {
                    IntVec nv = sign_normalized(std::move(v));
                    BigInt nn = max_norm(nv);
                    if (!best || nn < best_norm || (nn == best_norm && lex_less(nv, *best))) {
                        best = nv;
                        best_norm = nn;
                    }
                }
            } else {
                rec(i, remaining - contrib);
            }
        }
        x[i] = 0;
    };
    rec(n, radius2);
    return best;
}

std::optional<IntVec> smallest_within_maxnorm(const IntMat& basis, const Rat& bound,
                                              std::uint64_t node_budget) {
    if (basis.empty() || sgn(bound) < 0) return std::nullopt;
    size_t dim = basis[0].size();
    Rat radius2 = Rat(static_cast<long>(dim)) * bound * bound;

    // a fitting basis vector caps the winning max-norm, so the enumeration
    // ball can shrink to dim * (that max-norm)^2 without losing the optimum
    std::optional<BigInt> cap;
    for (const auto& b : basis) {
        BigInt mn = max_norm(b);
        if (Rat(mn) <= bound && (!cap || mn < *cap)) cap = mn;
    }
    if (cap) {
        Rat shrunk = Rat(static_cast<long>(dim)) * Rat(*cap) * Rat(*cap);
        if (shrunk < radius2) radius2 = shrunk;
    }
    auto best = enumerate_shortest(basis, radius2, node_budget);
    if (best && Rat(max_norm(*best)) <= bound) return best;
    if (cap) throw TheoremViolation("enumeration missed a fitting basis vector");
    return std::nullopt;
}

std::optional<IntVec> box_search_annihilator(const IntMat& mat, size_t ncols, long bound,
                                             std::uint64_t budget) {
    if (bound < 0) return std::nullopt;
    double count = 1;
    for (size_t i = 0; i < ncols; ++i) {
        count *= 2.0 * static_cast<double>(bound) + 1.0;
        if (count > static_cast<double>(budget)) throw ResourceExhausted("box search too large");
    }
    IntVec v(ncols, BigInt(-bound));
    std::optional<IntVec> best;
    BigInt best_norm;
    while (true) {
        bool allzero = true;
        for (const auto& x : v)
            if (x != 0) allzero = false;
        if (!allzero) {
            bool ok = true;
            for (const auto& row : mat) {
                BigInt s = 0;
                for (size_t j = 0; j < ncols; ++j) s += row[j] * v[j];
                if (s != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                IntVec nv = sign_normalized(v);
                BigInt nn = max_norm(nv);
                if (!best || nn < best_norm || (nn == best_norm && lex_less(nv, *best))) {
                    best = nv;
                    best_norm = nn;
                }
            }
        }
        size_t i = 0;
        while (i < ncols && v[i] == bound) {
            v[i] = -bound;
            ++i;
        }
        if (i == ncols) break;
        v[i] += 1;
    }
    return best;
}

}  // namespace effap
