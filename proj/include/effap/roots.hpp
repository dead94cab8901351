#pragma once

#include <optional>
#include <vector>

#include "effap/config.hpp"
#include "effap/interval.hpp"
#include "effap/poly.hpp"

namespace effap {

// Axis-aligned complex box. Real points/roots carry im == [0,0].
struct Box {
    Interval re;
    Interval im;

    bool is_real() const { return im.is_point() && sgn(im.lo()) == 0; }
    bool contains(const Box& o) const { return re.contains_interval(o.re) && im.contains_interval(o.im); }
    bool intersects(const Box& o) const { return re.intersects(o.re) && im.intersects(o.im); }
    Interval abs(unsigned bits) const;  // enclosure of |z| over the box
    Box conjugate() const { return Box{re, -im}; }
};

struct RootBox {
    Box box;
    int multiplicity = 1;
    bool is_real = false;
};

// Sturm chain of a primitive integer polynomial; counts real roots exactly.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& f);
    // number of distinct real roots in (a, b]
    int count(const Rat& a, const Rat& b) const;
    int count_all() const;  // all real roots
    int variations_at(const Rat& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

private:
    std::vector<IntPoly> chain_;
};

// Distinct real roots of f (any f != 0) as disjoint intervals.
// Point intervals mark exact rational roots. Multiplicity against the
// squarefree decomposition is the caller's business; these are the roots of
// the squarefree part.
std::vector<Interval> isolate_real_roots(const IntPoly& f, unsigned bits);

// Sign-bracket refinement of a real root: f must change sign across the
// bracket. Newton-accelerated; result has width <= 2^-bits.
Interval refine_real_root(const IntPoly& f, const Interval& bracket, unsigned bits);

// Number of roots of f (squarefree, f != 0) strictly inside the rectangle,
// by exact argument-principle counting on the boundary. Throws
// ParameterViolation if a root lies on the boundary.
int winding_number(const IntPoly& f, const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1);

// Full certified isolation: pairwise disjoint boxes, each containing exactly
// `multiplicity` roots; multiplicities sum to deg f; real roots in real boxes;
// every box has both widths <= 2^-bits.
std::vector<RootBox> isolate_roots(const IntPoly& f, unsigned bits, const RunConfig& cfg = RunConfig());

// Enclosure of max |root| over all complex roots of f.
Interval max_root_modulus(const IntPoly& f, unsigned bits, const RunConfig& cfg = RunConfig());

// Complex rectangle arithmetic, used by the interval Newton refinement.
struct CBox {
    Interval re, im;
    CBox operator+(const CBox& o) const { return {re + o.re, im + o.im}; }
    CBox operator-(const CBox& o) const { return {re - o.re, im - o.im}; }
    CBox operator*(const CBox& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    CBox inv() const;  // requires 0 not in the box
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

}  // namespace effap
