#pragma once

#include <utility>
#include <vector>

#include "mlim/rat.hpp"

namespace mlim {

// Dense univariate polynomial over Rat. c[k] holds the coefficient of x^k;
// trailing zeros are always trimmed, so the zero polynomial has empty c.
struct UPoly {
    std::vector<Rat> c;

    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    static UPoly constant(const Rat& r) {
        UPoly p;
        if (r != 0) p.c = {r};
        return p;
    }
    static UPoly x() { return UPoly({Rat(0), Rat(1)}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    // deg(0) = -1 by convention.
    long deg() const { return static_cast<long>(c.size()) - 1; }
    const Rat& lc() const { return c.back(); }
    Rat coeff(std::size_t k) const { return k < c.size() ? c[k] : Rat(0); }

    bool operator==(const UPoly& o) const { return c == o.c; }
};

UPoly u_add(const UPoly& a, const UPoly& b);
UPoly u_sub(const UPoly& a, const UPoly& b);
UPoly u_neg(const UPoly& a);
UPoly u_mul(const UPoly& a, const UPoly& b);
UPoly u_scale(const UPoly& a, const Rat& s);
UPoly u_mul_xk(const UPoly& a, std::size_t k);
// Field division with remainder; b must be nonzero.
std::pair<UPoly, UPoly> u_divmod(const UPoly& a, const UPoly& b);
// Exact division; throws structural_error if the remainder is nonzero.
UPoly u_div_exact(const UPoly& a, const UPoly& b);
// Monic gcd (gcd(0,0) = 0).
UPoly u_gcd(const UPoly& a, const UPoly& b);
UPoly u_derivative(const UPoly& a);
// a / gcd(a, a'): same roots, all simple.
UPoly u_squarefree(const UPoly& a);
Rat u_eval(const UPoly& a, const Rat& x);
double u_eval_double(const UPoly& a, double x);
// p(x + a)
UPoly u_shift(const UPoly& p, const Rat& a);
// p(s * x)
UPoly u_scale_arg(const UPoly& p, const Rat& s);
// x^deg(p) * p(1/x)
UPoly u_reverse(const UPoly& p);
// p(-x)
UPoly u_negate_arg(const UPoly& p);
// Integer-primitive representative with positive leading coefficient; same
// roots, stabler Sturm chains.
UPoly u_normalize_primitive(const UPoly& p);
// Rational root bound: all real roots lie in (-B, B).
Rat u_root_bound(const UPoly& p);
// Resultant of two univariate polynomials.
Rat u_resultant(const UPoly& a, const UPoly& b);

// Evaluate p over the interval [lo, hi] with exact rational interval
// arithmetic; returns an enclosure of {p(x) : x in [lo, hi]}.
std::pair<Rat, Rat> u_interval_eval(const UPoly& p, const Rat& lo, const Rat& hi);

struct SturmChain {
    std::vector<UPoly> seq;
    // Number of distinct real roots in the open interval (a, b); requires
    // p(a) != 0 and p(b) != 0.
    long count(const Rat& a, const Rat& b) const;
    long variations(const Rat& x) const;
};

// Chain of the squarefree part of p.
SturmChain sturm_chain(const UPoly& p);

// Isolating intervals for all real roots, sorted increasingly. An exact
// rational root r is reported as the degenerate interval [r, r]; otherwise
// the interval (lo, hi) contains exactly one root and p(lo), p(hi) != 0.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPoly& p);

// Bivariate polynomial as a dense vector in one distinguished variable t,
// with UPoly coefficients in the other variable.
using BiPoly = std::vector<UPoly>;

long bipoly_deg(const BiPoly& a); // degree in t (-1 for zero)
void bipoly_trim(BiPoly& a);
// Res_t(a, b) as a polynomial in the coefficient variable, computed by
// evaluation/interpolation.
UPoly bipoly_resultant(const BiPoly& a, const BiPoly& b);
// Substitute t -> (z - lambda * s) in sum_i coeff_i(s) t^i, producing a
// bivariate polynomial in s (dense) with UPoly-in-z coefficients.
BiPoly bipoly_sub_linear(const std::vector<UPoly>& coeffs_in_s, const Rat& lambda);

} // namespace mlim
