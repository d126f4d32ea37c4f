#include "mlim/upoly.hpp"

#include <algorithm>

#include "mlim/errors.hpp"

namespace mlim {

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw structural_error("empty rational literal");
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        bool neg = false;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
            neg = digits[0] == '-';
            digits = digits.substr(1);
        }
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw structural_error("bad decimal literal: " + text);
        Int num(digits, 10);
        Int den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        Rat r(num, den);
        r.canonicalize();
        return neg ? Rat(-r) : r;
    }
    try {
        Rat r(text);
        r.canonicalize();
        if (r.get_den() == 0) throw structural_error("zero denominator: " + text);
        return r;
    } catch (const std::invalid_argument&) {
        throw structural_error("bad rational literal: " + text);
    }
}

UPoly u_add(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

UPoly u_sub(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

UPoly u_neg(const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

UPoly u_scale(const UPoly& a, const Rat& s) {
    if (s == 0) return {};
    UPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

UPoly u_mul_xk(const UPoly& a, std::size_t k) {
    if (a.is_zero()) return {};
    UPoly r;
    r.c.assign(a.c.size() + k, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
    return r;
}

std::pair<UPoly, UPoly> u_divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw arithmetic_error("division by zero polynomial");
    UPoly rem = a, quot;
    long db = b.deg();
    if (rem.deg() >= db) quot.c.assign(rem.deg() - db + 1, Rat(0));
    while (!rem.is_zero() && rem.deg() >= db) {
        long k = rem.deg() - db;
        Rat q = rem.lc() / b.lc();
        quot.c[k] = q;
        for (long i = 0; i <= db; ++i) rem.c[i + k] -= q * b.c[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

UPoly u_div_exact(const UPoly& a, const UPoly& b) {
    auto [q, r] = u_divmod(a, b);
    if (!r.is_zero()) throw structural_error("inexact univariate division");
    return q;
}

UPoly u_gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = u_divmod(x, y).second;
        x = y;
        y = r;
    }
    if (!x.is_zero() && x.lc() != 1) x = u_scale(x, Rat(1) / x.lc());
    return x;
}

UPoly u_derivative(const UPoly& a) {
    if (a.c.size() <= 1) return {};
    UPoly r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = a.c[i] * Rat(static_cast<long>(i));
    r.trim();
    return r;
}

UPoly u_squarefree(const UPoly& a) {
    if (a.is_zero()) return {};
    if (a.deg() == 0) return UPoly::constant(Rat(1));
    UPoly g = u_gcd(a, u_derivative(a));
    if (g.deg() <= 0) return a;
    return u_div_exact(a, g);
}

Rat u_eval(const UPoly& a, const Rat& x) {
    Rat acc(0);
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double u_eval_double(const UPoly& a, double x) {
    double acc = 0;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

UPoly u_shift(const UPoly& p, const Rat& a) {
    // Horner: p(x+a) built by repeated multiply-by-(x+a).
    UPoly r;
    UPoly lin({a, Rat(1)});
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
        r = u_add(u_mul(r, lin), UPoly::constant(*it));
    return r;
}

UPoly u_scale_arg(const UPoly& p, const Rat& s) {
    UPoly r = p;
    Rat pw(1);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        r.c[i] *= pw;
        pw *= s;
    }
    r.trim();
    return r;
}

UPoly u_reverse(const UPoly& p) {
    UPoly r = p;
    std::reverse(r.c.begin(), r.c.end());
    r.trim();
    return r;
}

UPoly u_negate_arg(const UPoly& p) {
    UPoly r = p;
    for (std::size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
    return r;
}

UPoly u_normalize_primitive(const UPoly& p) {
    if (p.is_zero()) return {};
    Int den(1);
    for (const auto& q : p.c) den = lcm(den, q.get_den());
    Int content(0);
    std::vector<Rat> scaled(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        scaled[i] = p.c[i] * Rat(den);
        content = gcd(content, scaled[i].get_num());
    }
    if (content == 0) content = 1;
    if (sgn(p.lc()) < 0) content = -content;
    UPoly r;
    r.c.resize(scaled.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) r.c[i] = scaled[i] / Rat(content);
    r.trim();
    return r;
}

Rat u_root_bound(const UPoly& p) {
    if (p.deg() <= 0) return Rat(1);
    Rat m(0);
    for (std::size_t i = 0; i + 1 < p.c.size(); ++i) m = rat_max(m, rat_abs(p.c[i] / p.lc()));
    return m + 1;
}

Rat u_resultant(const UPoly& a, const UPoly& b) {
    // Euclidean recurrence: Res(f,g) = (-1)^{mn} lc(g)^{m-deg r} Res(g,r).
    if (a.is_zero() || b.is_zero()) return Rat(0);
    UPoly f = a, g = b;
    Rat res(1);
    while (true) {
        if (g.deg() == 0) {
            res *= rat_pow(g.lc(), static_cast<unsigned long>(f.deg()));
            return res;
        }
        UPoly r = u_divmod(f, g).second;
        long m = f.deg(), n = g.deg();
        if (r.is_zero()) return Rat(0);
        if ((m & 1) && (n & 1)) res = -res;
        res *= rat_pow(g.lc(), static_cast<unsigned long>(m - r.deg()));
        f = g;
        g = r;
    }
}

std::pair<Rat, Rat> u_interval_eval(const UPoly& p, const Rat& lo, const Rat& hi) {
    Rat l(0), h(0);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        // [l,h] * [lo,hi] + coeff
        Rat a = l * lo, b = l * hi, c = h * lo, d = h * hi;
        Rat nl = rat_min(rat_min(a, b), rat_min(c, d));
        Rat nh = rat_max(rat_max(a, b), rat_max(c, d));
        l = nl + *it;
        h = nh + *it;
    }
    return {l, h};
}

SturmChain sturm_chain(const UPoly& p) {
    SturmChain ch;
    UPoly f = u_normalize_primitive(u_squarefree(p));
    if (f.is_zero()) return ch;
    ch.seq.push_back(f);
    UPoly d = u_derivative(f);
    if (d.is_zero()) return ch;
    ch.seq.push_back(d);
    while (true) {
        const UPoly& a = ch.seq[ch.seq.size() - 2];
        const UPoly& b = ch.seq.back();
        UPoly r = u_divmod(a, b).second;
        if (r.is_zero()) break;
        r = u_neg(r);
        // positive rescale keeps the sign pattern
        UPoly n = u_normalize_primitive(r);
        if (sgn(r.lc()) != sgn(n.lc())) n = u_neg(n);
        ch.seq.push_back(n);
    }
    return ch;
}

long SturmChain::variations(const Rat& x) const {
    int prev = 0;
    long v = 0;
    for (const auto& p : seq) {
        int s = sgn(u_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

long SturmChain::count(const Rat& a, const Rat& b) const {
    if (seq.empty()) return 0;
    return variations(a) - variations(b);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPoly& p) {
    std::vector<std::pair<Rat, Rat>> out;
    if (p.is_zero()) throw structural_error("isolate_real_roots: zero polynomial");
    UPoly f = u_squarefree(p);
    if (f.deg() <= 0) return out;
    SturmChain ch = sturm_chain(f);
    Rat bound = u_root_bound(f) + 1;

    // (lo, hi) with f(lo), f(hi) != 0 and `n` roots inside.
    struct Seg {
        Rat lo, hi;
        long n;
    };
    std::vector<Seg> stack;
    long total = ch.count(-bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        if (u_eval(f, mid) == 0) {
            out.push_back({mid, mid});
            // shrink around mid until the gap holds only this root
            Rat w = (s.hi - s.lo) / 4;
            while (ch.count(mid - w, mid + w) != 1 || u_eval(f, mid - w) == 0 ||
                   u_eval(f, mid + w) == 0)
                w /= 2;
            long left = ch.count(s.lo, mid - w);
            long right = ch.count(mid + w, s.hi);
            if (left > 0) stack.push_back({s.lo, mid - w, left});
            if (right > 0) stack.push_back({mid + w, s.hi, right});
        } else {
            long left = ch.count(s.lo, mid);
            long right = s.n - left;
            if (left > 0) stack.push_back({s.lo, mid, left});
            if (right > 0) stack.push_back({mid, s.hi, right});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first + a.second < b.first + b.second; });
    return out;
}

long bipoly_deg(const BiPoly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (!a[i].is_zero()) return static_cast<long>(i);
    return -1;
}

void bipoly_trim(BiPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

static UPoly lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    // Newton divided differences, exact over Rat.
    std::size_t n = xs.size();
    std::vector<Rat> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    UPoly r = UPoly::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        UPoly lin({-xs[i], Rat(1)});
        r = u_add(u_mul(r, lin), UPoly::constant(dd[i]));
    }
    return r;
}

UPoly bipoly_resultant(const BiPoly& a_in, const BiPoly& b_in) {
    BiPoly a = a_in, b = b_in;
    bipoly_trim(a);
    bipoly_trim(b);
    long da = bipoly_deg(a), db = bipoly_deg(b);
    if (da < 0 || db < 0) return {};
    if (da == 0 && db == 0) return UPoly::constant(Rat(1));
    auto xdeg = [](const BiPoly& p) {
        long d = 0;
        for (const auto& q : p) d = std::max(d, q.deg());
        return d;
    };
    long bound = da * xdeg(b) + db * xdeg(a);
    std::vector<Rat> xs, ys;
    xs.reserve(bound + 1);
    long k = 0;
    while (static_cast<long>(xs.size()) <= bound) {
        Rat x(k);
        k = k > 0 ? -k : -k + 1; // 0, 1, -1, 2, -2, ...
        if (u_eval(a[da], x) == 0 || u_eval(b[db], x) == 0) continue;
        UPoly ua, ub;
        ua.c.resize(da + 1);
        for (long i = 0; i <= da; ++i) ua.c[i] = u_eval(a[i], x);
        ua.trim();
        ub.c.resize(db + 1);
        for (long i = 0; i <= db; ++i) ub.c[i] = u_eval(b[i], x);
        ub.trim();
        xs.push_back(x);
        ys.push_back(u_resultant(ua, ub));
    }
    return lagrange_interpolate(xs, ys);
}

BiPoly bipoly_sub_linear(const std::vector<UPoly>& coeffs_in_s, const Rat& lambda) {
    // sum_i rep_i(s) (z - lambda s)^i, arranged as a polynomial in s with
    // UPoly-in-z coefficients.
    long sdeg = 0;
    for (const auto& rep : coeffs_in_s) sdeg = std::max(sdeg, rep.deg());
    long tdeg = static_cast<long>(coeffs_in_s.size()) - 1;
    BiPoly out(static_cast<std::size_t>(sdeg + tdeg + 1));
    for (std::size_t i = 0; i < coeffs_in_s.size(); ++i) {
        const UPoly& rep = coeffs_in_s[i];
        if (rep.is_zero()) continue;
        // (z - lambda s)^i = sum_j C(i,j) (-lambda)^j s^j z^{i-j}
        Rat binom(1);
        Rat lam_pow(1);
        for (std::size_t j = 0; j <= i; ++j) {
            Rat factor = binom * lam_pow * (j % 2 ? Rat(-1) : Rat(1));
            for (std::size_t kk = 0; kk < rep.c.size(); ++kk) {
                if (rep.c[kk] == 0) continue;
                std::size_t spow = kk + j;
                std::size_t zpow = i - j;
                UPoly& tgt = out[spow];
                if (tgt.c.size() <= zpow) tgt.c.resize(zpow + 1, Rat(0));
                tgt.c[zpow] += rep.c[kk] * factor;
            }
            binom = binom * Rat(static_cast<long>(i - j)) / Rat(static_cast<long>(j + 1));
            lam_pow *= lambda;
        }
    }
    for (auto& q : out) q.trim();
    bipoly_trim(out);
    return out;
}

} // namespace mlim
