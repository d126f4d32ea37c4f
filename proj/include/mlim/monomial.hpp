#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace mlim {

// Exponent vector of a power product. Length always equals the ambient
// variable count of the polynomial that owns it.
struct Monomial {
    std::vector<uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<uint32_t> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }

    long total_degree() const {
        long d = 0;
        for (auto x : e) d += x;
        return d;
    }

    bool is_constant() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    // Quotient of exponent vectors; caller must check divides() first.
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }

    bool operator==(const Monomial& m) const { return e == m.e; }
};

// Graded lexicographic order: lower total degree first, lexicographic within
// a degree. Map iteration in this order lets truncations stop early.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

} // namespace mlim
