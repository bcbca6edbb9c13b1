#pragma once

// Binary forms f(s,t) = sum_k c_k s^(d-k) t^k, coefficients stored highest
// s-power first. The same type carries the column-combination parameter
// (a1, a2) of a Kronecker module, with a1 in the role of s.

#include "kronquad/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kronquad {

struct DegreeMismatch : std::invalid_argument {
    explicit DegreeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class BinaryForm {
public:
    BinaryForm() : coeffs_(1) {}
    explicit BinaryForm(std::size_t degree) : coeffs_(degree + 1) {}
    explicit BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
    }
    BinaryForm(std::initializer_list<Rational> coeffs) : BinaryForm(std::vector<Rational>(coeffs)) {}

    static BinaryForm constant(const Rational& c) { return BinaryForm(std::vector<Rational>{c}); }
    /// s^i t^j
    static BinaryForm monomial(std::size_t s_exp, std::size_t t_exp, const Rational& c = 1) {
        BinaryForm f(s_exp + t_exp);
        f.coeffs_[t_exp] = c;
        return f;
    }

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    /// Coefficient of s^(d-k) t^k.
    const Rational& coeff_t(std::size_t t_exp) const { return coeffs_[t_exp]; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
    }
    bool is_nonzero_constant() const { return degree() == 0 && sgn(coeffs_[0]) != 0; }

    Rational evaluate(const Rational& s, const Rational& t) const {
        // Horner in s with t-powers carried along.
        Rational acc = 0, tp = 1;
        std::vector<Rational> tpow(coeffs_.size());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            tpow[k] = tp;
            tp *= t;
        }
        Rational sp = 1;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc += coeffs_[k] * sp * tpow[k];
            sp *= s;
        }
        return acc;
    }

    /// Multiplicity of t as a factor; degree()+1 for the zero form.
    std::size_t t_multiplicity() const {
        std::size_t m = 0;
        while (m < coeffs_.size() && sgn(coeffs_[m]) == 0) ++m;
        return m;
    }

    BinaryForm operator-() const {
        BinaryForm r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree() != b.degree())
            throw DegreeMismatch("adding binary forms of degree " + std::to_string(a.degree()) + " and " +
                                 std::to_string(b.degree()));
        BinaryForm r = a;
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
        return r;
    }
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm r(a.degree() + b.degree());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }
    friend BinaryForm operator*(const Rational& s, BinaryForm f) {
        for (auto& c : f.coeffs_) c *= s;
        return f;
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Scales so that the first nonzero coefficient is 1. Zero stays zero.
    BinaryForm normalized() const {
        for (const auto& c : coeffs_)
            if (sgn(c) != 0) return Rational(1) / c * *this;
        return *this;
    }

private:
    std::vector<Rational> coeffs_;
};

/// True iff a = lambda * b for some nonzero rational lambda (same degree).
inline bool proportional(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree() || a.is_zero() || b.is_zero()) return false;
    return a.normalized() == b.normalized();
}

namespace detail {

// Univariate polynomials, descending coefficients, no leading zeros
// (empty vector == 0).
using Dense = std::vector<Rational>;

inline Dense trimmed(std::span<const Rational> c) {
    std::size_t k = 0;
    while (k < c.size() && sgn(c[k]) == 0) ++k;
    return Dense(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
}

// Returns {quotient, remainder}; divisor must be nonzero and trimmed.
inline std::pair<Dense, Dense> divmod(Dense num, const Dense& den) {
    if (num.size() < den.size()) return {Dense{}, trimmed(num)};
    Dense q(num.size() - den.size() + 1);
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (sgn(num[i]) == 0) continue;
        q[i] = num[i] / den[0];
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
    }
    Dense rem(num.end() - static_cast<std::ptrdiff_t>(den.size() - 1), num.end());
    return {q, trimmed(rem)};
}

inline Dense monic(Dense p) {
    if (p.empty()) return p;
    const Rational lead = p[0];
    for (auto& c : p) c /= lead;
    return p;
}

inline Dense gcd(Dense a, Dense b) {
    a = trimmed(a);
    b = trimmed(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

}  // namespace detail

/// gcd of binary forms, normalised so the first nonzero coefficient is 1.
/// Zero inputs are ignored; the zero form comes back only when all inputs
/// vanish. Over Q the degree of the gcd equals the number of common
/// projective roots over the algebraic closure, counted with multiplicity.
inline BinaryForm gcd(std::span<const BinaryForm> forms) {
    std::optional<std::size_t> t_mult;
    detail::Dense g;
    bool have = false;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        const std::size_t m = f.t_multiplicity();
        t_mult = t_mult ? std::min(*t_mult, m) : m;
        // f = t^m * h with h(s,1) given by the remaining coefficients.
        detail::Dense dehom = detail::trimmed(f.coeffs());
        g = have ? detail::gcd(g, dehom) : detail::monic(dehom);
        have = true;
    }
    if (!have) return BinaryForm();
    // Leading coefficients belong to the high powers of s, so t^m means m leading zeros.
    std::vector<Rational> c(*t_mult, Rational(0));
    c.insert(c.end(), g.begin(), g.end());
    return BinaryForm(std::move(c));
}

inline BinaryForm gcd(std::initializer_list<BinaryForm> forms) {
    return gcd(std::span<const BinaryForm>(forms.begin(), forms.size()));
}

/// q with f = q * g, or nullopt when g does not divide f. g must be nonzero.
inline std::optional<BinaryForm> exact_quotient(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) throw std::invalid_argument("division by the zero form");
    if (f.degree() < g.degree()) {
        if (f.is_zero()) return BinaryForm(std::size_t{0});
        return std::nullopt;
    }
    const std::size_t out_degree = f.degree() - g.degree();
    if (f.is_zero()) return BinaryForm(out_degree);
    const std::size_t mf = f.t_multiplicity(), mg = g.t_multiplicity();
    if (mf < mg) return std::nullopt;
    auto [q, r] = detail::divmod(detail::trimmed(f.coeffs()), detail::trimmed(g.coeffs()));
    if (!r.empty()) return std::nullopt;
    std::vector<Rational> c(mf - mg, Rational(0));
    c.insert(c.end(), q.begin(), q.end());
    c.resize(out_degree + 1, Rational(0));
    return BinaryForm(std::move(c));
}

inline bool divides(const BinaryForm& g, const BinaryForm& f) { return exact_quotient(f, g).has_value(); }

}  // namespace kronquad
