#pragma once

// Virtual Poincaré polynomials (integer polynomials in p) for varieties
// without odd cohomology, and the wall-crossing bookkeeping for M2 and R.

#include "kronquad/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kronquad {

struct NonIntegralResult : std::domain_error {
    NonIntegralResult() : std::domain_error("halving produced a non-integral coefficient") {}
};

struct NonDivisible : std::domain_error {
    NonDivisible() : std::domain_error("polynomial division left a remainder") {}
};

class PoincarePolynomial {
public:
    PoincarePolynomial() = default;
    /// Ascending coefficients: c[0] + c[1] p + ...
    explicit PoincarePolynomial(std::vector<Integer> c) : c_(std::move(c)) { trim(); }
    PoincarePolynomial(std::initializer_list<long> c) {
        for (long v : c) c_.emplace_back(v);
        trim();
    }

    static PoincarePolynomial constant(long v) { return PoincarePolynomial{v}; }

    const std::vector<Integer>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }

    Integer evaluate(const Integer& p) const {
        Integer acc = 0;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * p + c_[k];
        return acc;
    }

    /// P(p^2).
    PoincarePolynomial at_square() const {
        std::vector<Integer> r(c_.empty() ? 0 : 2 * c_.size() - 1);
        for (std::size_t k = 0; k < c_.size(); ++k) r[2 * k] = c_[k];
        return PoincarePolynomial(std::move(r));
    }

    /// Exact halving of every coefficient.
    PoincarePolynomial halved() const {
        std::vector<Integer> r(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (mpz_odd_p(c_[k].get_mpz_t())) throw NonIntegralResult();
            r[k] = c_[k] / 2;
        }
        return PoincarePolynomial(std::move(r));
    }

    /// Quotient and remainder by a divisor with leading coefficient +-1.
    std::pair<PoincarePolynomial, PoincarePolynomial> divmod(const PoincarePolynomial& d) const {
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        const Integer lead = d.c_.back();
        if (lead != 1 && lead != -1) throw std::invalid_argument("divisor must be monic up to sign");
        std::vector<Integer> rem = c_;
        if (rem.size() < d.c_.size()) return {PoincarePolynomial(), *this};
        std::vector<Integer> q(rem.size() - d.c_.size() + 1);
        for (std::size_t k = q.size(); k-- > 0;) {
            q[k] = rem[k + d.c_.size() - 1] * lead;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= q[k] * d.c_[j];
        }
        return {PoincarePolynomial(std::move(q)), PoincarePolynomial(std::move(rem))};
    }

    PoincarePolynomial exact_div(const PoincarePolynomial& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw NonDivisible();
        return q;
    }

    friend PoincarePolynomial operator+(const PoincarePolynomial& a, const PoincarePolynomial& b) {
        std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
        return PoincarePolynomial(std::move(r));
    }
    PoincarePolynomial operator-() const {
        PoincarePolynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend PoincarePolynomial operator-(const PoincarePolynomial& a, const PoincarePolynomial& b) { return a + (-b); }
    friend PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return PoincarePolynomial(std::move(r));
    }
    friend PoincarePolynomial operator*(long s, const PoincarePolynomial& a) { return PoincarePolynomial{s} * a; }
    friend bool operator==(const PoincarePolynomial& a, const PoincarePolynomial& b) { return a.c_ == b.c_; }

    /// Highest power first, e.g. "p^2+2p+1".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Integer& c = c_[k];
            if (c == 0) continue;
            Integer mag = abs(c);
            if (!out.empty()) out += sgn(c) < 0 ? '-' : '+';
            else if (sgn(c) < 0) out += '-';
            if (mag != 1 || k == 0) out += mag.get_str();
            if (k >= 1) out += 'p';
            if (k >= 2) out += '^' + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

inline PoincarePolynomial proj_space(std::size_t n) { return PoincarePolynomial(std::vector<Integer>(n + 1, 1)); }

/// Symmetric square: (P(p)^2 + P(p^2)) / 2.
inline PoincarePolynomial sym2(const PoincarePolynomial& p) { return (p * p + p.at_square()).halved(); }

/// Hilb^2 of a surface: Sym^2 blown up along the diagonal, whose exceptional
/// divisor is a P^1-bundle over the surface.
inline PoincarePolynomial hilb2_surface(const PoincarePolynomial& s) { return sym2(s) - s + s * proj_space(1); }

/// Blow-up of X along a smooth centre Z of codimension c.
inline PoincarePolynomial blowup(const PoincarePolynomial& x, const PoincarePolynomial& z, std::size_t codim) {
    if (codim == 0) throw std::invalid_argument("blow-up centre must have positive codimension");
    return x + z * (proj_space(codim - 1) - PoincarePolynomial::constant(1));
}

inline Integer euler(const PoincarePolynomial& p) { return p.evaluate(1); }

struct NamedPolynomial {
    std::string name;
    PoincarePolynomial value;
};

/// Wall crossing for M2: both descriptions of M2^{0+}, the stable part by
/// exact division, then M2 and R (R blown up at two points gives M2).
inline std::vector<NamedPolynomial> pipeline_M2() {
    const auto P1 = proj_space(1), P2 = proj_space(2), P3 = proj_space(3);
    const auto one = PoincarePolynomial::constant(1);
    const auto quadric = P1 * P1;

    const auto hilb = hilb2_surface(quadric);
    const auto m_inf = hilb * proj_space(6);
    const auto m_0plus = m_inf + 2 * ((P1 - P2) * proj_space(5) * P1);

    // Second description, stratum by stratum: over P^3 x P^3 / Z2 minus the
    // diagonal the fibre is two copies of P^2 glued at a point; on the
    // degree-2 étale cover that is (P^3 x P^3 - diagonal) x (P^2 - pt) plus
    // one section over the quotient. Over the diagonal the fibre is P^2.
    const auto sym = sym2(P3);
    const auto off_diagonal = (P3 * P3 - P3) * (P2 - one) + (sym - P3);
    const auto m_stable = (m_0plus - off_diagonal - P2 * P3).exact_div(P1);

    const auto m2 = m_stable + sym;
    const auto r = m2 - 2 * (proj_space(8) - one);
    return {
        {"Hilb2(Q)", hilb},  {"M2_infinity", m_inf}, {"M2_0plus", m_0plus}, {"M2_stable", m_stable},
        {"Sym2(P3)", sym},   {"M2", m2},             {"R", r},
    };
}

inline const PoincarePolynomial& lookup(const std::vector<NamedPolynomial>& table, const std::string& name) {
    for (const auto& row : table)
        if (row.name == name) return row.value;
    throw std::out_of_range("no row named " + name);
}

}  // namespace kronquad
