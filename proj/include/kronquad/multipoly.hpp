#pragma once

// Sparse multivariate polynomials over Q in a handful of variables. Only
// what the orbit-equivalence test needs: products of linear forms and a
// zero test after full expansion.

#include "kronquad/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace kronquad {

class MultiPoly {
public:
    using Exponents = std::vector<std::uint8_t>;

    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly linear(const std::vector<Rational>& coeffs) {
        MultiPoly p(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (sgn(coeffs[i]) == 0) continue;
            Exponents e(coeffs.size(), 0);
            e[i] = 1;
            p.terms_[e] = coeffs[i];
        }
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    Rational evaluate(const std::vector<Rational>& at) const {
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::uint8_t k = 0; k < e[i]; ++k) t *= at[i];
            acc += t;
        }
        return acc;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
        return a;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
                r.add_term(e, ca * cb);
            }
        return r;
    }

private:
    void add_term(const Exponents& e, const Rational& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }

    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace kronquad
