#pragma once

// Text forms of the inputs, for the command line and for readable output.
//
//   polynomial  := term (('+' | '-') term)*
//   term        := [coefficient ['*']] monomial | coefficient
//   coefficient := integer ['/' integer]
//   monomial    := (variable ['^' integer])+
//
// Variables are x, y, z, w (P^3), s, t (binary forms) and u, v (second
// factor of Q). Whitespace is ignored. "-1/2x" reads as (-1/2)·x.

#include "kronquad/binary_form.hpp"
#include "kronquad/forms.hpp"
#include "kronquad/kronecker.hpp"
#include "kronquad/rational.hpp"

#include <array>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kronquad {

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Exponents over the variable alphabet below.
using Monomial = std::array<unsigned, 8>;
inline constexpr std::string_view kVariables = "xyzwstuv";

using Polynomial = std::map<Monomial, Rational>;

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    Polynomial parse() {
        if (s_.empty()) throw ParseError("empty polynomial");
        Polynomial out;
        bool first = true;
        while (pos_ < s_.size()) {
            Rational sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                if (s_[pos_] == '-') sign = -1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [mono, coeff] = term();
            out[mono] += sign * coeff;
            if (sgn(out[mono]) == 0) out.erase(mono);
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    std::pair<Monomial, Rational> term() {
        Rational coeff = 1;
        bool have_coeff = false;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::string lit = digits();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                const std::string den = digits();
                if (den.empty()) fail("missing denominator");
                lit += "/" + den;
            }
            coeff = parse_rational(lit);
            have_coeff = true;
            if (pos_ < s_.size() && s_[pos_] == '*') ++pos_;
        }
        Monomial mono{};
        bool have_var = false;
        while (pos_ < s_.size()) {
            const auto v = kVariables.find(s_[pos_]);
            if (v == std::string_view::npos) break;
            ++pos_;
            unsigned e = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                const std::string d = digits();
                if (d.empty()) fail("missing exponent");
                e = static_cast<unsigned>(std::stoul(d));
            }
            mono[v] += e;
            have_var = true;
            if (pos_ + 1 < s_.size() && s_[pos_] == '*' && kVariables.find(s_[pos_ + 1]) != std::string_view::npos)
                ++pos_;
        }
        if (!have_coeff && !have_var) fail("expected a term");
        return {mono, coeff};
    }

    std::string s_;
    std::size_t pos_ = 0;
};

inline unsigned degree_in(const Monomial& m, std::string_view vars) {
    unsigned d = 0;
    for (char c : vars) d += m[kVariables.find(c)];
    return d;
}

inline void require_only(const Polynomial& p, std::string_view vars, const char* what) {
    for (const auto& [m, c] : p)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] && vars.find(kVariables[i]) == std::string_view::npos)
                throw ParseError(std::string(what) + " may only use the variables " + std::string(vars));
}

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text) { return detail::PolyParser(text).parse(); }

inline LinearForm parse_linear_form(std::string_view text) {
    if (text == "0") return {};
    const Polynomial p = parse_polynomial(text);
    detail::require_only(p, "xyzw", "a linear form");
    std::array<Rational, 4> c{};
    for (const auto& [m, coeff] : p) {
        if (detail::degree_in(m, "xyzw") != 1) throw ParseError("'" + std::string(text) + "' is not linear");
        for (std::size_t i = 0; i < 4; ++i)
            if (m[i]) c[i] = coeff;
    }
    return LinearForm(c);
}

inline QuadraticForm parse_quadratic_form(std::string_view text) {
    const Polynomial p = parse_polynomial(text);
    detail::require_only(p, "xyzw", "a quadric");
    std::array<Rational, 10> c{};
    for (const auto& [m, coeff] : p) {
        if (detail::degree_in(m, "xyzw") != 2) throw ParseError("'" + std::string(text) + "' is not quadratic");
        std::size_t i = 4, j = 4;
        for (std::size_t k = 0; k < 4; ++k)
            for (unsigned e = 0; e < m[k]; ++e) (i == 4 ? i : j) = k;
        c[QuadraticForm::index(i, j)] += coeff;
    }
    return QuadraticForm(c);
}

/// "[[x,z],[w,y]]": a 2x2 bracketed matrix of linear forms.
inline KroneckerModule parse_module_expression(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]")
        throw ParseError("module must look like [[a,b],[c,d]]");
    const std::string inner = s.substr(2, s.size() - 4);
    const auto mid = inner.find("],[");
    if (mid == std::string::npos) throw ParseError("module must look like [[a,b],[c,d]]");
    auto split = [](const std::string& row) {
        const auto comma = row.find(',');
        if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos)
            throw ParseError("each module row needs exactly two entries");
        return std::array<std::string, 2>{row.substr(0, comma), row.substr(comma + 1)};
    };
    const auto r1 = split(inner.substr(0, mid));
    const auto r2 = split(inner.substr(mid + 3));
    return {parse_linear_form(r1[0]), parse_linear_form(r1[1]), parse_linear_form(r2[0]), parse_linear_form(r2[1])};
}

// ------------------------------------------------------------------ printing

namespace detail {

inline void append_term(std::string& out, const Rational& c, const std::string& mono) {
    if (sgn(c) == 0) return;
    const Rational mag = abs(c);
    if (!out.empty()) out += sgn(c) < 0 ? "-" : "+";
    else if (sgn(c) < 0) out += "-";
    if (mag != 1 || mono.empty()) out += to_string(mag);
    out += mono;
}

inline std::string power(char var, std::size_t e) {
    if (e == 0) return {};
    std::string s(1, var);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

}  // namespace detail

inline std::string to_string(const LinearForm& f) {
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) detail::append_term(out, f[i], std::string(1, kVariables[i]));
    return out.empty() ? "0" : out;
}

inline std::string to_string(const QuadraticForm& q) {
    std::string out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) {
            const std::string mono = i == j ? detail::power(kVariables[i], 2)
                                            : std::string{kVariables[i], kVariables[j]};
            detail::append_term(out, q.coeff(i, j), mono);
        }
    return out.empty() ? "0" : out;
}

/// Binary form in the given pair of variable names (default s, t).
inline std::string to_string(const BinaryForm& f, char first = 's', char second = 't') {
    std::string out;
    const std::size_t d = f.degree();
    for (std::size_t k = 0; k <= d; ++k)
        detail::append_term(out, f.coeff_t(k), detail::power(first, d - k) + detail::power(second, k));
    return out.empty() ? "0" : out;
}

inline std::string to_string(const BidegreeForm& f) {
    std::string out;
    for (std::size_t i = f.deg_st() + 1; i-- > 0;)
        for (std::size_t j = f.deg_uv() + 1; j-- > 0;)
            detail::append_term(out, f.coeff(i, j),
                                detail::power('s', i) + detail::power('t', f.deg_st() - i) + detail::power('u', j) +
                                    detail::power('v', f.deg_uv() - j));
    return out.empty() ? "0" : out;
}

inline std::string to_string(const KroneckerModule& m) {
    return "[[" + to_string(m(0, 0)) + "," + to_string(m(0, 1)) + "],[" + to_string(m(1, 0)) + "," +
           to_string(m(1, 1)) + "]]";
}

}  // namespace kronquad
