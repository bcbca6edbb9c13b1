#pragma once

// Exact rational scalars. Everything in kronquad is computed over Q;
// mpq_class keeps values canonical (positive denominator, reduced, 0 == 0/1).

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace kronquad {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", with "/q" omitted when q == 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    // gmp accepts a leading '+' only in some versions; normalise it away.
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : s) {
        if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace kronquad
