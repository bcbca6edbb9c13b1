#pragma once

// A stable Kronecker module as a conic in Gr(2,4): the line over [s:t] is the
// kernel of N(s,t) = s R1 + t R2, and its Plücker coordinates are the
// complementary 2x2 minors of N with permutation signs.

#include "kronquad/binary_form.hpp"
#include "kronquad/forms.hpp"
#include "kronquad/kronecker.hpp"
#include "kronquad/matrix.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace kronquad {

struct NotStable : std::domain_error {
    explicit NotStable(BinaryForm dependency)
        : std::domain_error("module is not stable"), dependency(std::move(dependency)) {}
    BinaryForm dependency;   // root structure of the failing pencil, zero form if every column drops rank
};

/// Six binary quadratics (p12, p13, p14, p23, p24, p34) in (s, t).
struct ConicInGrassmannian {
    std::array<BinaryForm, 6> p;

    BinaryForm plucker_quartic() const { return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]; }

    std::array<Rational, 6> evaluate(const Rational& s, const Rational& t) const {
        std::array<Rational, 6> out;
        for (std::size_t k = 0; k < 6; ++k) out[k] = p[k].evaluate(s, t);
        return out;
    }

    friend bool operator==(const ConicInGrassmannian& a, const ConicInGrassmannian& b) { return a.p == b.p; }
};

/// Plücker coordinates of a line (2x2 minors of the span matrix).
inline std::array<Rational, 6> plucker_of_line(const LineInP3& l) {
    const auto& a = l.first();
    const auto& b = l.second();
    std::array<Rational, 6> out;
    for (std::size_t k = 0; k < 6; ++k) {
        const auto [i, j] = kPluckerPairs[k];
        out[k] = a[i] * b[j] - a[j] * b[i];
    }
    return out;
}

inline ConicInGrassmannian phi(const KroneckerModule& m) {
    if (semistability_level(m) != Semistability::Stable) throw NotStable(dependency_form(m));
    const auto q = pencil_minors(m);
    // Kernel coordinates are the complementary minors: p_ij = ± q_kl.
    return {{q[5], -q[4], q[3], q[2], -q[1], q[0]}};
}

inline LineInP3 line_at_parameter(const KroneckerModule& m, const Rational& s, const Rational& t) {
    if (sgn(s) == 0 && sgn(t) == 0) throw std::invalid_argument("[0:0] is not a point of P^1");
    const auto kernel = kernel_basis(pencil(m).at(s, t));
    if (kernel.size() != 2) throw NotStable(dependency_form(m));
    auto to_point = [](const RationalVector& v) { return Point4{v[0], v[1], v[2], v[3]}; };
    return {to_point(kernel[0]), to_point(kernel[1])};
}

/// Parameter of P^1 as a primitive integer pair (last nonzero entry positive).
using Parameter = std::pair<Rational, Rational>;

/// [s:t] with N(s,t) v = 0 for both spanning points of l, if one exists.
/// The conditions are linear in (s, t), so a solution is automatically rational.
inline std::optional<Parameter> parameter_of_line(const KroneckerModule& m, const LineInP3& l) {
    const PencilMatrix pm = pencil(m);
    RationalMatrix sys(4, 2);
    const Point4* pts[2] = {&l.first(), &l.second()};
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 4; ++c) {
                sys(2 * k + r, 0) += pm.first(r, c) * (*pts[k])[c];
                sys(2 * k + r, 1) += pm.second(r, c) * (*pts[k])[c];
            }
    const auto kernel = kernel_basis(sys);
    if (kernel.size() != 1) return std::nullopt;
    return Parameter{kernel[0][0], kernel[0][1]};
}

struct ConicDiagnostics {
    bool plucker_ok;
    BinaryForm basepoint_gcd;
    std::size_t degree;
};

inline ConicDiagnostics conic_diagnostics(const ConicInGrassmannian& c) {
    BinaryForm g = gcd(std::span<const BinaryForm>(c.p));
    const std::size_t deg = g.is_zero() ? 0 : 2 - std::min<std::size_t>(2, g.degree());
    return {c.plucker_quartic().is_zero(), std::move(g), deg};
}

/// The quadric swept by the kernel lines, computed without det M: the
/// quadrics through three points of each of several lines of the family.
/// Empty when the lines do not pin down a single quadric.
inline std::optional<QuadraticForm> swept_quadric(const KroneckerModule& m) {
    static const std::array<std::pair<int, int>, 7> params{{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, 3}}};
    std::vector<RationalVector> rows;
    for (const auto& [s, t] : params) {
        const LineInP3 l = line_at_parameter(m, s, t);
        for (const auto& [a, b] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
            const Point4 v = l.point(a, b);
            RationalVector row(10);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i; j < 4; ++j) row[QuadraticForm::index(i, j)] = v[i] * v[j];
            rows.push_back(std::move(row));
        }
    }
    const auto kernel = kernel_basis(RationalMatrix::from_rows(rows, 10));
    if (kernel.size() != 1) return std::nullopt;
    std::array<Rational, 10> c;
    for (std::size_t k = 0; k < 10; ++k) c[k] = kernel[0][k];
    return QuadraticForm(c);
}

}  // namespace kronquad
