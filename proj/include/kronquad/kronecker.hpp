#pragma once

// Kronecker modules M : C^2 (x) V -> C^2, written as 2x2 matrices of linear
// forms in x, y, z, w, under the action (A, B) . M = A M B^{-1} of
// PGL2 x PGL2. Row index = target, column index = source.
//
// Conventions used throughout kronquad:
//   * the pencil parameter a = (a1, a2) combines COLUMNS:
//       f_a = a1 m11 + a2 m12,   g_a = a1 m21 + a2 m22;
//   * semistability forbids a zero row AND a zero column after row/column
//     operations;
//   * strictly semistable strata are told apart by the dimension of the
//     intertwiner space {(A, B) : A M = M B} and the Gram rank of det M.

#include "kronquad/binary_form.hpp"
#include "kronquad/forms.hpp"
#include "kronquad/matrix.hpp"
#include "kronquad/multipoly.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kronquad {

struct SingularGroupElement : std::domain_error {
    SingularGroupElement() : std::domain_error("group element is not invertible") {}
};

struct DegenerateParams : std::invalid_argument {
    explicit DegenerateParams(const std::string& what) : std::invalid_argument(what) {}
};

class KroneckerModule {
public:
    using Entries = std::array<std::array<LinearForm, 2>, 2>;

    KroneckerModule(LinearForm m11, LinearForm m12, LinearForm m21, LinearForm m22)
        : e_{{{std::move(m11), std::move(m12)}, {std::move(m21), std::move(m22)}}} {
        if (is_zero()) throw std::invalid_argument("Kronecker module must have a nonzero entry");
    }
    explicit KroneckerModule(const Entries& e) : KroneckerModule(e[0][0], e[0][1], e[1][0], e[1][1]) {}

    const LinearForm& operator()(std::size_t row, std::size_t col) const { return e_[row][col]; }
    const Entries& entries() const { return e_; }

    KroneckerModule transpose() const { return {e_[0][0], e_[1][0], e_[0][1], e_[1][1]}; }

    friend KroneckerModule operator*(const Rational& s, const KroneckerModule& m) {
        if (sgn(s) == 0) throw std::invalid_argument("scaling a Kronecker module by zero");
        return {s * m.e_[0][0], s * m.e_[0][1], s * m.e_[1][0], s * m.e_[1][1]};
    }
    friend bool operator==(const KroneckerModule& a, const KroneckerModule& b) { return a.e_ == b.e_; }

private:
    bool is_zero() const {
        return e_[0][0].is_zero() && e_[0][1].is_zero() && e_[1][0].is_zero() && e_[1][1].is_zero();
    }
    Entries e_;
};

/// True iff a = lambda b for a nonzero rational lambda.
inline bool projectively_equal(const KroneckerModule& a, const KroneckerModule& b) {
    RationalMatrix m(2, 16);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t v = 0; v < 4; ++v) {
                m(0, (2 * i + j) * 4 + v) = a(i, j)[v];
                m(1, (2 * i + j) * 4 + v) = b(i, j)[v];
            }
    return rank(m) == 1;
}

/// (A, B) acting by M -> A M B^{-1}; A changes the target, B the source.
class GroupElement {
public:
    GroupElement(RationalMatrix target, RationalMatrix source)
        : target_(std::move(target)), source_(std::move(source)) {
        if (sgn(det2(target_)) == 0 || sgn(det2(source_)) == 0) throw SingularGroupElement();
    }
    static GroupElement identity() { return {RationalMatrix::identity(2), RationalMatrix::identity(2)}; }

    const RationalMatrix& target() const { return target_; }
    const RationalMatrix& source() const { return source_; }

    friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
        return {g.target_ * h.target_, g.source_ * h.source_};
    }

private:
    RationalMatrix target_, source_;
};

namespace detail {

// L = S * M * T for scalar 2x2 S, T.
inline KroneckerModule sandwich(const RationalMatrix& s, const KroneckerModule& m, const RationalMatrix& t) {
    std::array<std::array<LinearForm, 2>, 2> sm{}, out{};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            sm[i][j] = s(i, 0) * m(0, j) + s(i, 1) * m(1, j);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out[i][j] = t(0, j) * sm[i][0] + t(1, j) * sm[i][1];
    return KroneckerModule(out);
}

}  // namespace detail

inline KroneckerModule act(const GroupElement& g, const KroneckerModule& m) {
    return detail::sandwich(g.target(), m, inverse2(g.source()));
}

/// The 2x4 slices R1, R2 with N(a) = a1 R1 + a2 R2 the coefficient stack of
/// (f_a, g_a).
struct PencilMatrix {
    RationalMatrix first, second;

    RationalMatrix at(const Rational& a1, const Rational& a2) const {
        RationalMatrix n(2, 4);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 4; ++c) n(r, c) = a1 * first(r, c) + a2 * second(r, c);
        return n;
    }
};

inline PencilMatrix pencil(const KroneckerModule& m) {
    PencilMatrix p{RationalMatrix(2, 4), RationalMatrix(2, 4)};
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            p.first(r, c) = m(r, 0)[c];
            p.second(r, c) = m(r, 1)[c];
        }
    return p;
}

/// Column pairs in Plücker order (12, 13, 14, 23, 24, 34), zero-based.
inline constexpr std::array<std::array<std::size_t, 2>, 6> kPluckerPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// The six 2x2 minors q_ij(a) of N(a), binary quadratics in (a1, a2).
inline std::array<BinaryForm, 6> pencil_minors(const KroneckerModule& m) {
    const PencilMatrix p = pencil(m);
    auto entry = [&](std::size_t r, std::size_t c) { return BinaryForm{p.first(r, c), p.second(r, c)}; };
    std::array<BinaryForm, 6> out;
    for (std::size_t k = 0; k < 6; ++k) {
        const auto [i, j] = kPluckerPairs[k];
        out[k] = entry(0, i) * entry(1, j) - entry(0, j) * entry(1, i);
    }
    return out;
}

/// gcd of the pencil minors: a root [a1:a2] marks a column combination whose
/// image has dimension < 2. Zero form iff every combination drops rank.
inline BinaryForm dependency_form(const KroneckerModule& m) {
    const auto minors = pencil_minors(m);
    return gcd(std::span<const BinaryForm>(minors));
}

/// 8x2 matrix a -> coefficients of (f_a, g_a).
inline RationalMatrix column_stack(const KroneckerModule& m) {
    RationalMatrix s(8, 2);
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t v = 0; v < 4; ++v) {
            s(v, j) = m(0, j)[v];
            s(4 + v, j) = m(1, j)[v];
        }
    return s;
}

/// 8x2 matrix b -> coefficients of b1 * row1 + b2 * row2.
inline RationalMatrix row_stack(const KroneckerModule& m) { return column_stack(m.transpose()); }

enum class Semistability { Unstable, StrictlySemistable, Stable };

inline Semistability semistability_level(const KroneckerModule& m) {
    if (rank(column_stack(m)) <= 1 || rank(row_stack(m)) <= 1) return Semistability::Unstable;
    return dependency_form(m).is_nonzero_constant() ? Semistability::Stable : Semistability::StrictlySemistable;
}

/// Linear system for (A, B) with A * m1 = m2 * B; unknowns ordered
/// a11 a12 a21 a22 b11 b12 b21 b22, one equation per (entry, variable).
inline RationalMatrix intertwiner_system(const KroneckerModule& m1, const KroneckerModule& m2) {
    RationalMatrix sys(16, 8);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t v = 0; v < 4; ++v) {
                const std::size_t row = (2 * i + j) * 4 + v;
                for (std::size_t k = 0; k < 2; ++k) {
                    sys(row, 2 * i + k) += m1(k, j)[v];       // a_ik m1_kj
                    sys(row, 4 + 2 * k + j) -= m2(i, k)[v];   // m2_ik b_kj
                }
            }
    return sys;
}

/// dim {(A, B) scalar : A M = M B}; at least 1 (the scalars).
inline std::size_t end_algebra_dim(const KroneckerModule& m) {
    return 8 - rank(intertwiner_system(m, m));
}

inline QuadraticForm det_quadric(const KroneckerModule& m) {
    return QuadraticForm::product(m(0, 0), m(1, 1)) - QuadraticForm::product(m(0, 1), m(1, 0));
}

enum class StratumLabel { Unstable, Stable, Y0, Z0, Y1, Z1 };

inline std::string_view to_string(StratumLabel s) {
    switch (s) {
        case StratumLabel::Unstable: return "UNSTABLE";
        case StratumLabel::Stable: return "STABLE";
        case StratumLabel::Y0: return "Y0";
        case StratumLabel::Z0: return "Z0";
        case StratumLabel::Y1: return "Y1";
        case StratumLabel::Z1: return "Z1";
    }
    return "?";
}

inline std::optional<StratumLabel> parse_stratum(std::string_view s) {
    for (auto l : {StratumLabel::Unstable, StratumLabel::Stable, StratumLabel::Y0, StratumLabel::Z0,
                   StratumLabel::Y1, StratumLabel::Z1})
        if (to_string(l) == s) return l;
    return std::nullopt;
}

struct Classification {
    StratumLabel stratum;
    BinaryForm dependency;
    std::size_t end_dim;
    std::size_t det_gram_rank;
};

inline Classification classify(const KroneckerModule& m) {
    Classification c{StratumLabel::Unstable, dependency_form(m), end_algebra_dim(m),
                     quadric_gram_rank(det_quadric(m))};
    switch (semistability_level(m)) {
        case Semistability::Unstable: c.stratum = StratumLabel::Unstable; break;
        case Semistability::Stable: c.stratum = StratumLabel::Stable; break;
        case Semistability::StrictlySemistable:
            if (c.end_dim >= 4)
                c.stratum = StratumLabel::Y0;
            else if (c.end_dim == 2)
                c.stratum = c.det_gram_rank == 1 ? StratumLabel::Z0 : StratumLabel::Y1;
            else
                c.stratum = StratumLabel::Z1;
            break;
    }
    return c;
}

inline StratumLabel classify_stratum(const KroneckerModule& m) { return classify(m).stratum; }

struct Equivalence {
    bool equivalent = false;
    std::optional<GroupElement> witness;   // act(*witness, m1) == m2 exactly
};

/// Decides whether m2 lies in the G-orbit of m1. The intertwiners
/// {(A, B) : A m1 = m2 B} form a linear space; m2 is in the orbit iff
/// det A * det B does not vanish identically on it, which is checked by
/// full symbolic expansion in the coordinates of a kernel basis.
inline Equivalence is_equivalent(const KroneckerModule& m1, const KroneckerModule& m2) {
    const auto basis = kernel_basis(intertwiner_system(m1, m2));
    const std::size_t k = basis.size();
    if (k == 0) return {};

    std::array<MultiPoly, 8> unknown{MultiPoly(k), MultiPoly(k), MultiPoly(k), MultiPoly(k),
                                     MultiPoly(k), MultiPoly(k), MultiPoly(k), MultiPoly(k)};
    for (std::size_t u = 0; u < 8; ++u) {
        std::vector<Rational> coeffs(k);
        for (std::size_t b = 0; b < k; ++b) coeffs[b] = basis[b][u];
        unknown[u] = MultiPoly::linear(coeffs);
    }
    const MultiPoly det_a = unknown[0] * unknown[3] - unknown[1] * unknown[2];
    const MultiPoly det_b = unknown[4] * unknown[7] - unknown[5] * unknown[6];
    const MultiPoly product = det_a * det_b;
    if (product.is_zero()) return {};

    // A nonzero polynomial of degree 4 has a non-root in {0..4}^k.
    std::vector<Rational> at(k, Rational(0));
    std::vector<int> digit(k, 0);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) at[i] = digit[i];
        if (sgn(product.evaluate(at)) != 0) break;
        std::size_t i = 0;
        while (i < k && ++digit[i] > 4) digit[i++] = 0;
        if (i == k) throw std::logic_error("no non-root found for a nonzero quartic");
    }
    RationalMatrix a(2, 2), b(2, 2);
    for (std::size_t u = 0; u < 4; ++u) {
        Rational va = 0, vb = 0;
        for (std::size_t j = 0; j < k; ++j) {
            va += at[j] * basis[j][u];
            vb += at[j] * basis[j][4 + u];
        }
        a(u / 2, u % 2) = va;
        b(u / 2, u % 2) = vb;
    }
    return {true, GroupElement(a, b)};
}

/// Parameters of the normal-form parametrizations of the semistable strata:
///   Y0:  A [g 0; 0 g]            Z0: A [sg uh; 0 tg] B^{-1}
///   Y1:  A [g 0; 0 h] B^{-1}     Z1: A [g k; 0 h] B^{-1}
///   Unstable: A [g h; 0 0] B^{-1}
struct NormalFormParams {
    RationalMatrix a = RationalMatrix::identity(2);
    RationalMatrix b = RationalMatrix::identity(2);
    LinearForm g, h, k;
    Rational s = 1, t = 1, u = 1;
};

inline KroneckerModule normal_form_sample(StratumLabel label, const NormalFormParams& p) {
    const LinearForm zero;
    const GroupElement group(p.a, p.b);
    auto place = [&](const LinearForm& m11, const LinearForm& m12, const LinearForm& m21, const LinearForm& m22) {
        return act(group, KroneckerModule(m11, m12, m21, m22));
    };
    switch (label) {
        case StratumLabel::Y0:
            if (p.g.is_zero()) throw DegenerateParams("Y0 needs g != 0");
            return detail::sandwich(p.a, KroneckerModule(p.g, zero, zero, p.g), RationalMatrix::identity(2));
        case StratumLabel::Z0:
            if (p.g.is_zero() || sgn(p.s) == 0 || sgn(p.t) == 0)
                throw DegenerateParams("Z0 needs g != 0 and s, t != 0");
            if (sgn(p.u) == 0 || span_dimension({p.g, p.h}) < 2)
                throw DegenerateParams("Z0 with u = 0 or h in span(g) lies in Y0");
            return place(p.s * p.g, p.u * p.h, zero, p.t * p.g);
        case StratumLabel::Y1:
            if (span_dimension({p.g, p.h}) < 2) throw DegenerateParams("Y1 needs g, h independent");
            return place(p.g, zero, zero, p.h);
        case StratumLabel::Z1:
            if (span_dimension({p.g, p.h, p.k}) < 3)
                throw DegenerateParams("Z1 needs g, h, k independent (otherwise Y0, Z0 or Y1)");
            return place(p.g, p.k, zero, p.h);
        case StratumLabel::Unstable:
            if (p.g.is_zero() && p.h.is_zero()) throw DegenerateParams("unstable normal form needs g or h nonzero");
            return place(p.g, p.h, zero, zero);
        case StratumLabel::Stable: break;
    }
    throw std::invalid_argument("no normal-form parametrization for the stable stratum");
}

}  // namespace kronquad
