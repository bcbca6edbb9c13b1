#pragma once

// Geometry on Q = Z(xy - zw).
//
// Segre chart (fixed once, used everywhere):  x = su, y = tv, z = sv, w = tu.
// A linear form cx x + cy y + cz z + cw w therefore becomes the (1,1)-form
// with coefficients [su, sv, tu, tv] = [cx, cz, cw, cy].

#include "kronquad/binary_form.hpp"
#include "kronquad/forms.hpp"
#include "kronquad/matrix.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace kronquad {

enum class GeometryFault {
    SingularQuadric,
    EqualsQ,
    LineNotOnQuadric,
    LineOnQ,
    NotARuling,
    PointNotOnQ,
    NotInIdeal,
    DegenerateMatrix,
};

inline std::string_view to_string(GeometryFault f) {
    switch (f) {
        case GeometryFault::SingularQuadric: return "SingularQuadric";
        case GeometryFault::EqualsQ: return "EqualsQ";
        case GeometryFault::LineNotOnQuadric: return "LineNotOnQuadric";
        case GeometryFault::LineOnQ: return "LineOnQ";
        case GeometryFault::NotARuling: return "NotARuling";
        case GeometryFault::PointNotOnQ: return "PointNotOnQ";
        case GeometryFault::NotInIdeal: return "NotInIdeal";
        case GeometryFault::DegenerateMatrix: return "DegenerateMatrix";
    }
    return "?";
}

struct GeometryError : std::domain_error {
    explicit GeometryError(GeometryFault f) : std::domain_error(std::string(to_string(f))), fault(f) {}
    GeometryFault fault;
};

// ---------------------------------------------------------------- Segre chart

struct BiPoint {
    Rational s, t, u, v;
};

inline BidegreeForm to_q(const LinearForm& f) { return BidegreeForm::bilinear(f[0], f[2], f[3], f[1]); }

inline BidegreeForm to_q(const QuadraticForm& q) {
    std::array<BidegreeForm, 4> var;
    for (std::size_t i = 0; i < 4; ++i) var[i] = to_q(LinearForm::var(static_cast<Var>(i)));
    BidegreeForm out(2, 2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) {
            const Rational& c = q.coeff(i, j);
            if (sgn(c) != 0) out = out + c * (var[i] * var[j]);
        }
    return out;
}

inline LinearForm to_p3(const BidegreeForm& f) {
    if (f.deg_st() != 1 || f.deg_uv() != 1) throw DegreeMismatch("only (1,1)-forms correspond to linear forms");
    return {f.coeff(1, 1), f.coeff(0, 0), f.coeff(1, 0), f.coeff(0, 1)};
}

inline Point4 to_p3(const BiPoint& b) { return {b.s * b.u, b.t * b.v, b.s * b.v, b.t * b.u}; }

/// Inverse chart: [s:t] = [x:w] or [z:y], [u:v] = [x:z] or [w:y].
inline BiPoint to_q(const Point4& p) {
    const auto& [x, y, z, w] = p;
    if (sgn(x * y - z * w) != 0) throw GeometryError(GeometryFault::PointNotOnQ);
    const bool xw = sgn(x) != 0 || sgn(w) != 0;
    const bool xz = sgn(x) != 0 || sgn(z) != 0;
    if (!xw && sgn(z) == 0 && sgn(y) == 0) throw std::invalid_argument("zero vector is not a point");
    return {xw ? x : z, xw ? w : y, xz ? x : w, xz ? z : y};
}

// ----------------------------------------------------------- pairs and rulings

enum class PairStatus { Ok, SingularQuadric, EqualsQ, LineNotOnQuadric, LineOnQ };

inline std::string_view to_string(PairStatus s) {
    switch (s) {
        case PairStatus::Ok: return "ok";
        case PairStatus::SingularQuadric: return "SingularQuadric";
        case PairStatus::EqualsQ: return "EqualsQ";
        case PairStatus::LineNotOnQuadric: return "LineNotOnQuadric";
        case PairStatus::LineOnQ: return "LineOnQ";
    }
    return "?";
}

inline GeometryFault fault_of(PairStatus s) {
    switch (s) {
        case PairStatus::SingularQuadric: return GeometryFault::SingularQuadric;
        case PairStatus::EqualsQ: return GeometryFault::EqualsQ;
        case PairStatus::LineNotOnQuadric: return GeometryFault::LineNotOnQuadric;
        case PairStatus::LineOnQ: return GeometryFault::LineOnQ;
        case PairStatus::Ok: break;
    }
    throw std::logic_error("no fault for a valid pair");
}

inline PairStatus validate_pair(const QuadraticForm& q, const LineInP3& l) {
    if (quadric_gram_rank(q) != 4) return PairStatus::SingularQuadric;
    if (proportional(q, QuadraticForm::standard_q())) return PairStatus::EqualsQ;
    if (!l.lies_on(q)) return PairStatus::LineNotOnQuadric;
    if (l.lies_on(QuadraticForm::standard_q())) return PairStatus::LineOnQ;
    return PairStatus::Ok;
}

enum class Ruling {
    FirstFactor,    // {[s:t]} x P^1: the s-constant family
    SecondFactor,   // P^1 x {[u:v]}: the u-constant family
};

inline std::string_view to_string(Ruling r) { return r == Ruling::FirstFactor ? "FirstFactor" : "SecondFactor"; }

inline Ruling ruling_family_in_Q(const LineInP3& l) {
    if (!l.lies_on(QuadraticForm::standard_q())) throw GeometryError(GeometryFault::NotARuling);
    const BiPoint a = to_q(l.first()), b = to_q(l.second());
    // Distinct points of a ruling agree in exactly one factor.
    return sgn(a.s * b.t - a.t * b.s) == 0 ? Ruling::FirstFactor : Ruling::SecondFactor;
}

/// Echelon basis of the linear forms vanishing on l. Their (1,1)-images cut
/// the length-2 scheme l ∩ Q on Q, so they generate its ideal there.
inline std::array<LinearForm, 2> divisor_ideal_forms(const LineInP3& l) {
    if (l.lies_on(QuadraticForm::standard_q())) throw GeometryError(GeometryFault::LineOnQ);
    const auto ann = kernel_basis(l.span_matrix());
    const RowEchelon e = row_reduce(RationalMatrix::from_rows(ann, 4));
    auto form = [&](std::size_t r) {
        return LinearForm(e.reduced(r, 0), e.reduced(r, 1), e.reduced(r, 2), e.reduced(r, 3));
    };
    return {form(0), form(1)};
}

/// (alpha1, alpha2) with alpha1 c1 + alpha2 c2 = b; free unknowns set to zero.
inline std::array<BidegreeForm, 2> decompose_on_quadric(const BidegreeForm& b, const BidegreeForm& c1,
                                                        const BidegreeForm& c2) {
    if (b.deg_st() != 2 || b.deg_uv() != 2 || c1.deg_st() != 1 || c1.deg_uv() != 1 || c2.deg_st() != 1 ||
        c2.deg_uv() != 1)
        throw DegreeMismatch("decompose_on_quadric expects a (2,2)-form and two (1,1)-forms");
    RationalMatrix sys(9, 8);
    for (std::size_t k = 0; k < 4; ++k) {
        const BidegreeForm mono = BidegreeForm::monomial(1 - k / 2, k / 2, 1 - k % 2, k % 2);
        const auto p1 = (mono * c1).coeffs();
        const auto p2 = (mono * c2).coeffs();
        for (std::size_t r = 0; r < 9; ++r) {
            sys(r, k) = p1[r];
            sys(r, 4 + k) = p2[r];
        }
    }
    SolveResult sol;
    try {
        sol = solve(sys, b.coeffs());
    } catch (const Inconsistent&) {
        throw GeometryError(GeometryFault::NotInIdeal);
    }
    const auto& x = sol.solution;
    return {BidegreeForm::bilinear(x[0], x[1], x[2], x[3]), BidegreeForm::bilinear(x[4], x[5], x[6], x[7])};
}

// ------------------------------------------------------------ resolution data

/// 2 O_Q(-1,-1) -> 2 O_Q: a 2x2 matrix of (1,1)-forms.
struct ResolutionMatrix {
    std::array<std::array<BidegreeForm, 2>, 2> n;

    BidegreeForm det() const { return n[0][0] * n[1][1] - n[0][1] * n[1][0]; }
    friend bool operator==(const ResolutionMatrix& a, const ResolutionMatrix& b) { return a.n == b.n; }
};

/// Sheaves supported on a curve b that contains a ruling of Q, one tag per family.
struct RulingSupport {
    BidegreeForm b;
};
struct Type2 : RulingSupport {};   // the line lies in the u-constant (second-factor) family
struct Type3 : RulingSupport {};   // the line lies in the s-constant (first-factor) family

using ResolutionData = std::variant<ResolutionMatrix, Type2, Type3>;

inline int resolution_type(const ResolutionData& r) { return static_cast<int>(r.index()) + 1; }

inline ResolutionData resolution_from_pair(const QuadraticForm& q, const LineInP3& l) {
    const PairStatus status = validate_pair(q, l);
    const BidegreeForm b = to_q(q);
    if (status == PairStatus::LineOnQ) {
        if (ruling_family_in_Q(l) == Ruling::SecondFactor) return Type2{{b}};
        return Type3{{b}};
    }
    if (status != PairStatus::Ok) throw GeometryError(fault_of(status));

    const auto c = divisor_ideal_forms(l);
    const BidegreeForm c1 = to_q(c[0]), c2 = to_q(c[1]);
    const auto alpha = decompose_on_quadric(b, c1, c2);
    return ResolutionMatrix{{{{-c2, alpha[0]}, {c1, alpha[1]}}}};
}

}  // namespace kronquad
