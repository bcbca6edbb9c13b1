#pragma once

// The transform between resolution matrices on Q and Kronecker modules on
// P^3. On representatives it is plain coefficient transport through the
// Segre chart; the two contracted divisors go to fixed modules.

#include "kronquad/kronecker.hpp"
#include "kronquad/quadgeom.hpp"

#include <string_view>
#include <variant>

namespace kronquad {

inline KroneckerModule transport_to_p3(const ResolutionMatrix& r) {
    if (r.det().is_zero()) throw GeometryError(GeometryFault::DegenerateMatrix);
    return {to_p3(r.n[0][0]), to_p3(r.n[0][1]), to_p3(r.n[1][0]), to_p3(r.n[1][1])};
}

/// Inverse transport. Only det M = 0 is rejected: modules whose determinant
/// is a multiple of xy - zw (the two special points among them) come back
/// as matrices with det N = 0 on Q.
inline ResolutionMatrix transport_to_q(const KroneckerModule& m) {
    if (det_quadric(m).is_zero()) throw GeometryError(GeometryFault::DegenerateMatrix);
    return {{{{to_q(m(0, 0)), to_q(m(0, 1))}, {to_q(m(1, 0)), to_q(m(1, 1))}}}};
}

enum class SpecialDivisor { D10, D01 };

inline std::string_view to_string(SpecialDivisor d) { return d == SpecialDivisor::D10 ? "D10" : "D01"; }

/// D10: kernel lines form the second-factor ruling; D01: the first-factor one.
inline KroneckerModule canonical_special_module(SpecialDivisor which) {
    const LinearForm x = LinearForm::x(), y = LinearForm::y(), z = LinearForm::z(), w = LinearForm::w();
    if (which == SpecialDivisor::D10) return {x, z, w, y};
    return {x, w, z, y};
}

enum class TransportDirection { ToP3, ToQ };

struct TransportCertificate {
    ResolutionData source;
    KroneckerModule target;
    TransportDirection direction;
};

/// The full transform on resolution data: type 1 by transport, types 2 and 3
/// collapse to the special modules.
inline TransportCertificate transport(const ResolutionData& r) {
    if (const auto* m = std::get_if<ResolutionMatrix>(&r))
        return {r, transport_to_p3(*m), TransportDirection::ToP3};
    const SpecialDivisor d = std::holds_alternative<Type2>(r) ? SpecialDivisor::D10 : SpecialDivisor::D01;
    return {r, canonical_special_module(d), TransportDirection::ToP3};
}

}  // namespace kronquad
