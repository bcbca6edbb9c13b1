#pragma once

// JSON wire format (schemas/ has the formal description).
//
//   rational        "p/q" string ("p" when q = 1); integers accepted on input
//   linear form     [x, y, z, w]
//   quadric         [x^2, xy, xz, xw, y^2, yz, yw, z^2, zw, w^2]
//   binary form     highest s-power first, e.g. [s^2, st, t^2]
//   (1,1)-form      [su, sv, tu, tv]; (2,2)-form row-major over (s-exp, u-exp)
//   module          [[m11, m12], [m21, m22]] of linear forms
//   line            [p, r], two spanning points
//   group element   {"target": 2x2, "source": 2x2}
//
// With pretty = true every form is written as a polynomial string instead.
// Input accepts either spelling.

#include "kronquad/expr.hpp"
#include "kronquad/fmbridge.hpp"
#include "kronquad/grconic.hpp"
#include "kronquad/kronecker.hpp"
#include "kronquad/motivic.hpp"
#include "kronquad/pipeline.hpp"
#include "kronquad/quadgeom.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace kronquad::wire {

using Json = nlohmann::ordered_json;

// ------------------------------------------------------------------- output

inline Json rational(const Rational& r) { return to_string(r); }

template <class Range>
Json rationals(const Range& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(rational(v));
    return out;
}

inline Json linear(const LinearForm& f, bool pretty) { return pretty ? Json(to_string(f)) : rationals(f.coeffs()); }
inline Json quadric(const QuadraticForm& q, bool pretty) { return pretty ? Json(to_string(q)) : rationals(q.coeffs()); }
inline Json binary(const BinaryForm& f, bool pretty, char a = 's', char b = 't') {
    return pretty ? Json(to_string(f, a, b)) : rationals(f.coeffs());
}
inline Json bidegree(const BidegreeForm& f, bool pretty) { return pretty ? Json(to_string(f)) : rationals(f.coeffs()); }

inline Json module(const KroneckerModule& m, bool pretty) {
    return Json::array({Json::array({linear(m(0, 0), pretty), linear(m(0, 1), pretty)}),
                        Json::array({linear(m(1, 0), pretty), linear(m(1, 1), pretty)})});
}

inline Json matrix(const RationalMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(rationals(m.row(r)));
    return out;
}

inline Json group_element(const GroupElement& g) {
    return Json{{"target", matrix(g.target())}, {"source", matrix(g.source())}};
}

inline Json line(const LineInP3& l) { return Json::array({rationals(l.first()), rationals(l.second())}); }

inline Json conic(const ConicInGrassmannian& c, bool pretty) {
    Json out = Json::array();
    for (const auto& f : c.p) out.push_back(binary(f, pretty));
    return out;
}

inline Json resolution(const ResolutionData& r, bool pretty) {
    if (const auto* n = std::get_if<ResolutionMatrix>(&r)) {
        Json m = Json::array();
        for (const auto& row : n->n) m.push_back(Json::array({bidegree(row[0], pretty), bidegree(row[1], pretty)}));
        return Json{{"type", 1}, {"matrix", m}, {"det", bidegree(n->det(), pretty)}};
    }
    const BidegreeForm& b = std::holds_alternative<Type2>(r) ? std::get<Type2>(r).b : std::get<Type3>(r).b;
    return Json{{"type", resolution_type(r)}, {"b", bidegree(b, pretty)}};
}

inline Json classification(const Classification& c, bool pretty) {
    return Json{{"stratum", std::string(to_string(c.stratum))},
                {"dependency_form", binary(c.dependency, pretty, 'a', 'b')},
                {"end_dim", c.end_dim},
                {"det_gram_rank", c.det_gram_rank}};
}

inline Json parameter(const Parameter& p) { return Json::array({rational(p.first), rational(p.second)}); }

inline Json roundtrip_report(const RoundtripReport& r, bool pretty) {
    Json stages = Json::array();
    for (const auto& s : r.stages)
        stages.push_back(Json{{"stage", s.name}, {"result", s.passed ? "PASS" : "FAIL"}, {"detail", s.detail}});
    Json out{{"result", r.passed() ? "PASS" : "FAIL"}, {"stages", stages}};
    if (r.fault) out["reason"] = std::string(to_string(*r.fault));
    if (r.resolution) out["resolution"] = resolution(*r.resolution, pretty);
    if (r.contracted_to) out["contracted_to"] = std::string(to_string(*r.contracted_to));
    if (r.module) out["module"] = module(*r.module, pretty);
    if (r.conic) out["conic"] = conic(*r.conic, pretty);
    if (r.swept) out["swept_quadric"] = quadric(*r.swept, pretty);
    if (r.parameter) out["parameter"] = parameter(*r.parameter);
    return out;
}

inline Json poincare(const PoincarePolynomial& p, bool pretty) {
    if (pretty) return p.to_string();
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

inline Json selftest_report(const SelftestReport& r) {
    Json props = Json::array();
    for (const auto& p : r.properties) {
        Json row{{"property", p.name}, {"passed", p.passed}, {"failed", p.failed}};
        if (p.first_failed_trial) row["first_failed_trial"] = *p.first_failed_trial;
        props.push_back(row);
    }
    return Json{{"result", r.passed() ? "PASS" : "FAIL"}, {"seed", r.seed}, {"trials", r.trials}, {"properties", props}};
}

// -------------------------------------------------------------------- input

inline Rational to_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(j.dump());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational (string \"p/q\" or integer), got " + j.dump());
}

template <std::size_t N>
std::array<Rational, N> rational_array(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != N)
        throw ParseError(std::string(what) + " needs " + std::to_string(N) + " coefficients, got " + j.dump());
    std::array<Rational, N> out;
    for (std::size_t k = 0; k < N; ++k) out[k] = to_rational(j[k]);
    return out;
}

inline LinearForm to_linear(const Json& j) {
    if (j.is_string()) return parse_linear_form(j.get<std::string>());
    if (j.is_number_integer() && j.get<long long>() == 0) return {};
    return LinearForm(rational_array<4>(j, "linear form"));
}

inline QuadraticForm to_quadric(const Json& j) {
    if (j.is_string()) return parse_quadratic_form(j.get<std::string>());
    return QuadraticForm(rational_array<10>(j, "quadric"));
}

inline KroneckerModule to_module(const Json& j) {
    if (j.is_string()) return parse_module_expression(j.get<std::string>());
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
        j[1].size() != 2)
        throw ParseError("module must be a 2x2 array of linear forms");
    try {
        return {to_linear(j[0][0]), to_linear(j[0][1]), to_linear(j[1][0]), to_linear(j[1][1])};
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

/// [p, r] spanning points, or {"zeros": [f, g]} for the line Z(f, g).
inline LineInP3 to_line(const Json& j) {
    try {
        if (j.is_object() && j.contains("zeros")) {
            const Json& z = j.at("zeros");
            if (!z.is_array() || z.size() != 2) throw ParseError("\"zeros\" needs two linear forms");
            const LinearForm f = to_linear(z[0]), g = to_linear(z[1]);
            RationalMatrix m(2, 4);
            for (std::size_t c = 0; c < 4; ++c) {
                m(0, c) = f[c];
                m(1, c) = g[c];
            }
            const auto k = kernel_basis(m);
            if (k.size() != 2) throw ParseError("the two linear forms do not cut out a line");
            return {{k[0][0], k[0][1], k[0][2], k[0][3]}, {k[1][0], k[1][1], k[1][2], k[1][3]}};
        }
        if (!j.is_array() || j.size() != 2) throw ParseError("line must be [p, r] or {\"zeros\": [f, g]}");
        return {rational_array<4>(j[0], "point"), rational_array<4>(j[1], "point")};
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace kronquad::wire
