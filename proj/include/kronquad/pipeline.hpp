#pragma once

// End-to-end checks: the round trip (quadric, line) -> resolution matrix ->
// Kronecker module -> conic -> swept quadric, and the seeded property suite
// behind the selftest command.

#include "kronquad/fmbridge.hpp"
#include "kronquad/grconic.hpp"
#include "kronquad/kronecker.hpp"
#include "kronquad/quadgeom.hpp"
#include "kronquad/random.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kronquad {

struct StageResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct RoundtripReport {
    std::vector<StageResult> stages;
    std::optional<GeometryFault> fault;   // set when the pair itself was rejected
    std::optional<ResolutionData> resolution;
    std::optional<KroneckerModule> module;
    std::optional<ConicInGrassmannian> conic;
    std::optional<QuadraticForm> swept;
    std::optional<Parameter> parameter;
    std::optional<SpecialDivisor> contracted_to;

    bool passed() const {
        if (stages.empty()) return false;
        for (const auto& s : stages)
            if (!s.passed) return false;
        return true;
    }
    const StageResult* first_failure() const {
        for (const auto& s : stages)
            if (!s.passed) return &s;
        return nullptr;
    }
};

inline RoundtripReport roundtrip(const QuadraticForm& q, const LineInP3& l) {
    RoundtripReport rep;
    auto stage = [&](std::string name, bool ok, std::string detail = {}) {
        rep.stages.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    };

    try {
        rep.resolution = resolution_from_pair(q, l);
    } catch (const GeometryError& e) {
        rep.fault = e.fault;
        stage("psi", false, e.what());
        return rep;
    }

    QuadraticForm expected = q;
    if (const auto* n = std::get_if<ResolutionMatrix>(&*rep.resolution)) {
        const bool det_ok = n->det() == -to_q(q);
        if (!stage("psi", det_ok, det_ok ? "type 1, det N = -b" : "det N != -b")) return rep;
        const KroneckerModule m = transport_to_p3(*n);
        const bool back = transport_to_q(m) == *n;
        const bool det_compat = to_q(det_quadric(m)) == n->det();
        rep.module = m;
        if (!stage("transport", back && det_compat,
                   !back ? "inverse transport differs" : !det_compat ? "det compatibility fails" : "exact inverse"))
            return rep;
    } else {
        const TransportCertificate cert = transport(*rep.resolution);
        rep.contracted_to = std::holds_alternative<Type2>(*rep.resolution) ? SpecialDivisor::D10 : SpecialDivisor::D01;
        stage("psi", true, "type " + std::to_string(resolution_type(*rep.resolution)) + ", line is a ruling of Q");
        rep.module = cert.target;
        stage("transport", true, std::string("contracted to ") + std::string(to_string(*rep.contracted_to)));
        expected = QuadraticForm::standard_q();
    }

    const StratumLabel label = classify_stratum(*rep.module);
    if (!stage("classify", label == StratumLabel::Stable, std::string(to_string(label)))) return rep;

    rep.conic = phi(*rep.module);
    const ConicDiagnostics diag = conic_diagnostics(*rep.conic);
    if (!stage("phi", diag.plucker_ok && diag.degree == 2 && diag.basepoint_gcd.is_nonzero_constant(),
               diag.plucker_ok ? "Plücker relation holds, degree " + std::to_string(diag.degree)
                               : "Plücker relation fails"))
        return rep;

    rep.swept = swept_quadric(*rep.module);
    if (!stage("swept_quadric", rep.swept && proportional(*rep.swept, expected),
               !rep.swept                          ? "lines do not determine a unique quadric"
               : !proportional(*rep.swept, expected) ? "differs from the expected quadric"
               : rep.contracted_to                   ? "proportional to xy - zw"
                                                     : "proportional to the input quadric"))
        return rep;

    rep.parameter = parameter_of_line(*rep.module, l);
    stage("parameter_of_line", rep.parameter.has_value(),
          rep.parameter ? "[" + to_string(rep.parameter->first) + ":" + to_string(rep.parameter->second) + "]"
                        : "no rational parameter");
    return rep;
}

// ------------------------------------------------------------------ selftest

struct PropertyResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::optional<std::size_t> first_failed_trial;
};

struct SelftestReport {
    std::uint64_t seed;
    std::size_t trials;
    std::vector<PropertyResult> properties;

    bool passed() const {
        for (const auto& p : properties)
            if (p.failed) return false;
        return true;
    }
};

namespace detail {

using Property = std::function<bool(Rng&)>;

inline std::vector<std::pair<std::string, Property>> selftest_properties() {
    return {
        {"group_invariance",
         [](Rng& rng) {
             const KroneckerModule m =
                 rng.integer(0, 1) ? random_module(rng, 3) : random_semistable_module(rng);
             const KroneckerModule n = act(random_group_element(rng), m);
             const Classification a = classify(m), b = classify(n);
             return a.stratum == b.stratum && a.end_dim == b.end_dim &&
                    a.dependency.degree() == b.dependency.degree() &&
                    a.dependency.is_zero() == b.dependency.is_zero() &&
                    (det_quadric(m).is_zero() ? det_quadric(n).is_zero()
                                              : proportional(det_quadric(m), det_quadric(n)));
         }},
        {"normal_forms",
         [](Rng& rng) {
             const StratumLabel label = kSemistableStrata[static_cast<std::size_t>(rng.integer(0, 3))];
             return classify_stratum(random_stratum_sample(rng, label)) == label;
         }},
        {"plucker",
         [](Rng& rng) {
             const ConicDiagnostics d = conic_diagnostics(phi(random_stable_module(rng)));
             return d.plucker_ok && d.basepoint_gcd.is_nonzero_constant();
         }},
        {"basepoints_iff_not_stable",
         [](Rng& rng) { return !dependency_form(random_semistable_module(rng)).is_nonzero_constant(); }},
        {"fitting_support",
         [](Rng& rng) {
             const KroneckerModule m = random_stable_module(rng);
             const QuadraticForm det = det_quadric(m);
             Rational s = rng.rational(), t = rng.rational();
             if (sgn(s) == 0 && sgn(t) == 0) t = 1;
             return line_at_parameter(m, s, t).lies_on(det);
         }},
        {"transport_roundtrip",
         [](Rng& rng) {
             const ResolutionMatrix n = random_resolution_matrix(rng);
             const KroneckerModule m = transport_to_p3(n);
             return transport_to_q(m) == n && to_q(det_quadric(m)) == n.det();
         }},
        {"orbit_witness",
         [](Rng& rng) {
             const KroneckerModule m = random_module(rng, 3);
             const KroneckerModule n = act(random_group_element(rng), m);
             const Equivalence e = is_equivalent(m, n);
             return e.equivalent && e.witness && act(*e.witness, m) == n;
         }},
        {"pair_roundtrip",
         [](Rng& rng) {
             const QuadricLinePair base = rng.integer(0, 1) ? standard_pair() : monomial_pair();
             const QuadricLinePair p = random_pushed_pair(rng, base);
             return roundtrip(p.quadric, p.line).passed();
         }},
        {"ruling_contraction",
         [](Rng& rng) {
             const QuadricLinePair p = random_ruling_pair(rng);
             return roundtrip(p.quadric, p.line).passed();
         }},
    };
}

}  // namespace detail

/// Every property runs `trials` times; trial i of property k draws from the
/// stream Rng::for_trial(seed, k * trials + i), so reports depend only on
/// (seed, trials).
inline SelftestReport selftest(std::uint64_t seed, std::size_t trials) {
    SelftestReport rep{seed, trials, {}};
    const auto props = detail::selftest_properties();
    for (std::size_t k = 0; k < props.size(); ++k) {
        PropertyResult r{props[k].first};
        for (std::size_t i = 0; i < trials; ++i) {
            Rng rng = Rng::for_trial(seed, k * trials + i);
            bool ok = false;
            try {
                ok = props[k].second(rng);
            } catch (const std::exception&) {
                ok = false;
            }
            if (ok) {
                ++r.passed;
            } else {
                ++r.failed;
                if (!r.first_failed_trial) r.first_failed_trial = i;
            }
        }
        rep.properties.push_back(std::move(r));
    }
    return rep;
}

}  // namespace kronquad
