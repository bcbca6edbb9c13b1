// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Everything is seeded, so a failure reproduces exactly.

#include "kronquad/kronquad.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace kronquad;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void check(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
};

PoincarePolynomial descending(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return PoincarePolynomial(std::vector<Integer>(v.rbegin(), v.rend()));
}

Outcome motivic_golden() {
    Outcome o;
    const auto table = pipeline_M2();
    const auto& m0 = lookup(table, "M2_0plus");
    const auto& m2 = lookup(table, "M2");
    o.check(m0 == descending({1, 4, 8, 9, 10, 10, 10, 9, 8, 4, 1}), "P(M2^0+) = " + m0.to_string());
    o.check(m2 == descending({1, 3, 4, 3, 3, 2, 3, 3, 3, 1}), "P(M2) = " + m2.to_string());
    o.check(euler(m2) == 26, "e(M2) = " + euler(m2).get_str());
    const Integer e_r = euler(lookup(table, "R"));
    o.check(e_r == 10, "e(R) = " + e_r.get_str());
    o.check(e_r == 0 + euler(sym2(proj_space(3))), "e(R) != e(Sym2 P3)");
    return o;
}

Outcome stratum_soundness() {
    Outcome o;
    std::uint64_t index = 0;
    for (const auto label : kSemistableStrata)
        for (int i = 0; i < 1000; ++i) {
            Rng rng = Rng::for_trial(2, index++);
            const StratumLabel got = classify_stratum(random_stratum_sample(rng, label));
            o.check(got == label, std::string(to_string(label)) + " sample " + std::to_string(i) + " classified " +
                                      std::string(to_string(got)));
        }
    return o;
}

Outcome stability_frequency() {
    Outcome o;
    Rng rng(3);
    int stable = 0;
    for (int i = 0; i < 1000; ++i) {
        const KroneckerModule m = random_module(rng, 9);
        if (classify_stratum(m) != StratumLabel::Stable) continue;
        ++stable;
        o.check(dependency_form(m).is_nonzero_constant(), "stable module with nonconstant dependency form");
    }
    o.check(stable >= 990, std::to_string(stable) + "/1000 stable");
    if (o.ok) o.note = std::to_string(stable) + "/1000 stable";
    return o;
}

Outcome plucker_certificate() {
    Outcome o;
    for (int i = 0; i < 500; ++i) {
        Rng rng = Rng::for_trial(4, i);
        const auto d = conic_diagnostics(phi(random_stable_module(rng)));
        o.check(d.plucker_ok, "Plücker quartic nonzero at stable sample " + std::to_string(i));
        o.check(d.basepoint_gcd.is_nonzero_constant(), "basepoint at stable sample " + std::to_string(i));
    }
    for (int i = 0; i < 500; ++i) {
        Rng rng = Rng::for_trial(4, 500 + i);
        const auto q = pencil_minors(random_semistable_module(rng));
        o.check(!gcd(std::span<const BinaryForm>(q)).is_nonzero_constant(),
                "no basepoint at strictly semistable sample " + std::to_string(i));
    }
    return o;
}

Outcome fitting_support() {
    Outcome o;
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::for_trial(5, i);
        const KroneckerModule m = random_stable_module(rng);
        const QuadraticForm det = det_quadric(m);
        for (int k = 0; k < 5; ++k) {
            Rational s = rng.rational(), t = rng.rational();
            if (sgn(s) == 0 && sgn(t) == 0) t = 1;
            const LineInP3 l = line_at_parameter(m, s, t);
            // the line lies on det M iff three of its points do
            for (const auto& [a, b] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}})
                o.check(sgn(det.evaluate(l.point(a, b))) == 0, "point off det M, sample " + std::to_string(i));
            o.check(l.lies_on(det), "line not on det M, sample " + std::to_string(i));
        }
    }
    return o;
}

Outcome fm_transport() {
    Outcome o;
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::for_trial(6, i);
        const ResolutionMatrix n = random_resolution_matrix(rng);
        const KroneckerModule m = transport_to_p3(n);
        o.check(transport_to_q(m) == n, "round trip differs at sample " + std::to_string(i));
        o.check(to_q(det_quadric(m)) == n.det(), "det compatibility fails at sample " + std::to_string(i));
    }
    return o;
}

Outcome diagram_check() {
    Outcome o;
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::for_trial(7, i);
        const auto pair = random_pushed_pair(rng, i % 2 == 0 ? standard_pair() : monomial_pair());
        const RoundtripReport rep = roundtrip(pair.quadric, pair.line);
        const StageResult* bad = rep.first_failure();
        o.check(rep.passed(), "pair " + std::to_string(i) + ": " + (bad ? bad->name + " " + bad->detail : "empty"));
        o.check(rep.resolution && resolution_type(*rep.resolution) == 1, "pair " + std::to_string(i) + " not type 1");
    }
    return o;
}

Outcome divisor_contraction() {
    Outcome o;
    int families[2] = {0, 0};
    for (int i = 0; i < 50; ++i) {
        Rng rng = Rng::for_trial(8, i);
        const auto pair = random_ruling_pair(rng);
        const ResolutionData r = resolution_from_pair(pair.quadric, pair.line);
        const bool second = ruling_family_in_Q(pair.line) == Ruling::SecondFactor;
        ++families[second];
        o.check(resolution_type(r) == (second ? 2 : 3), "ruling pair " + std::to_string(i) + " misrouted");
        const SpecialDivisor d = second ? SpecialDivisor::D10 : SpecialDivisor::D01;
        o.check(transport(r).target == canonical_special_module(d), "wrong special module");
        o.check(roundtrip(pair.quadric, pair.line).passed(), "round trip fails for ruling pair " + std::to_string(i));
    }
    const KroneckerModule d10 = canonical_special_module(SpecialDivisor::D10);
    const KroneckerModule d01 = canonical_special_module(SpecialDivisor::D01);
    const ConicInGrassmannian c10 = phi(d10), c01 = phi(d01);
    o.check(!(c10 == c01), "special conics coincide");
    // distinct as conics: they share no line (the rulings are disjoint families)
    o.check(!parameter_of_line(d01, line_at_parameter(d10, 1, 0)), "special conics share a line");
    for (const auto* m : {&d10, &d01}) {
        const auto swept = swept_quadric(*m);
        o.check(swept && proportional(*swept, QuadraticForm::standard_q()), "special conic does not sweep Q");
    }
    o.note = std::to_string(families[1]) + " type 2, " + std::to_string(families[0]) + " type 3";
    return o;
}

Outcome polystable_transport() {
    Outcome o;
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::for_trial(9, i);
        const BidegreeForm n1 = random_bilinear(rng, 5);
        BidegreeForm n2 = random_bilinear(rng, 5);
        const bool same = i % 2 == 1;
        if (same) n2 = rng.nonzero_rational() * n1;
        if (n1.is_zero() || n2.is_zero()) continue;
        const ResolutionMatrix block{{{{n1, BidegreeForm(1, 1)}, {BidegreeForm(1, 1), n2}}}};
        const KroneckerModule m = transport_to_p3(block);
        const LinearForm g = to_p3(n1), h = to_p3(n2);
        const bool distinct = span_dimension({g, h}) == 2;
        const StratumLabel label = classify_stratum(m);
        o.check(label == (distinct ? StratumLabel::Y1 : StratumLabel::Y0),
                "block " + std::to_string(i) + " classified " + std::string(to_string(label)));
        // the unordered pair of supports is the point of P3 x P3 / Z2
        const KroneckerModule swapped(h, LinearForm(), LinearForm(), g);
        o.check(is_equivalent(m, swapped).equivalent, "swap of supports not equivalent, block " + std::to_string(i));
        o.check(proportional(det_quadric(m), QuadraticForm::product(g, h)), "det differs from the support product");
        if (distinct) {
            const KroneckerModule other(g, LinearForm(), LinearForm(), g + h);
            o.check(!is_equivalent(m, other).equivalent, "different support pairs equivalent");
        }
        // same support, non-split extension: Z0
        if (same) {
            const LinearForm k = rng.nonzero_linear_form(5);
            if (span_dimension({g, k}) == 2) {
                const KroneckerModule ext(g, k, LinearForm(), g);
                o.check(classify_stratum(ext) == StratumLabel::Z0, "same-support extension not Z0");
                o.check(!is_equivalent(ext, m).equivalent, "extension equivalent to the split sum");
            }
        }
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "motivic golden values", 1, motivic_golden},
        {"AC2", "stratum classifier soundness (4 x 1000)", 30, stratum_soundness},
        {"AC3", "stability frequency (1000 random modules)", 10, stability_frequency},
        {"AC4", "Plücker certificate (500 + 500)", 30, plucker_certificate},
        {"AC5", "Fitting-support coherence (200 x 5)", 60, fitting_support},
        {"AC6", "transport round trip (200)", 60, fm_transport},
        {"AC7", "end-to-end diagram (100 pairs)", 60, diagram_check},
        {"AC8", "contraction of the ruling divisors (50)", 60, divisor_contraction},
        {"AC9", "polystable transport", 60, polystable_transport},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            o.ok = false;
            std::ostringstream why;
            why << "over the " << c.limit_seconds << " s limit";
            o.note = o.note.empty() ? why.str() : o.note + "; " + why.str();
        }
        failures += !o.ok;
        std::printf("[%s] %s %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                    o.note.empty() ? "" : " - ", o.note.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
