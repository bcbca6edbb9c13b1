#pragma once

// Seeded instance generators for property tests, the selftest command and
// the acceptance harness. Everything derives from std::mt19937_64 (whose
// output sequence is fixed by the standard) through explicit modular
// reduction, so a seed gives the same instances on every platform.

#include "kronquad/fmbridge.hpp"
#include "kronquad/forms.hpp"
#include "kronquad/kronecker.hpp"
#include "kronquad/matrix.hpp"
#include "kronquad/quadgeom.hpp"

#include <array>
#include <cstdint>
#include <random>

namespace kronquad {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for trial `index` of a run seeded with `seed`.
    static Rng for_trial(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);   // splitmix64
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    long integer(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }

    /// n/d with |n| <= bound, 1 <= d <= max_den.
    Rational rational(long bound = 9, long max_den = 4) {
        Rational r(integer(-bound, bound), integer(1, max_den));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(long bound = 9, long max_den = 4) {
        for (;;) {
            Rational r = rational(bound, max_den);
            if (sgn(r) != 0) return r;
        }
    }

    LinearForm linear_form(long bound = 9, long max_den = 1) {
        return {rational(bound, max_den), rational(bound, max_den), rational(bound, max_den), rational(bound, max_den)};
    }

    LinearForm nonzero_linear_form(long bound = 9, long max_den = 1) {
        for (;;) {
            LinearForm f = linear_form(bound, max_den);
            if (!f.is_zero()) return f;
        }
    }

    RationalMatrix invertible(std::size_t n, long bound = 5, long max_den = 3) {
        for (;;) {
            RationalMatrix m(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) m(r, c) = rational(bound, max_den);
            if (rank(m) == n) return m;
        }
    }

private:
    std::mt19937_64 engine_;
};

inline GroupElement random_group_element(Rng& rng) { return {rng.invertible(2), rng.invertible(2)}; }

/// Integer coefficients uniform in [-bound, bound].
inline KroneckerModule random_module(Rng& rng, long bound = 9) {
    for (;;) {
        const LinearForm a = rng.linear_form(bound), b = rng.linear_form(bound), c = rng.linear_form(bound),
                         d = rng.linear_form(bound);
        if (!(a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero())) return {a, b, c, d};
    }
}

inline KroneckerModule random_stable_module(Rng& rng) {
    for (;;) {
        KroneckerModule m = random_module(rng);
        if (semistability_level(m) == Semistability::Stable) return m;
    }
}

inline constexpr std::array<StratumLabel, 4> kSemistableStrata{StratumLabel::Y0, StratumLabel::Z0, StratumLabel::Y1,
                                                                 StratumLabel::Z1};

/// A normal form of the given stratum with random parameters, moved by a
/// further random group element.
inline KroneckerModule random_stratum_sample(Rng& rng, StratumLabel label) {
    for (;;) {
        NormalFormParams p;
        p.a = rng.invertible(2);
        p.b = rng.invertible(2);
        p.g = rng.linear_form(5, 2);
        p.h = rng.linear_form(5, 2);
        p.k = rng.linear_form(5, 2);
        p.s = rng.rational(5, 3);
        p.t = rng.rational(5, 3);
        p.u = rng.rational(5, 3);
        try {
            return act(random_group_element(rng), normal_form_sample(label, p));
        } catch (const DegenerateParams&) {
        }
    }
}

inline KroneckerModule random_semistable_module(Rng& rng) {
    return random_stratum_sample(rng, kSemistableStrata[static_cast<std::size_t>(rng.integer(0, 3))]);
}

inline BidegreeForm random_bilinear(Rng& rng, long bound = 9) {
    return BidegreeForm::bilinear(rng.rational(bound, 1), rng.rational(bound, 1), rng.rational(bound, 1),
                                  rng.rational(bound, 1));
}

inline ResolutionMatrix random_resolution_matrix(Rng& rng) {
    for (;;) {
        ResolutionMatrix r{{{{random_bilinear(rng), random_bilinear(rng)}, {random_bilinear(rng), random_bilinear(rng)}}}};
        if (!r.det().is_zero()) return r;
    }
}

struct QuadricLinePair {
    QuadraticForm quadric;
    LineInP3 line;
};

/// (xy - 2zw, span{(1,0,1,0), (0,2,0,1)}).
inline QuadricLinePair standard_pair() {
    return {QuadraticForm::product(LinearForm::x(), LinearForm::y()) -
                Rational(2) * QuadraticForm::product(LinearForm::z(), LinearForm::w()),
            LineInP3({1, 0, 1, 0}, {0, 2, 0, 1})};
}

/// (xz - yw, Z(x, y)).
inline QuadricLinePair monomial_pair() {
    return {QuadraticForm::product(LinearForm::x(), LinearForm::z()) -
                QuadraticForm::product(LinearForm::y(), LinearForm::w()),
            LineInP3({0, 0, 1, 0}, {0, 0, 0, 1})};
}

/// Image of a pair under the coordinate change v -> T v.
inline QuadricLinePair push_pair(const QuadricLinePair& pair, const RationalMatrix& t) {
    auto apply = [&](const Point4& v) {
        Point4 out;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) out[i] += t(i, j) * v[j];
        return out;
    };
    return {pair.quadric.substitute(inverse(t)), LineInP3(apply(pair.line.first()), apply(pair.line.second()))};
}

/// Pushes a base pair through random coordinate changes until Q is not
/// accidentally one of the two quadrics' special positions.
inline QuadricLinePair random_pushed_pair(Rng& rng, const QuadricLinePair& base) {
    for (;;) {
        QuadricLinePair p = push_pair(base, rng.invertible(4, 3, 2));
        if (validate_pair(p.quadric, p.line) == PairStatus::Ok) return p;
    }
}

/// A ruling of Q (random family, random rational member) together with a
/// smooth quadric Q' != Q through it.
inline QuadricLinePair random_ruling_pair(Rng& rng) {
    const Rational a = rng.rational(5, 3), b = rng.nonzero_rational(5, 3);
    const bool first_factor = rng.integer(0, 1) == 0;
    // First factor: [s:t] = [a:b] fixed; second: [u:v] = [a:b] fixed.
    const LineInP3 line = first_factor ? LineInP3(to_p3(BiPoint{a, b, 1, 0}), to_p3(BiPoint{a, b, 0, 1}))
                                       : LineInP3(to_p3(BiPoint{1, 0, a, b}), to_p3(BiPoint{0, 1, a, b}));
    const auto ann = kernel_basis(line.span_matrix());
    for (;;) {
        const Rational c0 = rng.rational(5, 1), c1 = rng.rational(5, 1);
        const LinearForm vanishing(c0 * ann[0][0] + c1 * ann[1][0], c0 * ann[0][1] + c1 * ann[1][1],
                                   c0 * ann[0][2] + c1 * ann[1][2], c0 * ann[0][3] + c1 * ann[1][3]);
        const QuadraticForm q =
            QuadraticForm::standard_q() + QuadraticForm::product(vanishing, rng.linear_form(5, 1));
        if (quadric_gram_rank(q) == 4 && !proportional(q, QuadraticForm::standard_q())) return {q, line};
    }
}

}  // namespace kronquad
