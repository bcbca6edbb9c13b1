#include "oracles.hpp"

#include <gtest/gtest.h>

#include <optional>

using namespace kronquad;

namespace {

const LinearForm X = LinearForm::x(), Y = LinearForm::y(), Z = LinearForm::z(), W = LinearForm::w();

bool same_bipoint(const BiPoint& a, const BiPoint& b) {
    return a.s * b.t == a.t * b.s && a.u * b.v == a.v * b.u;
}

Rational eval_matrix_rank_entry(const BidegreeForm& f, const BiPoint& p) { return f.evaluate(p.s, p.t, p.u, p.v); }

std::size_t rank_at(const ResolutionMatrix& n, const BiPoint& p) {
    RationalMatrix m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = eval_matrix_rank_entry(n.n[i][j], p);
    return oracle::rank(m);
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.get_num().get_mpz_t()) || !mpz_perfect_square_p(r.get_den().get_mpz_t()))
        return std::nullopt;
    return Rational(sqrt(r.get_num()), sqrt(r.get_den()));
}

TEST(Segre, ChartExamples) {
    EXPECT_EQ(to_p3(BiPoint{1, 2, 3, 4}), (Point4{3, 8, 4, 6}));
    EXPECT_EQ(to_q(X), BidegreeForm::monomial(1, 0, 1, 0));
    EXPECT_EQ(to_q(Y), BidegreeForm::monomial(0, 1, 0, 1));
    EXPECT_EQ(to_q(Z), BidegreeForm::monomial(1, 0, 0, 1));
    EXPECT_EQ(to_q(W), BidegreeForm::monomial(0, 1, 1, 0));
    EXPECT_TRUE(to_q(QuadraticForm::standard_q()).is_zero());
    EXPECT_EQ(to_p3(to_q(Rational(3) * X - Z)), Rational(3) * X - Z);
    EXPECT_THROW(to_q(Point4{1, 1, 0, 0}), GeometryError);
    try {
        to_q(Point4{1, 1, 0, 0});
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.fault, GeometryFault::PointNotOnQ);
    }
}

TEST(Segre, PointRoundTrips) {
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        BiPoint b{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
        if (b.s == 0 && b.t == 0) b.s = 1;
        if (b.u == 0 && b.v == 0) b.v = 1;
        const Point4 p = to_p3(b);
        ASSERT_EQ(QuadraticForm::standard_q().evaluate(p), 0);
        ASSERT_TRUE(same_bipoint(to_q(p), b));
        // evaluation is compatible with the chart
        const LinearForm f = rng.linear_form();
        ASSERT_EQ(to_q(f).evaluate(b.s, b.t, b.u, b.v), f.evaluate(p));
        const QuadraticForm q = QuadraticForm::product(rng.linear_form(), rng.linear_form());
        ASSERT_EQ(to_q(q).evaluate(b.s, b.t, b.u, b.v), q.evaluate(p));
    }
}

TEST(ValidatePair, Examples) {
    const auto std_pair = standard_pair();
    EXPECT_EQ(validate_pair(std_pair.quadric, std_pair.line), PairStatus::Ok);
    EXPECT_EQ(validate_pair(monomial_pair().quadric, monomial_pair().line), PairStatus::Ok);
    EXPECT_EQ(validate_pair(Rational(-2) * QuadraticForm::standard_q(), std_pair.line), PairStatus::EqualsQ);
    EXPECT_EQ(validate_pair(QuadraticForm::product(X, Y), std_pair.line), PairStatus::SingularQuadric);
    const QuadraticForm sphere = parse_quadratic_form("x^2+y^2+z^2+w^2");
    EXPECT_EQ(validate_pair(sphere, std_pair.line), PairStatus::LineNotOnQuadric);
    Rng rng(42);
    const auto ruling = random_ruling_pair(rng);
    EXPECT_EQ(validate_pair(ruling.quadric, ruling.line), PairStatus::LineOnQ);
}

TEST(Rulings, Examples) {
    EXPECT_EQ(ruling_family_in_Q(LineInP3({0, 1, 0, 0}, {0, 0, 0, 1})), Ruling::FirstFactor);    // Z(x, z)
    EXPECT_EQ(ruling_family_in_Q(LineInP3({0, 1, 0, 0}, {0, 0, 1, 0})), Ruling::SecondFactor);   // Z(x, w)
    try {
        ruling_family_in_Q(LineInP3({1, 0, 0, 0}, {0, 1, 0, 0}));   // Z(z, w)
        ADD_FAILURE();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.fault, GeometryFault::NotARuling);
    }
}

TEST(Rulings, FamilyIsIndependentOfSpanningPoints) {
    Rng rng(43);
    for (int i = 0; i < 100; ++i) {
        const Rational a = rng.rational(), b = rng.nonzero_rational();
        const bool first = i % 2 == 0;
        const BiPoint p1 = first ? BiPoint{a, b, 1, rng.rational()} : BiPoint{1, rng.rational(), a, b};
        BiPoint p2 = first ? BiPoint{a, b, rng.rational(), 1} : BiPoint{rng.rational(), 1, a, b};
        const Point4 v1 = to_p3(p1), v2 = to_p3(p2);
        if (rank(RationalMatrix{{v1[0], v1[1], v1[2], v1[3]}, {v2[0], v2[1], v2[2], v2[3]}}) != 2) continue;
        ASSERT_EQ(ruling_family_in_Q(LineInP3(v1, v2)), first ? Ruling::FirstFactor : Ruling::SecondFactor);
    }
}

TEST(DivisorIdeal, StandardLine) {
    const auto c = divisor_ideal_forms(standard_pair().line);
    EXPECT_EQ(c[0], X - Z);
    EXPECT_EQ(c[1], Y - Rational(2) * W);
    try {
        divisor_ideal_forms(LineInP3({0, 1, 0, 0}, {0, 0, 0, 1}));
        ADD_FAILURE();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.fault, GeometryFault::LineOnQ);
    }
}

TEST(DivisorIdeal, DoesNotDependOnTheSpanningPair) {
    Rng rng(44);
    for (int i = 0; i < 100; ++i) {
        const auto pair = random_pushed_pair(rng, standard_pair());
        const Point4& p = pair.line.first();
        const Point4& r = pair.line.second();
        const Rational l = rng.nonzero_rational(), m = rng.rational();
        Point4 p2, r2;
        for (std::size_t k = 0; k < 4; ++k) {
            p2[k] = l * p[k] + m * r[k];
            r2[k] = r[k];
        }
        const auto a = divisor_ideal_forms(pair.line);
        const auto b = divisor_ideal_forms(LineInP3(p2, r2));
        ASSERT_EQ(a[0], b[0]);
        ASSERT_EQ(a[1], b[1]);
        for (const auto& f : a) {
            ASSERT_EQ(f.evaluate(p), 0);
            ASSERT_EQ(f.evaluate(r), 0);
        }
    }
}

TEST(Decompose, WorkedExample) {
    const BidegreeForm b = to_q(standard_pair().quadric);
    const BidegreeForm c1 = to_q(X - Z), c2 = to_q(Y - Rational(2) * W);
    const auto alpha = decompose_on_quadric(b, c1, c2);
    EXPECT_EQ(alpha[0] * c1 + alpha[1] * c2, b);
    EXPECT_EQ(alpha[0], to_q(Rational(2) * W));   // 2tu
    EXPECT_EQ(alpha[1], to_q(X));                 // su
}

TEST(Decompose, NotInIdeal) {
    const BidegreeForm su = BidegreeForm::monomial(1, 0, 1, 0), sv = BidegreeForm::monomial(1, 0, 0, 1);
    try {
        decompose_on_quadric(BidegreeForm::monomial(0, 2, 2, 0), su, sv);   // t^2 u^2 is not a multiple of s
        ADD_FAILURE();
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.fault, GeometryFault::NotInIdeal);
    }
    EXPECT_THROW(decompose_on_quadric(su, su, sv), DegreeMismatch);
}

TEST(Resolution, WorkedExample) {
    const auto pair = standard_pair();
    const ResolutionData r = resolution_from_pair(pair.quadric, pair.line);
    ASSERT_EQ(resolution_type(r), 1);
    const auto& n = std::get<ResolutionMatrix>(r);
    const BidegreeForm su = BidegreeForm::monomial(1, 0, 1, 0), sv = BidegreeForm::monomial(1, 0, 0, 1),
                       tu = BidegreeForm::monomial(0, 1, 1, 0), tv = BidegreeForm::monomial(0, 1, 0, 1);
    EXPECT_EQ(n.n[0][0], Rational(2) * tu - tv);
    EXPECT_EQ(n.n[0][1], Rational(2) * tu);
    EXPECT_EQ(n.n[1][0], su - sv);
    EXPECT_EQ(n.n[1][1], su);
    EXPECT_EQ(n.det(), BidegreeForm::monomial(1, 1, 1, 1));
    EXPECT_EQ(n.det(), -to_q(pair.quadric));
}

TEST(Resolution, Faults) {
    const auto line = standard_pair().line;
    auto fault = [&](const QuadraticForm& q, const LineInP3& l) -> std::optional<GeometryFault> {
        try {
            resolution_from_pair(q, l);
        } catch (const GeometryError& e) {
            return e.fault;
        }
        return std::nullopt;
    };
    EXPECT_EQ(fault(parse_quadratic_form("x^2+y^2+z^2+w^2"), line), GeometryFault::LineNotOnQuadric);
    EXPECT_EQ(fault(QuadraticForm::standard_q(), line), GeometryFault::EqualsQ);
    EXPECT_EQ(fault(QuadraticForm::product(X, Y), line), GeometryFault::SingularQuadric);
}

TEST(Resolution, RulingsAreRoutedByFamily) {
    Rng rng(45);
    int seen[2] = {0, 0};
    for (int i = 0; i < 100; ++i) {
        const auto pair = random_ruling_pair(rng);
        const ResolutionData r = resolution_from_pair(pair.quadric, pair.line);
        const Ruling family = ruling_family_in_Q(pair.line);
        ++seen[family == Ruling::FirstFactor];
        ASSERT_EQ(resolution_type(r), family == Ruling::SecondFactor ? 2 : 3);
        const BidegreeForm b = family == Ruling::SecondFactor ? std::get<Type2>(r).b : std::get<Type3>(r).b;
        ASSERT_EQ(b, to_q(pair.quadric));
    }
    EXPECT_GT(seen[0], 20);
    EXPECT_GT(seen[1], 20);
}

TEST(Resolution, DeterminantIsMinusB) {
    Rng rng(46);
    for (int i = 0; i < 100; ++i) {
        const auto pair = random_pushed_pair(rng, i % 2 ? standard_pair() : monomial_pair());
        const auto n = std::get<ResolutionMatrix>(resolution_from_pair(pair.quadric, pair.line));
        ASSERT_EQ(n.det(), -to_q(pair.quadric));
    }
}

TEST(Resolution, ShiftAlongTheKoszulRelationKeepsTheDeterminant) {
    Rng rng(47);
    for (int i = 0; i < 50; ++i) {
        const auto pair = random_pushed_pair(rng, standard_pair());
        const auto n = std::get<ResolutionMatrix>(resolution_from_pair(pair.quadric, pair.line));
        const Rational lambda = rng.nonzero_rational();
        // alpha -> alpha + lambda (c2, -c1), with -c2 = n00 and c1 = n10
        ResolutionMatrix shifted = n;
        shifted.n[0][1] = n.n[0][1] - lambda * n.n[0][0];
        shifted.n[1][1] = n.n[1][1] - lambda * n.n[1][0];
        ASSERT_EQ(shifted.det(), n.det());
    }
}

// N has rank <= 1 exactly on the curve b = 0; at the two points where the
// line meets Q its first column (-c2, c1) vanishes.
TEST(Resolution, RankDropsOnTheSupportCurve) {
    const auto pair = standard_pair();
    const auto n = std::get<ResolutionMatrix>(resolution_from_pair(pair.quadric, pair.line));
    const BidegreeForm b = to_q(pair.quadric);
    // l meets Q in (1,0,1,0) and (0,2,0,1).
    for (const Point4& p : {Point4{1, 0, 1, 0}, Point4{0, 2, 0, 1}}) {
        const BiPoint b0 = to_q(p);
        EXPECT_EQ(n.n[0][0].evaluate(b0.s, b0.t, b0.u, b0.v), 0);
        EXPECT_EQ(n.n[1][0].evaluate(b0.s, b0.t, b0.u, b0.v), 0);
        EXPECT_LE(rank_at(n, b0), 1u);
    }

    int on_curve = 0;
    for (int s = -3; s <= 3; ++s)
        for (int t = -3; t <= 3; ++t) {
            if (s == 0 && t == 0) continue;
            // b(s, t, u, v) = A u^2 + B uv + C v^2
            const Rational A = b.evaluate(s, t, 1, 0), C = b.evaluate(s, t, 0, 1);
            const Rational B = b.evaluate(s, t, 1, 1) - A - C;
            for (const auto& [u, v] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}, std::pair{2, -1}})
                if (b.evaluate(s, t, u, v) != 0) EXPECT_EQ(rank_at(n, BiPoint{s, t, u, v}), 2u);
            std::vector<BiPoint> roots;
            if (A == 0) {
                roots.push_back({s, t, 1, 0});
                if (B != 0) roots.push_back({s, t, -C, B});
            } else if (const auto r = rational_sqrt(B * B - 4 * A * C)) {
                roots.push_back({s, t, (-B + *r) / (2 * A), 1});
                roots.push_back({s, t, (-B - *r) / (2 * A), 1});
            }
            for (const auto& p : roots) {
                ASSERT_EQ(b.evaluate(p.s, p.t, p.u, p.v), 0);
                EXPECT_LE(rank_at(n, p), 1u);
                ++on_curve;
            }
        }
    EXPECT_GT(on_curve, 10);
}

}  // namespace
