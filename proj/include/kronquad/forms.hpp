#pragma once

// Graded and bigraded forms with dense rational coefficients.
//
// Monomial orders (these are also the wire orders):
//   LinearForm     [x, y, z, w]
//   QuadraticForm  [x^2, xy, xz, xw, y^2, yz, yw, z^2, zw, w^2]
//   BidegreeForm   row-major over (s-exponent, u-exponent), both descending;
//                  a (1,1)-form is [su, sv, tu, tv].

#include "kronquad/binary_form.hpp"
#include "kronquad/matrix.hpp"
#include "kronquad/rational.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace kronquad {

using Point4 = std::array<Rational, 4>;

enum class Var : std::size_t { x = 0, y = 1, z = 2, w = 3 };

class LinearForm {
public:
    LinearForm() = default;
    LinearForm(Rational cx, Rational cy, Rational cz, Rational cw) : c_{cx, cy, cz, cw} {}
    explicit LinearForm(const std::array<Rational, 4>& c) : c_(c) {}

    static LinearForm var(Var v, const Rational& coeff = 1) {
        LinearForm f;
        f.c_[static_cast<std::size_t>(v)] = coeff;
        return f;
    }
    static LinearForm x() { return var(Var::x); }
    static LinearForm y() { return var(Var::y); }
    static LinearForm z() { return var(Var::z); }
    static LinearForm w() { return var(Var::w); }

    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const std::array<Rational, 4>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (sgn(v) != 0) return false;
        return true;
    }

    Rational evaluate(const Point4& p) const { return c_[0] * p[0] + c_[1] * p[1] + c_[2] * p[2] + c_[3] * p[3]; }

    LinearForm operator-() const { return Rational(-1) * *this; }
    friend LinearForm operator+(LinearForm a, const LinearForm& b) {
        for (std::size_t i = 0; i < 4; ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend LinearForm operator-(const LinearForm& a, const LinearForm& b) { return a + (-b); }
    friend LinearForm operator*(const Rational& s, LinearForm f) {
        for (auto& v : f.c_) v *= s;
        return f;
    }
    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.c_ == b.c_; }

private:
    std::array<Rational, 4> c_{};
};

/// Linear dependence of a family of linear forms.
inline std::size_t span_dimension(std::initializer_list<LinearForm> forms) {
    RationalMatrix m(forms.size(), 4);
    std::size_t r = 0;
    for (const auto& f : forms) {
        for (std::size_t c = 0; c < 4; ++c) m(r, c) = f[c];
        ++r;
    }
    return rank(m);
}

class QuadraticForm {
public:
    QuadraticForm() = default;
    explicit QuadraticForm(const std::array<Rational, 10>& c) : c_(c) {}

    /// Position of x_i x_j (i <= j) in the 10-term order.
    static constexpr std::size_t index(std::size_t i, std::size_t j) {
        if (i > j) return index(j, i);
        constexpr std::size_t row_start[4] = {0, 4, 7, 9};
        return row_start[i] + (j - i);
    }

    static QuadraticForm product(const LinearForm& a, const LinearForm& b) {
        QuadraticForm q;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) q.c_[index(i, j)] += a[i] * b[j];
        return q;
    }

    /// xy - zw, the fixed quadric Q.
    static QuadraticForm standard_q() {
        QuadraticForm q;
        q.c_[index(0, 1)] = 1;
        q.c_[index(2, 3)] = -1;
        return q;
    }

    const Rational& operator[](std::size_t k) const { return c_[k]; }
    const Rational& coeff(std::size_t i, std::size_t j) const { return c_[index(i, j)]; }
    const std::array<Rational, 10>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (sgn(v) != 0) return false;
        return true;
    }

    Rational evaluate(const Point4& p) const {
        Rational acc = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i; j < 4; ++j) acc += c_[index(i, j)] * p[i] * p[j];
        return acc;
    }

    /// Symmetric Gram matrix: diagonal = square coefficients, off-diagonal =
    /// half the mixed coefficient.
    RationalMatrix gram() const {
        RationalMatrix g(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) g(i, j) = (i == j) ? c_[index(i, i)] : c_[index(i, j)] / 2;
        return g;
    }

    /// q(lambda p + mu r) as a binary quadratic in (lambda, mu).
    BinaryForm restrict_to_line(const Point4& p, const Point4& r) const {
        Point4 sum;
        for (std::size_t i = 0; i < 4; ++i) sum[i] = p[i] + r[i];
        const Rational qp = evaluate(p), qr = evaluate(r);
        return BinaryForm{qp, evaluate(sum) - qp - qr, qr};
    }

    /// Substitution x_i -> sum_j t(i,j) x_j, i.e. q(T v).
    QuadraticForm substitute(const RationalMatrix& t) const {
        std::array<LinearForm, 4> image;
        for (std::size_t i = 0; i < 4; ++i) image[i] = LinearForm(t(i, 0), t(i, 1), t(i, 2), t(i, 3));
        QuadraticForm out;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i; j < 4; ++j) {
                if (sgn(c_[index(i, j)]) == 0) continue;
                out = out + c_[index(i, j)] * product(image[i], image[j]);
            }
        return out;
    }

    QuadraticForm operator-() const { return Rational(-1) * *this; }
    friend QuadraticForm operator+(QuadraticForm a, const QuadraticForm& b) {
        for (std::size_t i = 0; i < 10; ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend QuadraticForm operator-(const QuadraticForm& a, const QuadraticForm& b) { return a + (-b); }
    friend QuadraticForm operator*(const Rational& s, QuadraticForm q) {
        for (auto& v : q.c_) v *= s;
        return q;
    }
    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.c_ == b.c_; }

private:
    std::array<Rational, 10> c_{};
};

inline std::size_t quadric_gram_rank(const QuadraticForm& q) { return rank(q.gram()); }

/// a = lambda * b with lambda != 0.
inline bool proportional(const QuadraticForm& a, const QuadraticForm& b) {
    if (a.is_zero() || b.is_zero()) return false;
    RationalMatrix m(2, 10);
    for (std::size_t k = 0; k < 10; ++k) {
        m(0, k) = a[k];
        m(1, k) = b[k];
    }
    return rank(m) == 1;
}

/// A line in P^3 given by two spanning points.
class LineInP3 {
public:
    LineInP3(Point4 p, Point4 r) : p_(std::move(p)), r_(std::move(r)) {
        if (rank(span_matrix()) != 2) throw std::invalid_argument("line needs two independent spanning points");
    }

    const Point4& first() const { return p_; }
    const Point4& second() const { return r_; }

    RationalMatrix span_matrix() const {
        RationalMatrix m(2, 4);
        for (std::size_t c = 0; c < 4; ++c) {
            m(0, c) = p_[c];
            m(1, c) = r_[c];
        }
        return m;
    }

    Point4 point(const Rational& lambda, const Rational& mu) const {
        Point4 v;
        for (std::size_t c = 0; c < 4; ++c) v[c] = lambda * p_[c] + mu * r_[c];
        return v;
    }

    bool contains(const Point4& v) const {
        RationalMatrix m = span_matrix();
        RationalMatrix ext(3, 4);
        for (std::size_t c = 0; c < 4; ++c) {
            ext(0, c) = m(0, c);
            ext(1, c) = m(1, c);
            ext(2, c) = v[c];
        }
        return rank(ext) == 2;
    }

    /// Same point set, whatever the spanning pair.
    friend bool operator==(const LineInP3& a, const LineInP3& b) { return a.contains(b.p_) && a.contains(b.r_); }

    /// Restriction of q to the line, a binary quadratic in the span coordinates.
    BinaryForm restrict(const QuadraticForm& q) const { return q.restrict_to_line(p_, r_); }
    bool lies_on(const QuadraticForm& q) const { return restrict(q).is_zero(); }

private:
    Point4 p_, r_;
};

/// Forms of bidegree (a,b) in (s,t ; u,v), sections of O_Q(a,b).
class BidegreeForm {
public:
    BidegreeForm() : BidegreeForm(0, 0) {}
    BidegreeForm(std::size_t a, std::size_t b) : a_(a), b_(b), c_((a + 1) * (b + 1)) {}
    BidegreeForm(std::size_t a, std::size_t b, std::vector<Rational> coeffs) : a_(a), b_(b), c_(std::move(coeffs)) {
        if (c_.size() != (a + 1) * (b + 1)) throw std::invalid_argument("bidegree coefficient count mismatch");
    }

    /// (1,1)-form from coefficients of su, sv, tu, tv.
    static BidegreeForm bilinear(Rational su, Rational sv, Rational tu, Rational tv) {
        return BidegreeForm(1, 1, {std::move(su), std::move(sv), std::move(tu), std::move(tv)});
    }
    static BidegreeForm monomial(std::size_t s, std::size_t t, std::size_t u, std::size_t v, const Rational& c = 1) {
        BidegreeForm f(s + t, u + v);
        f.coeff(s, u) = c;
        return f;
    }

    std::size_t deg_st() const { return a_; }
    std::size_t deg_uv() const { return b_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Coefficient of s^i t^(a-i) u^j v^(b-j).
    Rational& coeff(std::size_t s_exp, std::size_t u_exp) { return c_[slot(s_exp, u_exp)]; }
    const Rational& coeff(std::size_t s_exp, std::size_t u_exp) const { return c_[slot(s_exp, u_exp)]; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (sgn(v) != 0) return false;
        return true;
    }

    Rational evaluate(const Rational& s, const Rational& t, const Rational& u, const Rational& v) const {
        Rational acc = 0;
        for (std::size_t i = 0; i <= a_; ++i)
            for (std::size_t j = 0; j <= b_; ++j) {
                const Rational& c = coeff(i, j);
                if (sgn(c) == 0) continue;
                Rational term = c;
                for (std::size_t k = 0; k < i; ++k) term *= s;
                for (std::size_t k = i; k < a_; ++k) term *= t;
                for (std::size_t k = 0; k < j; ++k) term *= u;
                for (std::size_t k = j; k < b_; ++k) term *= v;
                acc += term;
            }
        return acc;
    }

    BidegreeForm operator-() const { return Rational(-1) * *this; }
    friend BidegreeForm operator+(BidegreeForm f, const BidegreeForm& g) {
        if (f.a_ != g.a_ || f.b_ != g.b_)
            throw DegreeMismatch("adding bidegree (" + std::to_string(f.a_) + "," + std::to_string(f.b_) +
                                 ") and (" + std::to_string(g.a_) + "," + std::to_string(g.b_) + ") forms");
        for (std::size_t k = 0; k < f.c_.size(); ++k) f.c_[k] += g.c_[k];
        return f;
    }
    friend BidegreeForm operator-(const BidegreeForm& f, const BidegreeForm& g) { return f + (-g); }
    friend BidegreeForm operator*(const BidegreeForm& f, const BidegreeForm& g) {
        BidegreeForm r(f.a_ + g.a_, f.b_ + g.b_);
        for (std::size_t i = 0; i <= f.a_; ++i)
            for (std::size_t j = 0; j <= f.b_; ++j) {
                const Rational& c = f.coeff(i, j);
                if (sgn(c) == 0) continue;
                for (std::size_t k = 0; k <= g.a_; ++k)
                    for (std::size_t l = 0; l <= g.b_; ++l) r.coeff(i + k, j + l) += c * g.coeff(k, l);
            }
        return r;
    }
    friend BidegreeForm operator*(const Rational& s, BidegreeForm f) {
        for (auto& v : f.c_) v *= s;
        return f;
    }
    friend bool operator==(const BidegreeForm& f, const BidegreeForm& g) {
        return f.a_ == g.a_ && f.b_ == g.b_ && f.c_ == g.c_;
    }

private:
    std::size_t slot(std::size_t s_exp, std::size_t u_exp) const {
        if (s_exp > a_ || u_exp > b_) throw std::out_of_range("bidegree monomial out of range");
        return (a_ - s_exp) * (b_ + 1) + (b_ - u_exp);
    }

    std::size_t a_, b_;
    std::vector<Rational> c_;
};

}  // namespace kronquad
