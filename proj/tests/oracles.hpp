#pragma once

// Independent reference computations used only by the tests. They are
// deliberately naive (cofactor expansion, textbook elimination, evaluation
// instead of coefficient bookkeeping) so they share no code path with the
// library routines they check.

#include "kronquad/kronquad.hpp"

#include <array>
#include <ostream>
#include <vector>

// Readable failure messages in GoogleTest (found by argument-dependent lookup).
namespace kronquad {
inline void PrintTo(const BinaryForm& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const LinearForm& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const QuadraticForm& q, std::ostream* os) { *os << to_string(q); }
inline void PrintTo(const BidegreeForm& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const KroneckerModule& m, std::ostream* os) { *os << to_string(m); }
inline void PrintTo(const PoincarePolynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const LineInP3& l, std::ostream* os) {
    *os << "span{";
    for (const auto* v : {&l.first(), &l.second()}) *os << "(" << (*v)[0] << "," << (*v)[1] << "," << (*v)[2] << "," << (*v)[3] << ")";
    *os << "}";
}
}  // namespace kronquad

namespace oracle {

using kronquad::Rational;
using Mat = std::vector<std::vector<Rational>>;

inline Mat to_mat(const kronquad::RationalMatrix& m) {
    Mat out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    return out;
}

/// Textbook Gaussian elimination over Q, no fraction-free tricks.
inline std::size_t rank(Mat a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

inline std::size_t rank(const kronquad::RationalMatrix& m) { return rank(to_mat(m)); }

/// Cofactor expansion along the first row.
inline Rational det(const Mat& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    Rational acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c] == 0) continue;
        Mat minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(row);
        }
        const Rational term = a[0][c] * det(minor);
        acc += (c % 2 == 0) ? term : Rational(-term);
    }
    return acc;
}

/// Sylvester resultant of two binary quadratics.
inline Rational resultant(const kronquad::BinaryForm& f, const kronquad::BinaryForm& g) {
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    return det({{a[0], a[1], a[2], 0}, {0, a[0], a[1], a[2]}, {b[0], b[1], b[2], 0}, {0, b[0], b[1], b[2]}});
}

inline kronquad::Point4 basis_vector(std::size_t i) {
    kronquad::Point4 e{};
    e[i] = 1;
    return e;
}

/// dim {(A, B) : A M = M B}, assembled by evaluating M at the four basis
/// points instead of reading coefficients.
inline std::size_t commutant_dim(const kronquad::KroneckerModule& m) {
    Mat sys;
    for (std::size_t v = 0; v < 4; ++v) {
        const auto e = basis_vector(v);
        Rational mv[2][2];
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) mv[i][j] = m(i, j).evaluate(e);
        // (A mv - mv B)_{ij} for unknowns (a11 a12 a21 a22 b11 b12 b21 b22).
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                std::vector<Rational> row(8);
                for (std::size_t k = 0; k < 2; ++k) {
                    row[2 * i + k] += mv[k][j];
                    row[4 + 2 * k + j] -= mv[i][k];
                }
                sys.push_back(row);
            }
    }
    return 8 - rank(sys);
}

template <std::size_t N>
bool projectively_equal(const std::array<Rational, N>& a, const std::array<Rational, N>& b) {
    bool a_zero = true, b_zero = true;
    for (std::size_t k = 0; k < N; ++k) {
        a_zero = a_zero && a[k] == 0;
        b_zero = b_zero && b[k] == 0;
    }
    if (a_zero || b_zero) return false;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

/// Plücker coordinates of the kernel of a 2x4 matrix, from an explicit kernel basis.
inline std::array<Rational, 6> kernel_plucker(const kronquad::LineInP3& l) {
    const auto& p = l.first();
    const auto& r = l.second();
    static constexpr std::size_t pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::array<Rational, 6> out;
    for (std::size_t k = 0; k < 6; ++k) out[k] = p[pairs[k][0]] * r[pairs[k][1]] - p[pairs[k][1]] * r[pairs[k][0]];
    return out;
}

}  // namespace oracle
