#pragma once

// Dense rational matrices and exact elimination.
//
// Elimination is fraction-free: every row is first scaled to integers, the
// integer matrix is brought to echelon form with Bareiss' update
//     a_ij <- (a_rc * a_ij - a_ic * a_rj) / previous_pivot
// (the division is exact by Sylvester's identity), and only the final
// back-substitution to reduced form happens over Q.

#include "kronquad/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kronquad {

using RationalVector = std::vector<Rational>;

struct Inconsistent : std::domain_error {
    Inconsistent() : std::domain_error("linear system is inconsistent") {}
};

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const {
        return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
        RationalMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (sgn(v) != 0) return false;
        return true;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        RationalMatrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (sgn(a(i, k)) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
            }
        return p;
    }

    friend RationalMatrix operator*(const Rational& s, RationalMatrix m) {
        for (auto& v : m.data_) v *= s;
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form plus the pivot columns, in increasing order.
struct RowEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

namespace detail {

inline std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Integer& d = m(r, c).get_den();
            if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Rational scaled = m(r, c) * Rational(l);
            out[r][c] = scaled.get_num();
        }
    }
    return out;
}

}  // namespace detail

/// Fraction-free (Bareiss) echelon, followed by reduction to RREF over Q.
inline RowEchelon row_reduce(const RationalMatrix& m) {
    auto a = detail::integer_rows(m);
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }

    RationalMatrix red(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) red(i, j) = Rational(a[i][j]);
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pc = pivots[k];
        const Rational inv = 1 / red(k, pc);
        for (std::size_t j = pc; j < cols; ++j) red(k, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (sgn(red(i, pc)) == 0) continue;
            const Rational f = red(i, pc);
            for (std::size_t j = pc; j < cols; ++j) red(i, j) -= f * red(k, j);
        }
    }
    return {std::move(red), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

/// Scales v to a primitive integer vector whose last nonzero entry is positive.
inline RationalVector clear_denominators(RationalVector v) {
    Integer l = 1, g = 0;
    for (const auto& x : v)
        if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    for (auto& x : v) {
        x *= Rational(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (g == 0) return v;
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (sgn(*it) != 0) {
            if (sgn(*it) < 0) g = -g;
            break;
        }
    }
    for (auto& x : v) x /= Rational(g);
    return v;
}

inline std::vector<RationalVector> kernel_from_echelon(const RowEchelon& e) {
    const std::size_t cols = e.reduced.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(clear_denominators(std::move(v)));
    }
    return basis;
}

/// Basis of {v : m v = 0}, one primitive integer vector per free column.
inline std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    return kernel_from_echelon(row_reduce(m));
}

struct SolveResult {
    RationalVector solution;               // free variables set to zero
    std::vector<RationalVector> kernel;    // homogeneous solutions
};

inline SolveResult solve(const RationalMatrix& m, const RationalVector& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    RowEchelon e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) throw Inconsistent();

    SolveResult out;
    out.solution.assign(m.cols(), Rational(0));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out.solution[e.pivots[i]] = e.reduced(i, m.cols());

    RowEchelon hom{RationalMatrix(e.reduced.rows(), m.cols()), e.pivots};
    for (std::size_t r = 0; r < e.reduced.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) hom.reduced(r, c) = e.reduced(r, c);
    out.kernel = kernel_from_echelon(hom);
    return out;
}

inline Rational det2(const RationalMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("det2 needs a 2x2 matrix");
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

inline RationalMatrix inverse2(const RationalMatrix& m) {
    const Rational d = det2(m);
    if (sgn(d) == 0) throw std::domain_error("singular 2x2 matrix");
    return RationalMatrix{{m(1, 1) / d, -m(0, 1) / d}, {-m(1, 0) / d, m(0, 0) / d}};
}

/// Inverse of a square matrix by reducing [M | I].
inline RationalMatrix inverse(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse needs a square matrix");
    RationalMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const RowEchelon e = row_reduce(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    RationalMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

}  // namespace kronquad
