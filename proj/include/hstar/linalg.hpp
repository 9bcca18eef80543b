#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hstar/rational.hpp"
#include "hstar/univariate.hpp"

namespace hstar {

/// Dense rational matrix; all elimination is exact.
class QMatrix {
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;

  public:
    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    QMatrix operator*(const QMatrix& o) const {
        QMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& v = at(i, k);
                if (is_zero(v)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    Rat trace() const {
        Rat t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }
};

inline std::size_t rank(QMatrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m.at(i, col))) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

inline Rat det(QMatrix m) {
    if (m.rows() != m.cols()) return Rat(0);
    Rat d(1);
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(m.at(piv, col))) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rat inv = Rat(1) / m.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (is_zero(m.at(i, col))) continue;
            Rat f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

/// Solves A x = b for square nonsingular A; nullopt if singular.
inline std::optional<std::vector<Rat>> solve(QMatrix a, std::vector<Rat> b) {
    std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(a.at(piv, col))) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            std::swap(b[piv], b[col]);
        }
        Rat inv = Rat(1) / a.at(col, col);
        for (std::size_t j = col; j < n; ++j) a.at(col, j) *= inv;
        b[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || is_zero(a.at(i, col))) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
            b[i] -= f * b[col];
        }
    }
    return b;
}

/// Solves the least structured problem we need: given columns v_0..v_{k-1}
/// (each of length n) and target w, find coefficients with sum c_j v_j = w.
inline std::optional<std::vector<Rat>> solve_columns(const std::vector<std::vector<Rat>>& cols,
                                                     const std::vector<Rat>& w) {
    if (cols.empty()) return std::nullopt;
    std::size_t n = w.size(), k = cols.size();
    // Gaussian elimination on the augmented (n x (k+1)) system.
    QMatrix m(n, k + 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    for (std::size_t i = 0; i < n; ++i) m.at(i, k) = w[i];
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t col = 0; col < k && r < n; ++col) {
        std::size_t piv = r;
        while (piv < n && is_zero(m.at(piv, col))) ++piv;
        if (piv == n) continue;
        if (piv != r)
            for (std::size_t j = col; j <= k; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, col);
        for (std::size_t j = col; j <= k; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || is_zero(m.at(i, col))) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j <= k; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col_of_row.push_back(col);
        ++r;
    }
    // Inconsistency check.
    for (std::size_t i = r; i < n; ++i)
        if (!is_zero(m.at(i, k))) return std::nullopt;
    std::vector<Rat> x(k, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col_of_row[i]] = m.at(i, k);
    return x;
}

/// Characteristic polynomial det(t*I - M) by evaluation at n+1 rational
/// points and Lagrange interpolation; each determinant is one exact
/// elimination, which keeps coefficient growth in check.
inline UPoly char_poly(const QMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return UPoly::constant(Rat(1));
    std::vector<Rat> xs, ys;
    for (std::size_t k = 0; k <= n; ++k) {
        // evaluation points 0, 1, -1, 2, -2, ...
        long x = (k % 2 == 0) ? static_cast<long>(k / 2) : -static_cast<long>((k + 1) / 2);
        QMatrix a = m;
        for (std::size_t i = 0; i < n; ++i) a.at(i, i) = Rat(x) - a.at(i, i);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) a.at(i, j) = -a.at(i, j);
        xs.emplace_back(x);
        ys.push_back(det(std::move(a)));
    }
    // Newton-form interpolation.
    std::vector<Rat> divided = ys;
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t i = n; i >= level; --i) {
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level]);
            if (i == level) break;
        }
    UPoly acc = UPoly::constant(divided[n]);
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * UPoly({-xs[i], Rat(1)}) + UPoly::constant(divided[i]);
    }
    return acc;
}

}  // namespace hstar
