#pragma once

#include "skein/rational.hpp"

#include <optional>
#include <vector>

namespace skein {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>; // row-major

inline QMatrix transpose(const QMatrix& m) {
    if (m.empty()) return {};
    QMatrix r(m[0].size(), QVector(m.size(), Rational(0)));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
    return r;
}

// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<size_t> rref(QMatrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && skein::is_zero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rational inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || skein::is_zero(m[i][c])) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(QMatrix m) { return rref(m).size(); }

// Solve A x = b where A is given by columns; returns nullopt if inconsistent.
inline std::optional<QVector> solve_columns(const QMatrix& columns, const QVector& b) {
    const size_t n = columns.size();
    const size_t rows = b.size();
    QMatrix aug(rows, QVector(n + 1, Rational(0)));
    for (size_t j = 0; j < n; ++j) {
        if (columns[j].size() != rows) throw std::invalid_argument("column size mismatch");
        for (size_t i = 0; i < rows; ++i) aug[i][j] = columns[j][i];
    }
    for (size_t i = 0; i < rows; ++i) aug[i][n] = b[i];
    auto pivots = rref(aug);
    QVector x(n, Rational(0));
    for (size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == n) return std::nullopt; // pivot in the constant column
        x[pivots[k]] = aug[k][n];
    }
    return x;
}

// Basis of the nullspace of A (rows = equations, cols = unknowns).
inline QMatrix nullspace(QMatrix a) {
    if (a.empty()) return {};
    const size_t cols = a[0].size();
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    QMatrix basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        QVector v(cols, Rational(0));
        v[free_c] = Rational(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            if (pivots[k] < cols) v[pivots[k]] = -a[k][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Dimension of the intersection of two column-span subspaces of Q^rows.
inline size_t intersection_dimension(const QMatrix& span_a, const QMatrix& span_b, size_t rows) {
    // x in span(A) cap span(B)  <=>  exists c,d with A c = B d.
    const size_t na = span_a.size(), nb = span_b.size();
    if (na == 0 || nb == 0) return 0;
    QMatrix sys(rows, QVector(na + nb, Rational(0)));
    for (size_t j = 0; j < na; ++j)
        for (size_t i = 0; i < rows; ++i) sys[i][j] = span_a[j][i];
    for (size_t j = 0; j < nb; ++j)
        for (size_t i = 0; i < rows; ++i) sys[i][na + j] = -span_b[j][i];
    auto null_basis = nullspace(std::move(sys));
    // Map each kernel vector to A c and take the rank of the images.
    QMatrix images;
    for (const auto& v : null_basis) {
        QVector img(rows, Rational(0));
        for (size_t j = 0; j < na; ++j)
            if (!skein::is_zero(v[j]))
                for (size_t i = 0; i < rows; ++i) img[i] += v[j] * span_a[j][i];
        images.push_back(std::move(img));
    }
    return rank(std::move(images));
}

inline Rational det_rational(QMatrix m) {
    const size_t n = m.size();
    Rational d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && skein::is_zero(m[piv][c])) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Rational inv = 1 / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (skein::is_zero(m[i][c])) continue;
            Rational f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

} // namespace skein
