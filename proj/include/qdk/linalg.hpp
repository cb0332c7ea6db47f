#ifndef QDK_LINALG_HPP
#define QDK_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qdk {

/// Dense matrix over an exact field type (Scalar or RatFunc).
template <class T>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const T& fill) : rows(r), cols(c), data(r * c, fill) {}

    T& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// In-place reduced row echelon form with deterministic pivoting (first
/// nonzero entry in row-major order). Returns the pivot column of each
/// pivot row. Exact over the field.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        T inv = m.at(row, col).inv();
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            T c = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = m.at(i, j) - c * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
    return row_reduce(m).size();
}

/// Solves A x = b; returns nullopt when inconsistent. When the solution is
/// underdetermined, free variables are set to zero (deterministically).
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b, const T& zero) {
    if (b.size() != a.rows) throw std::invalid_argument("size mismatch");
    Matrix<T> aug(a.rows, a.cols + 1, zero);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;  // 0 = 1 row
    std::vector<T> x(a.cols, zero);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols);
    return x;
}

/// Basis of the right nullspace of A.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m, const T& zero, const T& one) {
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<T> v(m.cols, zero);
        v[free_col] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = zero - m.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
bool is_invertible(const Matrix<T>& m) {
    if (m.rows != m.cols) return false;
    return rank(m) == m.rows;
}

}  // namespace qdk

#endif  // QDK_LINALG_HPP
