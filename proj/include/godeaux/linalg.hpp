#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace godeaux {

template <class Field>
struct Matrix {
    using Elem = typename Field::Elem;
    Field F;
    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(Field f, std::size_t r, std::size_t c) : F(f), rows(r), cols(c), a(r * c, f.zero()) {}

    Elem& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Elem& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    void append_row(const std::vector<Elem>& row) {
        if (row.size() != cols) throw std::invalid_argument("row length mismatch");
        a.insert(a.end(), row.begin(), row.end());
        ++rows;
    }
    std::vector<Elem> row(std::size_t i) const {
        return std::vector<Elem>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
    }
    Matrix without_column(std::size_t j) const {
        Matrix m(F, rows, cols - 1);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0, t = 0; k < cols; ++k)
                if (k != j) m(i, t++) = (*this)(i, k);
        return m;
    }
};

// Reduced row echelon form in place; returns the pivot columns.
// Pivots are taken as the first nonzero entry scanning rows top-down.
template <class Field>
std::vector<std::size_t> rref(Matrix<Field>& m) {
    const Field& F = m.F;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = m.rows;
        for (std::size_t i = r; i < m.rows; ++i)
            if (!F.is_zero(m(i, c))) { piv = i; break; }
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < m.cols; ++k) std::swap(m(piv, k), m(r, k));
        auto inv = F.inv(m(r, c));
        for (std::size_t k = c; k < m.cols; ++k) m(r, k) = m(r, k) * inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || F.is_zero(m(i, c))) continue;
            auto f = m(i, c);
            for (std::size_t k = c; k < m.cols; ++k)
                if (!F.is_zero(m(r, k))) m(i, k) = m(i, k) - f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class Field>
std::size_t rank(Matrix<Field> m) {
    return rref(m).size();
}

// Basis of the right kernel, one vector per free column.
template <class Field>
std::vector<std::vector<typename Field::Elem>> kernel_basis(Matrix<Field> m) {
    const Field& F = m.F;
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<typename Field::Elem>> out;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<typename Field::Elem> v(m.cols, F.zero());
        v[f] = F.one();
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

// Fraction-free Gaussian elimination (Bareiss).  Every intermediate entry is
// a minor of the input, so the exact divisions stay small.
template <class Field>
typename Field::Elem det_bareiss(Matrix<Field> m) {
    const Field& F = m.F;
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows;
    if (n == 0) return F.one();
    auto prev = F.one();
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (F.is_zero(m(k, k))) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!F.is_zero(m(i, k))) { piv = i; break; }
            if (piv == n) return F.zero();
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
            neg = !neg;
        }
        auto inv_prev = F.inv(prev);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) * inv_prev;
            m(i, k) = F.zero();
        }
        prev = m(k, k);
    }
    auto d = m(n - 1, n - 1);
    return neg ? -d : d;
}

template <class Field>
std::vector<typename Field::Elem> mat_vec(const Matrix<Field>& m, const std::vector<typename Field::Elem>& v) {
    std::vector<typename Field::Elem> out(m.rows, m.F.zero());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!m.F.is_zero(m(i, j)) && !m.F.is_zero(v[j])) out[i] = out[i] + m(i, j) * v[j];
    return out;
}

}  // namespace godeaux
