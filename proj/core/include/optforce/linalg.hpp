#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <utility>

namespace optforce::linalg {

template <class T, std::size_t N>
using Matrix = std::array<std::array<T, N>, N>;

template <class T, std::size_t N>
using Vector = std::array<T, N>;

/// Solves A x = b by Gaussian elimination with partial pivoting. Returns
/// nullopt when a pivot is exactly zero.
template <class T, std::size_t N>
std::optional<Vector<T, N>> solve(Matrix<T, N> a, Vector<T, N> b) {
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < N; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (std::abs(a[pivot][col]) == 0.0) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < N; ++r) {
            const T factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < N; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    Vector<T, N> x{};
    for (std::size_t i = N; i-- > 0;) {
        T acc = b[i];
        for (std::size_t c = i + 1; c < N; ++c) acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x;
}

template <class T, std::size_t N>
double norm1(const Matrix<T, N>& a) {
    double best = 0.0;
    for (std::size_t c = 0; c < N; ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < N; ++r) col += std::abs(a[r][c]);
        best = std::max(best, col);
    }
    return best;
}

template <class T, std::size_t N>
double norm_inf(const Vector<T, N>& v) {
    double best = 0.0;
    for (const auto& x : v) best = std::max(best, std::abs(x));
    return best;
}

template <class T, std::size_t N>
Vector<T, N> multiply(const Matrix<T, N>& a, const Vector<T, N>& x) {
    Vector<T, N> y{};
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) y[r] += a[r][c] * x[c];
    }
    return y;
}

/// 1-norm condition number computed from the explicit inverse (fine for the
/// tiny systems used here). Infinite when A is exactly singular.
template <class T, std::size_t N>
double condition1(const Matrix<T, N>& a) {
    Matrix<T, N> inv{};
    for (std::size_t c = 0; c < N; ++c) {
        Vector<T, N> e{};
        e[c] = T(1);
        auto col = solve(a, e);
        if (!col) return INFINITY;
        for (std::size_t r = 0; r < N; ++r) inv[r][c] = (*col)[r];
    }
    return norm1(a) * norm1(inv);
}

}  // namespace optforce::linalg
