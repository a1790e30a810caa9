#pragma once

#include <optional>
#include <utility>

#include "projkit/scalar.hpp"

namespace projkit {

// Fraction-free (Bareiss) elimination. Every division is exact, so this is
// safe over Z-like rationals and over F_p alike. Returns the rank and, for
// square input, the determinant.
template <class K>
struct BareissResult {
    Eigen::Index rank = 0;
    K determinant = K(0);
};

template <class K>
BareissResult<K> bareiss(ScalarMatrix<K> a) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    BareissResult<K> out;
    K prev(1);
    int sign = 1;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = r;
        while (piv < rows && a(piv, c) == K(0)) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            a.row(piv).swap(a.row(r));
            sign = -sign;
        }
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j) a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
            a(i, c) = K(0);
        }
        prev = a(r, c);
        ++r;
    }
    out.rank = r;
    if (rows == cols) out.determinant = (r == rows) ? (sign > 0 ? prev : -prev) : K(0);
    return out;
}

template <class K>
Eigen::Index exact_rank(const ScalarMatrix<K>& a) {
    if (a.size() == 0) return 0;
    return bareiss<K>(a).rank;
}

template <class K>
K exact_determinant(const ScalarMatrix<K>& a) {
    if (a.rows() == 0) return K(1);
    return bareiss<K>(a).determinant;
}

// Gauss-Jordan solve of a square system; nullopt when singular.
template <class K>
std::optional<ScalarVector<K>> exact_solve(ScalarMatrix<K> a, ScalarVector<K> b) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index piv = c;
        while (piv < n && a(piv, c) == K(0)) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c) {
            a.row(piv).swap(a.row(c));
            std::swap(b(piv), b(c));
        }
        K inv = K(1) / a(c, c);
        for (Eigen::Index j = c; j < n; ++j) a(c, j) *= inv;
        b(c) *= inv;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == c || a(i, c) == K(0)) continue;
            K f = a(i, c);
            for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            b(i) -= f * b(c);
        }
    }
    return b;
}

}  // namespace projkit
