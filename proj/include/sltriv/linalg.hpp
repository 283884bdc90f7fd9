#pragma once

#include "sltriv/scalar.hpp"

#include <utility>
#include <vector>

namespace sltriv {

using Matrix = std::vector<std::vector<Scalar>>;

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<size_t> rref(Matrix& a) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Scalar inv = Scalar(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) {
            if (!a[r][j].is_zero()) a[r][j] *= inv;
        }
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (size_t j = c; j < cols; ++j) {
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(Matrix a) { return rref(a).size(); }

/// Basis of {x : a x = 0}.
inline std::vector<std::vector<Scalar>> nullspace(Matrix a, size_t cols) {
    std::vector<std::vector<Scalar>> basis;
    if (a.empty()) {
        for (size_t j = 0; j < cols; ++j) {
            std::vector<Scalar> v(cols);
            v[j] = Scalar(1);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    auto piv = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : piv) is_pivot[c] = true;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols);
        v[free] = Scalar(1);
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sltriv
