#pragma once

// Small dense exact linear algebra over Q and Q(i): Gaussian elimination
// with exact pivoting. Sizes here are bounded by the rank of the groups
// involved, so no fraction-free tricks are needed.

#include <stdexcept>
#include <vector>

#include "flagberg/rational.hpp"

namespace flagberg {

using RatMatrix = std::vector<std::vector<Rat>>;
using GaussMatrix = std::vector<std::vector<GaussRat>>;

// Solves A x = b for square A; throws std::domain_error when singular.
inline std::vector<Rat> solve_square(RatMatrix a, std::vector<Rat> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_square: size mismatch");
    for (auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve_square: not square");

    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("solve_square: singular system");
        if (p != c) {
            std::swap(a[p], a[c]);
            std::swap(b[p], b[c]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

inline Rat det_rational(RatMatrix a) {
    const std::size_t n = a.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

inline GaussRat det_gauss(GaussMatrix a) {
    const std::size_t n = a.size();
    GaussRat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return GaussRat(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            GaussRat f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

}  // namespace flagberg
