#pragma once

// Second-order mixed jets: elements a + az*eps + aw*del + azw*eps*del of
// Q(i)[eps,del]/(eps^2, del^2). Evaluating a rational expression of (z,w)
// with z_i = p_i + eps, w_j = q_j + del yields the exact mixed derivative
// d^2/dz_i dw_j in the azw component. This gives pointwise-exact fourth-order
// information about log det g without expanding det g symbolically.

#include <stdexcept>
#include <vector>

#include "flagberg/poly.hpp"
#include "flagberg/rational.hpp"

namespace flagberg {

struct Jet2 {
    GaussRat a, az, aw, azw;

    Jet2() = default;
    explicit Jet2(GaussRat v) : a(std::move(v)) {}
    Jet2(GaussRat v, GaussRat dz, GaussRat dw, GaussRat dzw)
        : a(std::move(v)), az(std::move(dz)), aw(std::move(dw)), azw(std::move(dzw)) {}

    Jet2 operator-() const { return {-a, -az, -aw, -azw}; }

    Jet2& operator+=(const Jet2& o) {
        a += o.a;
        az += o.az;
        aw += o.aw;
        azw += o.azw;
        return *this;
    }
    Jet2& operator-=(const Jet2& o) {
        a -= o.a;
        az -= o.az;
        aw -= o.aw;
        azw -= o.azw;
        return *this;
    }
    friend Jet2 operator+(Jet2 x, const Jet2& y) { return x += y; }
    friend Jet2 operator-(Jet2 x, const Jet2& y) { return x -= y; }

    friend Jet2 operator*(const Jet2& x, const Jet2& y) {
        return {x.a * y.a, x.a * y.az + x.az * y.a, x.a * y.aw + x.aw * y.a,
                x.a * y.azw + x.azw * y.a + x.az * y.aw + x.aw * y.az};
    }
    Jet2& operator*=(const Jet2& o) { return *this = *this * o; }

    // (a + b e + c f + d ef)^(-1) = 1/a - b/a^2 e - c/a^2 f + (2bc - ad)/a^3 ef.
    Jet2 inv() const {
        if (a.is_zero()) throw std::domain_error("Jet2::inv: scalar part is zero");
        GaussRat ia = GaussRat(1) / a;
        GaussRat ia2 = ia * ia;
        return {ia, -az * ia2, -aw * ia2, (GaussRat(2) * az * aw * ia - azw) * ia2};
    }

    friend Jet2 operator/(const Jet2& x, const Jet2& y) { return x * y.inv(); }

    Jet2 pow(unsigned e) const {
        Jet2 acc(GaussRat(1)), b = *this;
        for (unsigned k = e; k > 0; k >>= 1) {
            if (k & 1) acc *= b;
            if (k > 1) b *= b;
        }
        return acc;
    }

    // Mixed second derivative of log of this jet:
    // d^2/dz dw log u = (u * u_zw - u_z * u_w) / u^2.
    GaussRat log_mixed() const {
        if (a.is_zero()) throw std::domain_error("Jet2::log_mixed: log of zero");
        return (a * azw - az * aw) / (a * a);
    }
};

// Evaluates p at z = zs + eps * e_iz, w = ws + del * e_jw.
inline Jet2 eval_jet2(const Poly& p, const std::vector<GaussRat>& zs,
                      const std::vector<GaussRat>& ws, int iz, int jw) {
    const int n = p.nvars();
    if (iz < 0 || iz >= n || jw < 0 || jw >= n)
        throw std::invalid_argument("eval_jet2: direction index out of range");
    Jet2 acc;
    for (const auto& [m, c] : p.terms()) {
        GaussRat rest = c;
        for (int i = 0; i < n; ++i) {
            if (i != iz && m[i]) rest *= zs[i].pow(m[i]);
            if (i != jw && m[n + i]) rest *= ws[i].pow(m[n + i]);
        }
        const unsigned e = m[iz], f = m[n + jw];
        // (p + eps)^e = p^e + e p^(e-1) eps, likewise for (q + del)^f.
        GaussRat pe = e ? zs[iz].pow(e) : GaussRat(1);
        GaussRat pe1 = e ? GaussRat(Rat(static_cast<long>(e))) * zs[iz].pow(e - 1) : GaussRat(0);
        GaussRat qf = f ? ws[jw].pow(f) : GaussRat(1);
        GaussRat qf1 = f ? GaussRat(Rat(static_cast<long>(f))) * ws[jw].pow(f - 1) : GaussRat(0);
        acc.a += rest * pe * qf;
        acc.az += rest * pe1 * qf;
        acc.aw += rest * pe * qf1;
        acc.azw += rest * pe1 * qf1;
    }
    return acc;
}

namespace detail {
inline Jet2 det_jet_cofactor(const std::vector<Jet2>& m, int n, std::vector<int>& cols, int row) {
    if (static_cast<int>(cols.size()) == 1) return m[row * n + cols[0]];
    Jet2 acc;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Jet2& piv = m[row * n + cols[k]];
        if (piv.a.is_zero() && piv.az.is_zero() && piv.aw.is_zero() && piv.azw.is_zero()) continue;
        int c = cols[k];
        cols.erase(cols.begin() + static_cast<long>(k));
        Jet2 sub = det_jet_cofactor(m, n, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(k), c);
        Jet2 term = piv * sub;
        if (k % 2) acc -= term;
        else acc += term;
    }
    return acc;
}
}  // namespace detail

// Determinant of a square Jet2 matrix (row-major). Gaussian elimination with
// pivoting on units (nonzero scalar part); falls back to cofactor expansion
// when no unit pivot is available in a column.
inline Jet2 det_jet(std::vector<Jet2> m, int n) {
    Jet2 det(GaussRat(1));
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!m[r * n + c].a.is_zero()) {
                p = r;
                break;
            }
        if (p < 0) {
            // No unit pivot: finish with cofactor expansion on the remaining block.
            std::vector<Jet2> rest;
            int k = n - c;
            rest.reserve(static_cast<std::size_t>(k) * k);
            for (int r = c; r < n; ++r)
                for (int j = c; j < n; ++j) rest.push_back(m[r * n + j]);
            std::vector<int> cols;
            for (int j = 0; j < k; ++j) cols.push_back(j);
            return det * detail::det_jet_cofactor(rest, k, cols, 0);
        }
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m[p * n + j], m[c * n + j]);
            det = -det;
        }
        det *= m[c * n + c];
        Jet2 ipiv = m[c * n + c].inv();
        for (int r = c + 1; r < n; ++r) {
            if (m[r * n + c].a.is_zero() && m[r * n + c].az.is_zero() &&
                m[r * n + c].aw.is_zero() && m[r * n + c].azw.is_zero())
                continue;
            Jet2 f = m[r * n + c] * ipiv;
            for (int j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
        }
    }
    return det;
}

}  // namespace flagberg
