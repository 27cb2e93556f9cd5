#pragma once

// Section-space dimensions, their binomial-basis coefficients, the Kempf
// distortion constants, and the Bergman kernel of the unit disc bundle: the
// Fourier-mode series, its resummed closed form (rational multiple of 1/pi),
// a rigorous tail majorant for the truncated series, and the boundary
// coefficient whose positivity certifies the vanishing log-term.
//
// Closed form: with x = |lambda|^2/h(z), rho = 1 - x, n = dim M, and
// h^0(L^m) = sum_k d_k C(m+k,k),
//
//   K = a * rho^{-n-2},
//   a = (W/(pi V)) * sum_k d_k [ (k+1) rho^{n-k} - k rho^{n-k+1} ],
//
// obtained from sum_m (m+1) C(m+k,k) x^m = (k+1) x (1-x)^{-k-2} + (1-x)^{-k-1}.
// At rho = 0 only the k = n term survives: a -> (W/(pi V)) d_n (n+1).

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagberg/flagstruct.hpp"
#include "flagberg/kahlergeom.hpp"
#include "flagberg/linalg.hpp"
#include "flagberg/rational.hpp"

namespace flagberg {

// A real number of the form coef / pi, kept exact.
struct PiRat {
    Rat coef;

    std::string str() const { return rat_str(coef) + "/pi"; }
    friend bool operator==(const PiRat& a, const PiRat& b) { return a.coef == b.coef; }
};

// Dimension of the irreducible representation with highest weight m * xi via
// the product formula over positive roots; exact, and an oracle independent
// of any polynomial model. xi is given by its coefficients on the painted
// fundamental weights.
inline Int weyl_dim(const FlagManifold& fm, const std::vector<Rat>& xi_coeffs, long m) {
    if (m < 0) throw std::invalid_argument("weyl_dim: m must be >= 0");
    for (const auto& c : xi_coeffs) {
        long v = require_integer(c, "weyl_dim");
        if (v <= 0) throw std::invalid_argument("weyl_dim: coefficients must be positive");
    }
    auto xi = xi_vector(fm, xi_coeffs);
    const int dim = fm.rd.alg.d;
    std::vector<Rat> rho_hat(dim, Rat(0));
    auto pos = fm.rd.positive_roots();
    for (const auto& a : pos)
        for (int i = 0; i < dim; ++i) rho_hat[i] += Rat(a.e[i]) / 2;

    Rat prod = 1;
    for (const auto& a : pos) {
        auto av = to_rat_vec(a);
        Rat den = weight_inner(rho_hat, av);
        if (den == 0) throw std::logic_error("weyl_dim: degenerate pairing with positive root");
        Rat num = Rat(m) * weight_inner(xi, av) + den;
        prod *= num / den;
    }
    if (prod.get_den() != 1 || prod <= 0)
        throw std::logic_error("weyl_dim: formula did not produce a positive integer");
    return prod.get_num();
}

struct DimPoly {
    int n = 0;                // polynomial degree = complex dimension of the flag
    std::vector<Int> values;  // h^0(L^m) for m = 0..n+2
    std::vector<Rat> poly;    // monomial coefficients: poly[k] multiplies m^k
    std::vector<Rat> d;       // binomial-basis coefficients d_0..d_n
    Rat v_rr;                 // leading coefficient d_n / n!

    // Exact dimension for any m through the binomial combination.
    Int h0(long m) const {
        Rat s = 0;
        for (int k = 0; k <= n; ++k) s += d[static_cast<std::size_t>(k)] * Rat(binomial(m + k, k));
        if (s.get_den() != 1) throw std::logic_error("DimPoly::h0: non-integer value");
        return s.get_num();
    }
    Rat poly_eval(long m) const {
        Rat s = 0, p = 1;
        for (const auto& c : poly) {
            s += c * p;
            p *= m;
        }
        return s;
    }
};

// Fits h^0 = sum_k d_k C(m+k,k) of degree n = len(values)-3 through the
// first n+1 values and verifies the two held-out values exactly.
inline DimPoly binomial_coeffs(const std::vector<Int>& values) {
    if (values.size() < 3) throw std::invalid_argument("binomial_coeffs: need at least 3 values");
    DimPoly dp;
    dp.n = static_cast<int>(values.size()) - 3;
    dp.values = values;
    const int n = dp.n;

    RatMatrix m(n + 1, std::vector<Rat>(n + 1));
    std::vector<Rat> rhs(n + 1);
    for (int row = 0; row <= n; ++row) {
        for (int k = 0; k <= n; ++k) m[row][k] = Rat(binomial(row + k, k));
        rhs[row] = Rat(values[static_cast<std::size_t>(row)]);
    }
    dp.d = solve_square(m, rhs);

    for (long held = n + 1; held <= n + 2; ++held) {
        Rat s = 0;
        for (int k = 0; k <= n; ++k) s += dp.d[static_cast<std::size_t>(k)] * Rat(binomial(held + k, k));
        if (s != Rat(values[static_cast<std::size_t>(held)]))
            throw std::domain_error("binomial_coeffs: held-out residual nonzero at m = " +
                                    std::to_string(held) + " (degree mismatch)");
    }
    if (!(dp.d[static_cast<std::size_t>(n)] > 0))
        throw std::domain_error("binomial_coeffs: leading coefficient d_n is not positive");

    // Monomial expansion of sum_k d_k * prod_{i=1..k} (m+i) / k!.
    dp.poly.assign(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int k = 0; k <= n; ++k) {
        std::vector<Rat> f{Rat(1)};  // product over i of (m + i), coefficients in m
        for (int i = 1; i <= k; ++i) {
            std::vector<Rat> g(f.size() + 1, Rat(0));
            for (std::size_t t = 0; t < f.size(); ++t) {
                g[t] += f[t] * i;
                g[t + 1] += f[t];
            }
            f = std::move(g);
        }
        Rat scale = dp.d[static_cast<std::size_t>(k)] / Rat(factorial(k));
        for (std::size_t t = 0; t < f.size(); ++t) dp.poly[t] += scale * f[t];
    }
    dp.v_rr = dp.d[static_cast<std::size_t>(n)] / Rat(factorial(n));
    return dp;
}

// Dimension data of the flag for the line bundle attached to xi.
inline DimPoly dim_poly(const FlagManifold& fm, const std::vector<Rat>& xi_coeffs) {
    std::vector<Int> values;
    for (long m = 0; m <= fm.n() + 2; ++m) values.push_back(weyl_dim(fm, xi_coeffs, m));
    return binomial_coeffs(values);
}

// Kempf distortion constant T_m = h^0(L^m) / v_rr; T_m / m^n -> 1.
inline Rat kempf_constant(const DimPoly& dp, long m) { return Rat(dp.h0(m)) / dp.v_rr; }

struct HartogsPoint {
    GaussVec zs, ws;  // conjugate-closed base point
    Rat lam2;         // |lambda|^2 >= 0
};

// Real positive value of one minor at a conjugate-closed point.
inline Rat minor_value(const MetricContext& ctx, std::size_t j, const GaussVec& zs,
                       const GaussVec& ws) {
    GaussRat v = ctx.p[j].eval(zs, ws);
    if (!v.is_real() || !(v.re > 0))
        throw std::domain_error("minor_value: minor not real positive (point not conjugate-closed?)");
    return v.re;
}

// x = |lambda|^2 / h(z) with h = prod P_j^{-c_j}; the disc bundle is x < 1.
inline Rat hartogs_x(const MetricContext& ctx, const HartogsPoint& pt) {
    if (pt.lam2 < 0) throw std::invalid_argument("hartogs_x: |lambda|^2 < 0");
    Rat x = pt.lam2;
    for (std::size_t j = 0; j < ctx.p.size(); ++j) {
        long e = require_integer(ctx.pd.coeffs[j], "hartogs_x");
        x *= rat_pow(minor_value(ctx, j, pt.zs, pt.ws), e);
    }
    return x;
}

inline Rat rho_at(const MetricContext& ctx, const HartogsPoint& pt) {
    return 1 - hartogs_x(ctx, pt);
}

// Real positive W at a conjugate-closed point.
inline Rat weight_W_real(const MetricContext& ctx, const GaussVec& zs, const GaussVec& ws) {
    GaussRat w = weight_W(ctx, zs, ws);
    if (!w.is_real() || !(w.re > 0))
        throw std::domain_error("weight_W_real: W not real positive at the point");
    return w.re;
}

// a(rho) * pi = (W/V) * sum_k d_k [ (k+1) rho^{n-k} - k rho^{n-k+1} ],
// valid on the closed range 0 <= rho <= 1.
inline Rat kernel_a_coef(const DimPoly& dp, const Rat& w_real, const Rat& rho) {
    Rat s = 0;
    for (int k = 0; k <= dp.n; ++k) {
        Rat t = Rat(k + 1) * rat_pow(rho, dp.n - k) - Rat(k) * rat_pow(rho, dp.n - k + 1);
        s += dp.d[static_cast<std::size_t>(k)] * t;
    }
    return w_real / dp.v_rr * s;
}

// K(z, lambda) = a * rho^{-n-2} at an interior point, exact up to 1/pi.
inline PiRat kernel_closed_form(const MetricContext& ctx, const DimPoly& dp,
                                const HartogsPoint& pt) {
    Rat rho = rho_at(ctx, pt);
    if (!(rho > 0)) throw std::domain_error("kernel_closed_form: point not interior (rho <= 0)");
    Rat w = weight_W_real(ctx, pt.zs, pt.ws);
    return PiRat{kernel_a_coef(dp, w, rho) * rat_pow(rho, -(dp.n + 2))};
}

struct SeriesResult {
    PiRat value;       // sum of modes m = 0..M
    PiRat tail_bound;  // rigorous majorant of the dropped remainder
    Rat x;             // |lambda|^2 / h(z)
    long terms = 0;
};

// Truncated Fourier-mode series sum_m (m+1) (W/V) h^0(L^m) x^m / pi together
// with a geometric majorant of the remainder:
//   h^0(m) <= S * C(m+n, n)  with  S = sum_k |d_k|,
//   (m+1) C(m+n, n) <= (n+1) C(m+n+1, n+1),
//   ratio of consecutive majorant terms <= q x, q = (M+n+3)/(M+2).
inline SeriesResult kernel_series(const MetricContext& ctx, const DimPoly& dp,
                                  const HartogsPoint& pt, long trunc_m) {
    if (trunc_m < 0) throw std::invalid_argument("kernel_series: negative truncation");
    SeriesResult res;
    res.x = hartogs_x(ctx, pt);
    if (!(res.x < 1)) throw std::domain_error("kernel_series: point not interior (x >= 1)");
    Rat w = weight_W_real(ctx, pt.zs, pt.ws);
    Rat wv = w / dp.v_rr;

    Rat sum = 0, xp = 1;
    for (long m = 0; m <= trunc_m; ++m) {
        sum += Rat(m + 1) * Rat(dp.h0(m)) * xp;
        xp *= res.x;
    }
    res.value = PiRat{wv * sum};
    res.terms = trunc_m + 1;

    Rat s_abs = 0;
    for (const auto& dk : dp.d) s_abs += abs(dk);
    Rat q = make_rat(Int(trunc_m + dp.n + 3), Int(trunc_m + 2));
    if (!(q * res.x < 1))
        throw std::domain_error("kernel_series: truncation too small for a finite tail bound");
    // xp is x^{M+1} after the loop above.
    Rat first = Rat(dp.n + 1) * Rat(binomial(trunc_m + dp.n + 2, dp.n + 1)) * xp;
    res.tail_bound = PiRat{wv * s_abs * first / (1 - q * res.x)};
    return res;
}

// lim_{rho -> 0} a = W(z) d_n (n+1) / (pi V); positive exactly when d_n > 0.
inline PiRat boundary_coefficient(const MetricContext& ctx, const DimPoly& dp, const GaussVec& zs,
                                  const GaussVec& ws) {
    Rat w = weight_W_real(ctx, zs, ws);
    return PiRat{w / dp.v_rr * dp.d[static_cast<std::size_t>(dp.n)] * Rat(dp.n + 1)};
}

// Exact verification of the two summation identities behind the closed form:
//   (i)  m C(m+k, k) = (k+1) C(m+k, k+1),
//   (ii) sum_m C(m+k, k) x^m = (1-x)^{-k-1}, checked through partial sums
//        bracketed by 0 < closed - partial <= geometric tail bound.
inline bool check_binomial_identities(long k_max, long m_max, const std::vector<Rat>& x_samples) {
    if (k_max > 1000 || m_max > 1000)
        throw std::invalid_argument("check_binomial_identities: range too large");
    for (long k = 0; k <= k_max; ++k)
        for (long m = 0; m <= m_max; ++m)
            if (Int(m) * binomial(m + k, k) != Int(k + 1) * binomial(m + k, k + 1)) return false;

    for (const auto& x : x_samples) {
        if (!(x > 0 && x < 1))
            throw std::invalid_argument("check_binomial_identities: x outside (0,1)");
        for (long k = 0; k <= k_max; ++k) {
            Rat closed = rat_pow(1 - x, -(k + 1));
            Rat partial = 0, xp = 1;
            for (long m = 0; m <= m_max; ++m) {
                partial += Rat(binomial(m + k, k)) * xp;
                xp *= x;
            }
            Rat q = make_rat(Int(m_max + k + 2), Int(m_max + 2));
            if (!(q * x < 1))
                throw std::domain_error("check_binomial_identities: m_max too small for bound");
            Rat bound = Rat(binomial(m_max + 1 + k, k)) * xp / (1 - q * x);
            Rat diff = closed - partial;
            if (!(diff > 0 && diff <= bound)) return false;
        }
    }
    return true;
}

}  // namespace flagberg
