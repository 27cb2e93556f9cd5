#pragma once

// Numerical cross-check of regular quantization on projective spaces: build
// the monomial Gram matrix of H^0(O(N)), N = m(d+1), under the L^2 inner
// product of the Einstein metric by quadrature, orthonormalize, and test
// that the distortion function T_m(z) = sum_j |f_j(z)|^2 (1+|z|^2)^{-N} is
// constant and equals the exact h^0/v_rr constant after the pi^d volume
// factor.
//
// Quadrature is exact by construction: the angular integrals are pure
// frequencies (uniform trapezoid sums vanish identically below the aliasing
// threshold) and the radial integrals become Beta-type polynomial integrals
// under s = t/(1-t), which Gauss-Legendre integrates exactly at sufficient
// order. d = 2 separates through s1 = uv, s2 = u(1-v).

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "flagberg/bergman.hpp"

namespace flagberg {

namespace quad {

struct Rule {
    std::vector<double> x, w;  // nodes and weights on [0, 1]
};

// Gauss-Legendre nodes by Newton iteration on the Legendre recurrence,
// mapped from [-1, 1] to [0, 1].
inline Rule gauss_legendre_01(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_01: need n >= 1");
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));  // Chebyshev initial guess
        double p0 = 0, p1 = 0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        // Recompute derivative at the converged node for the weight.
        p0 = 1.0;
        p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        r.x[static_cast<std::size_t>(i)] = 0.5 * (1.0 - t);  // descending t -> ascending x
        r.w[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - t * t) * dp * dp);
    }
    return r;
}

// integral_0^1 t^a (1-t)^b dt by the rule (exact for polynomials of degree
// <= 2n-1 when a, b are integers in range).
inline double beta_integral(const Rule& r, double a, double b) {
    double s = 0;
    for (std::size_t i = 0; i < r.x.size(); ++i)
        s += r.w[i] * std::pow(r.x[i], a) * std::pow(1.0 - r.x[i], b);
    return s;
}

// Average of e^{i delta theta} over the uniform K-point grid: exactly 1 when
// delta = 0 (mod K), and a vanishing sum of roots of unity otherwise.
inline std::complex<double> angular_average(long delta, int k_nodes) {
    std::complex<double> s = 0;
    for (int k = 0; k < k_nodes; ++k) {
        double th = 2.0 * M_PI * k / k_nodes;
        s += std::complex<double>(std::cos(th * delta), std::sin(th * delta));
    }
    return s / static_cast<double>(k_nodes);
}

}  // namespace quad

struct KempfNumericResult {
    int d = 0;
    long m = 0;
    long n_sections = 0;
    double t_mean = 0;             // mean of T over the sample points
    double max_rel_deviation = 0;  // constancy of T across points
    double kempf_rel_error = 0;    // |T_mean * pi^d - T_m| / T_m
    double gram_offdiag_max = 0;   // max normalized off-diagonal Gram entry
    double gram_oracle_dev = 0;    // G_JJ * multinomial(N; J) deviation from constant
};

namespace detail {

inline std::vector<std::vector<long>> monomials_of_degree_at_most(int d, long n_total) {
    std::vector<std::vector<long>> out;
    if (d == 1) {
        for (long j = 0; j <= n_total; ++j) out.push_back({j});
    } else {
        for (long j1 = 0; j1 <= n_total; ++j1)
            for (long j2 = 0; j1 + j2 <= n_total; ++j2) out.push_back({j1, j2});
    }
    return out;
}

inline double multinomial_double(long n, const std::vector<long>& j) {
    long rest = n;
    double v = 1.0;
    Int acc = 1;
    for (long ji : j) {
        acc *= binomial(rest, ji);
        rest -= ji;
    }
    v = mpz_class(acc).get_d();
    return v;
}

}  // namespace detail

// See the header comment; d in {1, 2}, sections of O(m(d+1)) on CP^d.
inline KempfNumericResult kempf_numeric_projective(int d, long m, int sample_points,
                                                   int quad_order) {
    if (d != 1 && d != 2) throw std::invalid_argument("kempf_numeric_projective: d must be 1 or 2");
    if (m < 1 || m > 3) throw std::invalid_argument("kempf_numeric_projective: m must be 1..3");
    const long n_deg = m * (d + 1);  // sections of O(N), N = n_deg
    if (quad_order < n_deg + 2)
        throw std::invalid_argument("kempf_numeric_projective: quadrature order too low");
    const int angular_nodes = std::max(quad_order, static_cast<int>(2 * n_deg + 3));
    quad::Rule rule = quad::gauss_legendre_01(quad_order);

    auto monos = detail::monomials_of_degree_at_most(d, n_deg);
    const std::size_t nb = monos.size();
    using Cx = std::complex<double>;

    // Gram matrix of the monomial basis under
    //   <s, t> = (d+1)^d int s conj(t) (1+|z|^2)^{-N-d-1} dmu.
    std::vector<std::vector<Cx>> gram(nb, std::vector<Cx>(nb, Cx(0)));
    for (std::size_t a = 0; a < nb; ++a)
        for (std::size_t b = 0; b < nb; ++b) {
            const auto& j = monos[a];
            const auto& k = monos[b];
            Cx ang = 1;
            for (int i = 0; i < d; ++i)
                ang *= quad::angular_average(j[static_cast<std::size_t>(i)] -
                                                 k[static_cast<std::size_t>(i)],
                                             angular_nodes);
            double radial;
            if (d == 1) {
                double p = 0.5 * (j[0] + k[0]);
                radial = quad::beta_integral(rule, p, n_deg - p);
            } else {
                double p1 = 0.5 * (j[0] + k[0]), p2 = 0.5 * (j[1] + k[1]);
                radial = quad::beta_integral(rule, p1, p2) *
                         quad::beta_integral(rule, p1 + p2 + 1.0, n_deg - p1 - p2);
            }
            // dmu = (1/2)^d * prod ds_i dtheta_i and each angular average
            // carries the 2 pi it divided out.
            double measure = std::pow(M_PI, d) * std::pow(d + 1.0, d);
            gram[a][b] = measure * ang * radial;
        }

    KempfNumericResult res;
    res.d = d;
    res.m = m;
    res.n_sections = static_cast<long>(nb);

    // Off-diagonal Gram entries normalized by the diagonal: expected ~0.
    for (std::size_t a = 0; a < nb; ++a)
        for (std::size_t b = 0; b < nb; ++b)
            if (a != b) {
                double norm = std::abs(gram[a][b]) /
                              std::sqrt(gram[a][a].real() * gram[b][b].real());
                res.gram_offdiag_max = std::max(res.gram_offdiag_max, norm);
            }

    // Diagonal against the multinomial oracle: G_JJ * C(N; J) constant.
    {
        double lo = 0, hi = 0;
        for (std::size_t a = 0; a < nb; ++a) {
            double v = gram[a][a].real() * detail::multinomial_double(n_deg, monos[a]);
            if (a == 0) lo = hi = v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        res.gram_oracle_dev = (hi - lo) / hi;
    }

    // Modified Gram-Schmidt in coefficient space: rows of coef express the
    // orthonormal sections in the monomial basis.
    std::vector<std::vector<Cx>> coef(nb, std::vector<Cx>(nb, Cx(0)));
    auto gdot = [&](const std::vector<Cx>& x, const std::vector<Cx>& y) {
        Cx s = 0;
        for (std::size_t p = 0; p < nb; ++p)
            for (std::size_t q = 0; q < nb; ++q) s += x[p] * std::conj(y[q]) * gram[p][q];
        return s;
    };
    for (std::size_t i = 0; i < nb; ++i) {
        std::vector<Cx> v(nb, Cx(0));
        v[i] = 1;
        for (std::size_t l = 0; l < i; ++l) {
            Cx proj = gdot(v, coef[l]);
            for (std::size_t p = 0; p < nb; ++p) v[p] -= proj * coef[l][p];
        }
        double nrm = std::sqrt(gdot(v, v).real());
        if (!(nrm > 0)) throw std::runtime_error("kempf_numeric_projective: degenerate Gram");
        for (std::size_t p = 0; p < nb; ++p) coef[i][p] = v[p] / nrm;
    }

    // Deterministic sample points and the distortion values.
    std::vector<std::vector<Cx>> pts;
    for (int s = 0; s < sample_points; ++s) {
        std::vector<Cx> z;
        for (int i = 0; i < d; ++i)
            z.push_back(Cx(-1.1 + 0.23 * s + 0.11 * i, 0.4 - 0.17 * s + 0.05 * i));
        pts.push_back(z);
    }
    double tmin = 0, tmax = 0, tsum = 0;
    for (std::size_t s = 0; s < pts.size(); ++s) {
        double zz = 1;
        for (int i = 0; i < d; ++i) zz += std::norm(pts[s][static_cast<std::size_t>(i)]);
        double t = 0;
        for (std::size_t i = 0; i < nb; ++i) {
            Cx f = 0;
            for (std::size_t p = 0; p < nb; ++p) {
                Cx monoval = 1;
                for (int c = 0; c < d; ++c)
                    monoval *= std::pow(pts[s][static_cast<std::size_t>(c)],
                                        static_cast<double>(monos[p][static_cast<std::size_t>(c)]));
                f += coef[i][p] * monoval;
            }
            t += std::norm(f);
        }
        t *= std::pow(zz, -static_cast<double>(n_deg));
        if (s == 0) tmin = tmax = t;
        tmin = std::min(tmin, t);
        tmax = std::max(tmax, t);
        tsum += t;
    }
    res.t_mean = tsum / static_cast<double>(pts.size());
    res.max_rel_deviation = (tmax - tmin) / res.t_mean;

    // Exact constant for comparison: T_m = h^0(L^m)/v_rr on CP^d with the
    // Einstein exponent d+1.
    auto dp = dim_poly(build_flag(Family::A, d + 1, {1}), {Rat(d + 1)});
    double t_exact = Rat(kempf_constant(dp, m)).get_d();
    res.kempf_rel_error = std::abs(res.t_mean * std::pow(M_PI, d) - t_exact) / t_exact;
    return res;
}

}  // namespace flagberg
