#pragma once

// Pointwise-exact differential geometry of the potential sum c_j log P_j at
// conjugate-closed rational points: the metric Hessian, positive
// definiteness, the Einstein defect (the mixed Hessian of log det g + Phi,
// identically zero exactly when the coefficients are the distinguished ones),
// and the volume weight W = det g * prod P_j^{c_j}.
//
// Every quantity is an exact Gaussian-rational number. Second derivatives of
// the minors are symbolic polynomials; the third and fourth derivatives
// entering the Einstein defect come from evaluating those polynomials over
// the truncated ring with one infinitesimal per direction (jets), which is
// the same differentiation carried out without expanding quotients.

#include <stdexcept>
#include <string>
#include <vector>

#include "flagberg/jets.hpp"
#include "flagberg/poly.hpp"
#include "flagberg/potential.hpp"
#include "flagberg/rational.hpp"

namespace flagberg {

inline GaussRat gauss_pow(const GaussRat& g, long e) {
    if (e >= 0) return g.pow(static_cast<unsigned long>(e));
    return (GaussRat(1) / g).pow(static_cast<unsigned long>(-e));
}

inline Jet2 jet_pow(const Jet2& j, long e) {
    if (e >= 0) return j.pow(static_cast<unsigned>(e));
    return j.inv().pow(static_cast<unsigned>(-e));
}

inline long require_integer(const Rat& c, const char* what) {
    if (c.get_den() != 1) throw std::domain_error(std::string(what) + ": exponent " + rat_str(c) +
                                                  " is not an integer");
    return c.get_num().get_si();
}

using GaussVec = std::vector<GaussRat>;

// Cached symbolic derivatives of the minors: P, dP/dz_k, dP/dw_l, d2P/dz_k dw_l.
struct MetricContext {
    PotentialData pd;
    int n = 0;
    std::vector<Poly> p;
    std::vector<std::vector<Poly>> dz;   // [minor][k]
    std::vector<std::vector<Poly>> dw;   // [minor][l]
    std::vector<std::vector<Poly>> dzw;  // [minor][k*n + l]
};

inline MetricContext make_metric_context(const PotentialData& pd) {
    MetricContext ctx;
    ctx.pd = pd;
    ctx.n = pd.chart.n();
    for (const auto& mp : pd.minors) {
        ctx.p.push_back(mp);
        std::vector<Poly> dzs, dws, dzws;
        for (int k = 0; k < ctx.n; ++k) dzs.push_back(mp.diff_z(k));
        for (int l = 0; l < ctx.n; ++l) dws.push_back(mp.diff_w(l));
        for (int k = 0; k < ctx.n; ++k)
            for (int l = 0; l < ctx.n; ++l) dzws.push_back(dzs[k].diff_w(l));
        ctx.dz.push_back(std::move(dzs));
        ctx.dw.push_back(std::move(dws));
        ctx.dzw.push_back(std::move(dzws));
    }
    return ctx;
}

// g_{kl} = sum_j c_j (P_j d2P_j - dP_j dbarP_j) / P_j^2 at the point.
inline std::vector<GaussVec> metric_matrix(const MetricContext& ctx, const GaussVec& zs,
                                           const GaussVec& ws) {
    const int n = ctx.n;
    std::vector<GaussVec> g(n, GaussVec(n, GaussRat(0)));
    for (std::size_t m = 0; m < ctx.p.size(); ++m) {
        GaussRat pv = ctx.p[m].eval(zs, ws);
        if (pv.is_zero()) throw std::domain_error("metric_matrix: minor vanishes at the point");
        GaussRat cj(ctx.pd.coeffs[m]);
        GaussRat ip2 = GaussRat(1) / (pv * pv);
        GaussVec dzv(n), dwv(n);
        for (int k = 0; k < n; ++k) dzv[k] = ctx.dz[m][k].eval(zs, ws);
        for (int l = 0; l < n; ++l) dwv[l] = ctx.dw[m][l].eval(zs, ws);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                GaussRat d2 = ctx.dzw[m][static_cast<std::size_t>(k) * n + l].eval(zs, ws);
                g[k][l] += cj * (pv * d2 - dzv[k] * dwv[l]) * ip2;
            }
    }
    return g;
}

namespace detail {

// The full metric matrix as jets in the direction pair (iz, jw): scalar part
// g_{kl}, plus its z_iz, w_jw, and mixed derivatives.
inline std::vector<Jet2> metric_jets(const MetricContext& ctx, const GaussVec& zs,
                                     const GaussVec& ws, int iz, int jw) {
    const int n = ctx.n;
    std::vector<Jet2> g(static_cast<std::size_t>(n) * n, Jet2{});
    for (std::size_t m = 0; m < ctx.p.size(); ++m) {
        Jet2 pv = eval_jet2(ctx.p[m], zs, ws, iz, jw);
        Jet2 ip2 = (pv * pv).inv();
        GaussRat cj(ctx.pd.coeffs[m]);
        Jet2 cjj{cj, GaussRat(0), GaussRat(0), GaussRat(0)};
        std::vector<Jet2> dzv(n), dwv(n);
        for (int k = 0; k < n; ++k) dzv[k] = eval_jet2(ctx.dz[m][k], zs, ws, iz, jw);
        for (int l = 0; l < n; ++l) dwv[l] = eval_jet2(ctx.dw[m][l], zs, ws, iz, jw);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                Jet2 d2 = eval_jet2(ctx.dzw[m][static_cast<std::size_t>(k) * n + l], zs, ws, iz, jw);
                g[static_cast<std::size_t>(k) * n + l] += cjj * (pv * d2 - dzv[k] * dwv[l]) * ip2;
            }
    }
    return g;
}

}  // namespace detail

struct MetricEval {
    GaussVec zs, ws;                        // the conjugate-closed point
    std::vector<GaussVec> g;                // metric Hessian
    GaussRat detg;
    std::vector<GaussVec> logdet_hessian;   // d/dz_i d/dw_j log det g
    int n = 0;
};

inline MetricEval metric_at(const MetricContext& ctx, const GaussVec& zs, const GaussVec& ws) {
    MetricEval me;
    me.zs = zs;
    me.ws = ws;
    me.n = ctx.n;
    me.g = metric_matrix(ctx, zs, ws);
    GaussMatrix gm(ctx.n, GaussVec(ctx.n));
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j) gm[i][j] = me.g[i][j];
    me.detg = det_gauss(gm);
    me.logdet_hessian.assign(ctx.n, GaussVec(ctx.n, GaussRat(0)));
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j) {
            auto jets = detail::metric_jets(ctx, zs, ws, i, j);
            Jet2 d = det_jet(jets, ctx.n);
            me.logdet_hessian[i][j] = d.log_mixed();
        }
    return me;
}

inline MetricEval metric_at(const PotentialData& pd, const GaussVec& zs, const GaussVec& ws) {
    return metric_at(make_metric_context(pd), zs, ws);
}

// Leading principal minors of g all real and strictly positive at each point.
inline bool check_positive_definite(const MetricContext& ctx,
                                    const std::vector<std::pair<GaussVec, GaussVec>>& points) {
    for (const auto& [zs, ws] : points) {
        auto g = metric_matrix(ctx, zs, ws);
        for (int k = 1; k <= ctx.n; ++k) {
            GaussMatrix sub(k, GaussVec(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = g[i][j];
            GaussRat d = det_gauss(sub);
            if (!d.is_real() || !(d.re > 0)) return false;
        }
    }
    return true;
}

inline bool check_positive_definite(const PotentialData& pd,
                                    const std::vector<std::pair<GaussVec, GaussVec>>& points) {
    return check_positive_definite(make_metric_context(pd), points);
}

// The mixed Hessian of log det g + Phi; the metric is Einstein with constant
// 2 exactly when this vanishes identically.
inline std::vector<GaussVec> einstein_defect(const MetricContext& ctx, const GaussVec& zs,
                                             const GaussVec& ws) {
    MetricEval me = metric_at(ctx, zs, ws);
    std::vector<GaussVec> defect(ctx.n, GaussVec(ctx.n, GaussRat(0)));
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j)
            defect[i][j] = me.logdet_hessian[i][j] + me.g[i][j];
    return defect;
}

inline std::vector<GaussVec> einstein_defect(const PotentialData& pd, const GaussVec& zs,
                                             const GaussVec& ws) {
    return einstein_defect(make_metric_context(pd), zs, ws);
}

inline bool matrix_is_zero(const std::vector<GaussVec>& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

// W = det g * prod_j P_j^{c_j}; requires integer exponents.
inline GaussRat weight_W(const MetricContext& ctx, const GaussVec& zs, const GaussVec& ws) {
    auto g = metric_matrix(ctx, zs, ws);
    GaussMatrix gm(ctx.n, GaussVec(ctx.n));
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j) gm[i][j] = g[i][j];
    GaussRat w = det_gauss(gm);
    for (std::size_t m = 0; m < ctx.p.size(); ++m) {
        long e = require_integer(ctx.pd.coeffs[m], "weight_W");
        w = w * gauss_pow(ctx.p[m].eval(zs, ws), e);
    }
    return w;
}

inline GaussRat weight_W(const PotentialData& pd, const GaussVec& zs, const GaussVec& ws) {
    return weight_W(make_metric_context(pd), zs, ws);
}

// Mixed Hessian of log W computed directly through W as a jet: an
// independent route to the Einstein identity (log W pluriharmonic).
inline std::vector<GaussVec> log_weight_hessian(const MetricContext& ctx, const GaussVec& zs,
                                                const GaussVec& ws) {
    std::vector<GaussVec> h(ctx.n, GaussVec(ctx.n, GaussRat(0)));
    std::vector<long> exps;
    for (const auto& c : ctx.pd.coeffs) exps.push_back(require_integer(c, "log_weight_hessian"));
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j) {
            auto jets = detail::metric_jets(ctx, zs, ws, i, j);
            Jet2 w = det_jet(jets, ctx.n);
            for (std::size_t m = 0; m < ctx.p.size(); ++m)
                w = w * jet_pow(eval_jet2(ctx.p[m], zs, ws, i, j), exps[m]);
            h[i][j] = w.log_mixed();
        }
    return h;
}

// Per-variable form coefficients x_i = 2 <xi, alpha_i> / <alpha_i, alpha_i>,
// where alpha_i is the Q-root attached to variable z_{i+1}.
inline std::vector<Rat> omega_by_variable(const CoordChart& chart, const std::vector<Rat>& xi) {
    std::vector<Rat> xs;
    for (const auto& beta : chart.var_order) {
        RootVec alpha = -beta;
        xs.push_back(2 * weight_inner(xi, to_rat_vec(alpha)) / alpha.norm2());
    }
    return xs;
}

}  // namespace flagberg
