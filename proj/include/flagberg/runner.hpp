#pragma once

// Job execution: builds each configured flag manifold, runs the requested
// checks in dependency order (roots -> q -> diastasis -> einstein -> dims ->
// kernel; the numeric cross-check is independent), and records results.
// A failed check skips its dependents; exceptions become failed checks with
// the message as witness, never crashes. All randomness is drawn from a
// per-job generator seeded from the config, so reports are reproducible.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "flagberg/bergman.hpp"
#include "flagberg/config.hpp"
#include "flagberg/flagstruct.hpp"
#include "flagberg/kahlergeom.hpp"
#include "flagberg/kempf_numeric.hpp"
#include "flagberg/potential.hpp"
#include "flagberg/report.hpp"
#include "flagberg/rootsystems.hpp"

namespace flagberg {
namespace detail {

inline Rat random_rat(std::mt19937_64& rng, int num_abs, int den_lo, int den_hi) {
    std::uniform_int_distribution<int> num(-num_abs, num_abs);
    std::uniform_int_distribution<int> den(den_lo, den_hi);
    return make_rat(num(rng), den(rng));
}

inline std::pair<GaussVec, GaussVec> random_conjugate_point(std::mt19937_64& rng, int n) {
    GaussVec zs(n), ws(n);
    for (int i = 0; i < n; ++i) {
        Rat re = random_rat(rng, 3, 2, 5);
        Rat im = random_rat(rng, 3, 2, 5);
        zs[i] = GaussRat(re, im);
        ws[i] = zs[i].conj();
    }
    return {zs, ws};
}

inline std::string point_str(const GaussVec& zs) {
    std::string s = "(";
    for (std::size_t i = 0; i < zs.size(); ++i) s += (i ? ", " : "") + zs[i].str();
    return s + ")";
}

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

struct JobState {
    FlagManifold fm;
    std::vector<Rat> coeffs;
    bool have_potential = false;
    PotentialData pd;
    bool have_ctx = false;
    MetricContext ctx;
    bool have_dims = false;
    DimPoly dp;

    const PotentialData& potential() {
        if (!have_potential) {
            pd = build_potential(fm, coeffs);
            have_potential = true;
        }
        return pd;
    }
    const MetricContext& metric() {
        if (!have_ctx) {
            ctx = make_metric_context(potential());
            have_ctx = true;
        }
        return ctx;
    }
    const DimPoly& dims() {
        if (!have_dims) {
            dp = dim_poly(fm, coeffs);
            have_dims = true;
        }
        return dp;
    }
};

inline void check_roots(JobState& st, CheckResult& out) {
    const RootDatum& rd = st.fm.rd;
    RelationReport rel = check_root_relations(rd);
    out.constants["root_count"] = static_cast<long>(rd.roots.size());
    out.constants["positive_count"] = static_cast<long>(rd.positive_roots().size());
    out.constants["matrix_dim"] = rd.alg.matrix_dim;
    if (!rel.ok()) {
        out.status = "fail";
        out.witness = rel.violations.front();
        return;
    }
    out.status = "pass";
}

inline void check_q(JobState& st, CheckResult& out) {
    QReport qr = validate_Q(st.fm, st.fm.q);
    KEData ke = ke_coeffs(st.fm);
    auto cke = nlohmann::ordered_json::array();
    for (const auto& c : ke.coeffs) cke.push_back(rat_str(c));
    out.constants["c_KE"] = cke;
    out.constants["n"] = st.fm.n();
    out.constants["m_root_count"] = static_cast<long>(st.fm.r_m.size());
    if (st.fm.r_m.size() <= 12)
        out.constants["q_choice_count"] = static_cast<long>(enumerate_Q(st.fm).size());
    if (!qr.ok()) {
        out.status = "fail";
        out.witness = qr.violations.front();
        return;
    }
    out.status = "pass";
}

inline void check_diastasis(JobState& st, std::mt19937_64& rng, CheckResult& out) {
    const PotentialData& pd = st.potential();
    auto idx = nlohmann::ordered_json::array();
    for (int k : pd.minor_indices) idx.push_back(k);
    out.constants["minor_indices"] = idx;
    auto degs = nlohmann::ordered_json::array();
    for (const auto& p : pd.minors) degs.push_back(static_cast<long>(p.total_degree()));
    out.constants["minor_degrees"] = degs;

    if (!check_exp_structure(pd.chart)) {
        out.status = "fail";
        out.witness = "exponential image lost its unit-diagonal triangular shape";
        return;
    }
    DiastasisReport dr = check_diastasis(pd);
    if (!dr.ok) {
        out.status = "fail";
        out.witness = dr.offending.front();
        return;
    }
    int n = pd.chart.n();
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<GaussRat> dir(n);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& c : dir) c = GaussRat(random_rat(rng, 3, 1, 4), random_rat(rng, 3, 1, 4));
            for (const auto& c : dir) nonzero = nonzero || !c.is_zero();
        }
        if (!check_blowup(pd, dir)) {
            std::string s;
            for (int i = 0; i < n; ++i) s += (i ? ", " : "") + dir[i].str();
            out.status = "fail";
            out.witness = "potential stays bounded along ray (" + s + ")";
            return;
        }
    }
    out.status = "pass";
}

inline void check_einstein(JobState& st, std::mt19937_64& rng, const JobConfig& cfg,
                           CheckResult& out) {
    const MetricContext& ctx = st.metric();
    int n = st.fm.n();
    out.constants["W0"] = rat_str(weight_W_real(ctx, GaussVec(n), GaussVec(n)));
    for (long s = 0; s < cfg.samples; ++s) {
        auto [zs, ws] = random_conjugate_point(rng, n);
        auto defect = einstein_defect(ctx, zs, ws);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!defect[i][j].is_zero()) {
                    out.status = "fail";
                    out.witness = "curvature defect (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ") = " + defect[i][j].str() +
                                  " at z = " + point_str(zs);
                    return;
                }
    }
    out.constants["points_checked"] = cfg.samples;
    out.status = "pass";
}

inline void check_dims(JobState& st, CheckResult& out) {
    const DimPoly& dp = st.dims();
    auto dk = nlohmann::ordered_json::array();
    for (const auto& c : dp.d) dk.push_back(rat_str(c));
    out.constants["d"] = dk;
    out.constants["v_rr"] = rat_str(dp.v_rr);
    out.constants["volume"] = rat_str(dp.v_rr) + " * pi^" + std::to_string(dp.n);
    auto h0 = nlohmann::ordered_json::array();
    for (long m = 0; m <= 3; ++m) h0.push_back(dp.h0(m).get_str());
    out.constants["h0_first"] = h0;
    out.status = "pass";
}

inline void check_kernel(JobState& st, std::mt19937_64& rng, const JobConfig& cfg,
                         bool einstein_already_verified, CheckResult& out) {
    const MetricContext& ctx = st.metric();
    const DimPoly& dp = st.dims();
    int n = st.fm.n();

    if (!einstein_already_verified) {
        auto [zs, ws] = random_conjugate_point(rng, n);
        if (!matrix_is_zero(einstein_defect(ctx, zs, ws))) {
            out.status = "fail";
            out.witness =
                "coefficients are not the distinguished (Einstein) ones; the closed kernel "
                "form does not apply";
            return;
        }
    }

    out.constants["W0"] = rat_str(weight_W_real(ctx, GaussVec(n), GaussVec(n)));
    out.constants["boundary_coef"] = boundary_coefficient(ctx, dp, GaussVec(n), GaussVec(n)).str();
    out.constants["v_rr"] = rat_str(dp.v_rr);

    std::uniform_int_distribution<int> rnum(1, 64);
    for (long s = 0; s < cfg.samples; ++s) {
        auto [zs, ws] = random_conjugate_point(rng, n);
        Rat x = make_rat(rnum(rng), 128);  // interior fibre radius^2, in (0, 1/2]
        Rat scale(1);
        for (std::size_t j = 0; j < ctx.p.size(); ++j) {
            Rat pj = minor_value(ctx, j, zs, ws);
            long cj = require_integer(ctx.pd.coeffs[j], "potential coefficient");
            scale *= rat_pow(pj, cj);
        }
        HartogsPoint pt{zs, ws, Rat(x / scale)};
        PiRat closed = kernel_closed_form(ctx, dp, pt);
        SeriesResult ser = kernel_series(ctx, dp, pt, cfg.trunc);
        Rat diff = Rat(abs(closed.coef - ser.value.coef));
        if (diff > ser.tail_bound.coef) {
            out.status = "fail";
            out.witness = "closed form outside the truncation bound at x = " + rat_str(ser.x) +
                          ", z = " + point_str(zs);
            return;
        }
        if (diff * Rat(100000000) > Rat(abs(closed.coef))) {
            out.status = "fail";
            out.witness = "closed form differs from partial sum by more than 1e-8 relative at "
                          "x = " + rat_str(ser.x);
            return;
        }
        if (closed.coef <= 0) {
            out.status = "fail";
            out.witness = "kernel not positive at x = " + rat_str(ser.x);
            return;
        }
    }
    // Positivity of the polynomial factor across the closed fibre, including
    // the boundary rho = 0 and the centre rho = 1.
    Rat w0 = weight_W_real(ctx, GaussVec(n), GaussVec(n));
    for (int k = 0; k <= 8; ++k) {
        Rat rho = make_rat(k, 8);
        Rat a = kernel_a_coef(dp, w0, rho);
        if (a <= 0) {
            out.status = "fail";
            out.witness = "polynomial kernel factor not positive at rho = " + rat_str(rho);
            return;
        }
    }
    out.constants["points_checked"] = cfg.samples;
    out.status = "pass";
}

inline void check_kempf_numeric(JobState& st, const JobConfig& cfg, CheckResult& out) {
    const FlagManifold& fm = st.fm;
    bool projective = fm.rd.alg.family == Family::A && fm.black.size() == 1 && fm.black[0] == 1;
    int d = fm.rd.rank();
    if (!projective || d > 2) {
        out.status = "skipped";
        out.witness = "numeric cross-check implemented for the d <= 2 projective cases only";
        return;
    }
    double tol = d == 1 ? 1e-6 : 1e-5;
    int m_max = d == 1 ? 3 : 1;
    long pts = std::min<long>(cfg.samples, 8);
    for (int m = 1; m <= m_max; ++m) {
        KempfNumericResult res = kempf_numeric_projective(d, m, pts, 24);
        std::string key = "m" + std::to_string(m);
        out.constants[key + "_rel_error"] = fmt_double(res.kempf_rel_error);
        out.constants[key + "_const_deviation"] = fmt_double(res.max_rel_deviation);
        out.constants[key + "_gram_oracle_dev"] = fmt_double(res.gram_oracle_dev);
        if (res.kempf_rel_error > tol || res.max_rel_deviation > tol ||
            res.gram_oracle_dev > 1e-9) {
            out.status = "fail";
            out.witness = "numeric section average deviates at degree " + std::to_string(m) +
                          " (rel error " + fmt_double(res.kempf_rel_error) + ")";
            return;
        }
    }
    out.status = "pass";
}

}  // namespace detail

inline JobReport run_job(const JobConfig& cfg, int id) {
    JobReport rep;
    rep.id = id;
    rep.group = cfg.group;
    rep.black = cfg.black;
    if (cfg.xi_ke) {
        rep.xi = "KE";
    } else {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : cfg.xi) arr.push_back(rat_str(c));
        rep.xi = arr;
    }

    auto requested = [&](const std::string& name) {
        for (const auto& c : cfg.checks)
            if (c == name) return true;
        return false;
    };

    detail::JobState st;
    std::string setup_error;
    try {
        st.fm = build_flag(cfg.family, cfg.d, cfg.black);
        st.coeffs = cfg.xi_ke ? ke_coeffs(st.fm).coeffs : cfg.xi;
    } catch (const std::exception& e) {
        setup_error = e.what();
    }

    std::mt19937_64 rng(cfg.seed);
    bool chain_ok = true;
    bool einstein_verified = false;
    bool first = true;
    for (const auto& name : known_checks()) {
        if (!requested(name)) continue;
        CheckResult cr;
        cr.name = name;
        auto t0 = std::chrono::steady_clock::now();
        if (!setup_error.empty()) {
            cr.status = first ? "fail" : "skipped";
            cr.witness = first ? "setup: " + setup_error : "prerequisite failed";
        } else if (!chain_ok && name != "kempf-numeric") {
            cr.status = "skipped";
            cr.witness = "prerequisite failed";
        } else {
            try {
                if (name == "roots") detail::check_roots(st, cr);
                else if (name == "q") detail::check_q(st, cr);
                else if (name == "diastasis") detail::check_diastasis(st, rng, cr);
                else if (name == "einstein") detail::check_einstein(st, rng, cfg, cr);
                else if (name == "dims") detail::check_dims(st, cr);
                else if (name == "kernel")
                    detail::check_kernel(st, rng, cfg, einstein_verified, cr);
                else if (name == "kempf-numeric") detail::check_kempf_numeric(st, cfg, cr);
            } catch (const std::exception& e) {
                cr.status = "fail";
                cr.witness = e.what();
            }
            if (name == "einstein" && cr.passed()) einstein_verified = true;
            if (cr.failed() && name != "kempf-numeric") chain_ok = false;
        }
        auto t1 = std::chrono::steady_clock::now();
        cr.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        rep.checks.push_back(cr);
        first = false;
    }
    return rep;
}

// FLAGBERG_THREADS caps how many jobs run concurrently; result order always
// follows the config order, so the report bytes do not depend on scheduling.
inline unsigned thread_budget(std::size_t n_jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("FLAGBERG_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) hw = static_cast<unsigned>(v);
    }
    if (n_jobs == 0) return 1;
    return static_cast<unsigned>(std::min<std::size_t>(hw, n_jobs));
}

inline Report run(const RunConfig& cfg) {
    Report rep;
    rep.jobs.resize(cfg.jobs.size());
    unsigned nthreads = thread_budget(cfg.jobs.size());
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < cfg.jobs.size(); ++i)
            rep.jobs[i] = run_job(cfg.jobs[i], static_cast<int>(i));
        return rep;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= cfg.jobs.size()) break;
            rep.jobs[i] = run_job(cfg.jobs[i], static_cast<int>(i));
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return rep;
}

}  // namespace flagberg
