#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "helpers.hpp"

using namespace flagberg;

namespace {

// Symbolic mixed log-derivative d/dz_i d/dw_j log f for a rational function:
// (f f_{ij} - f_i f_j) / f^2. Used as the independent route against jets.
RatFunc log_mixed_rf(const RatFunc& f, int i, int j) {
    RatFunc fz = f.diff_z(i);
    RatFunc fw = f.diff_w(j);
    RatFunc fzw = fz.diff_w(j);
    return (f * fzw - fz * fw) / (f * f);
}

}  // namespace

TEST_CASE("origin metric is diagonal with the expected entries", "[oracle]") {
    struct Expect {
        const char* label;
        std::vector<long> diag;
    };
    const std::vector<Expect> expect{
        {"P1", {2}},
        {"P2", {3, 3}},
        {"F3", {4, 2, 2}},
        {"Gr24", {4, 4, 4, 4}},
        {"LG2", {16, 4, 4}},
        {"Q3", {3, 3, 3}},
        {"Q5", {5, 5, 5, 5, 5}},
    };
    for (std::size_t t = 0; t < fbt::catalog().size(); ++t) {
        PotentialData pd = build_potential_ke(fbt::build(fbt::catalog()[t]));
        int n = pd.chart.n();
        MetricEval ev = metric_at(pd, GaussVec(n), GaussVec(n));
        INFO(expect[t].label);
        REQUIRE(static_cast<std::size_t>(n) == expect[t].diag.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    CHECK(ev.g[i][i] == GaussRat(Rat(expect[t].diag[i])));
                else
                    CHECK(ev.g[i][j].is_zero());
            }
    }
}

TEST_CASE("origin diagonal matches the weight coefficients exactly in family A") {
    for (const auto& entry : fbt::catalog()) {
        if (entry.family != Family::A) continue;
        FlagManifold fm = fbt::build(entry);
        PotentialData pd = build_potential_ke(fm);
        int n = pd.chart.n();
        MetricEval ev = metric_at(pd, GaussVec(n), GaussVec(n));
        auto xs = omega_by_variable(pd.chart, xi_vector(fm, ke_coeffs(fm).coeffs));
        INFO(entry.label);
        for (int i = 0; i < n; ++i) CHECK(ev.g[i][i] == GaussRat(xs[i]));
    }
}

TEST_CASE("outside family A the origin ratio is not a single constant") {
    // Documents the scope of the previous test: the long/short root mix in
    // families B and C gives direction-dependent ratios.
    for (const char* label : {"LG2", "Q3"}) {
        const fbt::CatalogEntry* entry = nullptr;
        for (const auto& e : fbt::catalog())
            if (e.label == label) entry = &e;
        REQUIRE(entry);
        FlagManifold fm = fbt::build(*entry);
        PotentialData pd = build_potential_ke(fm);
        int n = pd.chart.n();
        MetricEval ev = metric_at(pd, GaussVec(n), GaussVec(n));
        auto xs = omega_by_variable(pd.chart, xi_vector(fm, ke_coeffs(fm).coeffs));
        std::set<std::string> ratios;
        for (int i = 0; i < n; ++i) ratios.insert(rat_str(Rat(ev.g[i][i].re / xs[i])));
        INFO(label);
        CHECK(ratios.size() > 1);
    }
}

TEST_CASE("metric is hermitian and positive definite at conjugate-closed points") {
    std::mt19937_64 rng(2718);
    for (const auto& entry : fbt::catalog()) {
        PotentialData pd = build_potential_ke(fbt::build(entry));
        MetricContext ctx = make_metric_context(pd);
        int n = pd.chart.n();
        std::vector<std::pair<GaussVec, GaussVec>> pts;
        for (int t = 0; t < 4; ++t) pts.push_back(fbt::conj_point(rng, n));
        INFO(entry.label);
        CHECK(check_positive_definite(ctx, pts));
        for (const auto& [zs, ws] : pts) {
            auto g = metric_matrix(ctx, zs, ws);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) CHECK(g[i][j] == g[j][i].conj());
        }
    }
}

TEST_CASE("distinguished coefficients solve the curvature equation exactly", "[oracle]") {
    std::mt19937_64 rng(31415);
    for (const auto& entry : fbt::catalog()) {
        PotentialData pd = build_potential_ke(fbt::build(entry));
        MetricContext ctx = make_metric_context(pd);
        int n = pd.chart.n();
        for (int t = 0; t < 3; ++t) {
            auto [zs, ws] = fbt::conj_point(rng, n);
            INFO(entry.label);
            CHECK(matrix_is_zero(einstein_defect(ctx, zs, ws)));
        }
    }
}

TEST_CASE("perturbed coefficients break the curvature equation") {
    std::mt19937_64 rng(999);
    SECTION("projective plane with coefficient 4 instead of 3") {
        PotentialData pd = build_potential(build_flag(Family::A, 3, {1}), {Rat(4)});
        auto [zs, ws] = fbt::conj_point(rng, 2);
        CHECK_FALSE(matrix_is_zero(einstein_defect(pd, zs, ws)));
    }
    SECTION("full flag with mixed coefficients") {
        PotentialData pd = build_potential(build_flag(Family::A, 3, {1, 2}), {Rat(2), Rat(3)});
        auto [zs, ws] = fbt::conj_point(rng, 3);
        CHECK_FALSE(matrix_is_zero(einstein_defect(pd, zs, ws)));
    }
}

TEST_CASE("jet evaluation against fully symbolic rational calculus", "[dualroute]") {
    std::mt19937_64 rng(161803);

    SECTION("projective line") {
        PotentialData pd = build_potential_ke(build_flag(Family::A, 2, {1}));
        MetricContext ctx = make_metric_context(pd);
        RatFunc p(pd.minors[0]);
        RatFunc g = log_mixed_rf(p, 0, 0) * RatFunc(Poly::constant(1, GaussRat(Rat(2))));
        // defect = d/dz d/dw log(det g) + g, all symbolic
        RatFunc defect = log_mixed_rf(g, 0, 0) + g;
        for (int t = 0; t < 6; ++t) {
            auto [zs, ws] = fbt::conj_point(rng, 1);
            auto jm = einstein_defect(ctx, zs, ws);
            CHECK(jm[0][0] == defect.eval(zs, ws));
            auto gm = metric_matrix(ctx, zs, ws);
            CHECK(gm[0][0] == g.eval(zs, ws));
        }
    }

    SECTION("projective plane") {
        PotentialData pd = build_potential_ke(build_flag(Family::A, 3, {1}));
        MetricContext ctx = make_metric_context(pd);
        RatFunc p(pd.minors[0]);
        RatFunc three(Poly::constant(2, GaussRat(Rat(3))));
        RatFunc g[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) g[i][j] = log_mixed_rf(p, i, j) * three;
        RatFunc detg = g[0][0] * g[1][1] - g[0][1] * g[1][0];
        for (int t = 0; t < 4; ++t) {
            auto [zs, ws] = fbt::conj_point(rng, 2);
            auto gm = metric_matrix(ctx, zs, ws);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) CHECK(gm[i][j] == g[i][j].eval(zs, ws));
            auto jm = einstein_defect(ctx, zs, ws);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    RatFunc defect = log_mixed_rf(detg, i, j) + g[i][j];
                    CHECK(jm[i][j] == defect.eval(zs, ws));
                }
        }
    }
}

TEST_CASE("weight function is the constant determinant value", "[oracle]") {
    std::mt19937_64 rng(555);
    for (const auto& entry : fbt::catalog()) {
        PotentialData pd = build_potential_ke(fbt::build(entry));
        MetricContext ctx = make_metric_context(pd);
        int n = pd.chart.n();
        GaussRat expect{Rat(entry.w0), Rat(0)};
        CHECK(weight_W(ctx, GaussVec(n), GaussVec(n)) == expect);
        for (int t = 0; t < 3; ++t) {
            auto [zs, ws] = fbt::conj_point(rng, n);
            INFO(entry.label);
            CHECK(weight_W(ctx, zs, ws) == expect);
        }
    }
}

TEST_CASE("log of the weight is pluriharmonic", "[oracle]") {
    std::mt19937_64 rng(777);
    for (const auto& entry : fbt::catalog()) {
        PotentialData pd = build_potential_ke(fbt::build(entry));
        MetricContext ctx = make_metric_context(pd);
        int n = pd.chart.n();
        auto [zs, ws] = fbt::conj_point(rng, n);
        INFO(entry.label);
        CHECK(matrix_is_zero(log_weight_hessian(ctx, zs, ws)));
    }
}

TEST_CASE("weight coefficients by variable for the reference flags") {
    struct Expect {
        const char* label;
        std::vector<long> x;
    };
    const std::vector<Expect> expect{
        {"P1", {2}},        {"P2", {3, 3}},          {"F3", {4, 2, 2}},
        {"Gr24", {4, 4, 4, 4}}, {"LG2", {4, 4, 4}},  {"Q3", {3, 6, 3}},
        {"Q5", {5, 5, 10, 5, 5}},
    };
    for (std::size_t t = 0; t < fbt::catalog().size(); ++t) {
        FlagManifold fm = fbt::build(fbt::catalog()[t]);
        PotentialData pd = build_potential_ke(fm);
        auto xs = omega_by_variable(pd.chart, xi_vector(fm, ke_coeffs(fm).coeffs));
        INFO(expect[t].label);
        REQUIRE(xs.size() == expect[t].x.size());
        for (std::size_t i = 0; i < xs.size(); ++i) CHECK(xs[i] == expect[t].x[i]);
    }
}

TEST_CASE("vanishing minors give a clear error") {
    PotentialData pd = build_potential_ke(build_flag(Family::A, 2, {1}));
    MetricContext ctx = make_metric_context(pd);
    // z w = -1 kills 1 + z w
    GaussVec zs{GaussRat(Rat(1))}, ws{GaussRat(Rat(-1))};
    CHECK_THROWS_AS(metric_matrix(ctx, zs, ws), std::domain_error);
}
