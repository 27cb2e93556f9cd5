#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace flagberg;

namespace {

Poly zw(int n, int i) { return Poly::z(n, i) * Poly::w(n, i); }

}  // namespace

TEST_CASE("chart variables are the negative-half roots in lex order") {
    FlagManifold fm = build_flag(Family::A, 3, {1, 2});
    CoordChart ch = make_chart(fm);
    REQUIRE(ch.n() == 3);
    for (int i = 0; i + 1 < ch.n(); ++i) CHECK(ch.var_order[i] < ch.var_order[i + 1]);
    for (const auto& b : ch.var_order) {
        CHECK(std::find(fm.q.begin(), fm.q.end(), -b) != fm.q.end());
    }
}

TEST_CASE("exponential image is unipotent with controlled support") {
    for (const auto& entry : fbt::catalog()) {
        FlagManifold fm = fbt::build(entry);
        CoordChart ch = make_chart(fm);
        INFO(entry.label);
        CHECK(check_exp_structure(ch));
    }
}

TEST_CASE("projective line potential") {
    PotentialData pd = build_potential_ke(build_flag(Family::A, 2, {1}));
    REQUIRE(pd.minors.size() == 1);
    CHECK(pd.coeffs == std::vector<Rat>{Rat(2)});
    CHECK(pd.minors[0] == Poly::one(1) + zw(1, 0));
}

TEST_CASE("projective plane potential") {
    PotentialData pd = build_potential_ke(build_flag(Family::A, 3, {1}));
    REQUIRE(pd.minors.size() == 1);
    CHECK(pd.coeffs == std::vector<Rat>{Rat(3)});
    CHECK(pd.minors[0] == Poly::one(2) + zw(2, 0) + zw(2, 1));
}

TEST_CASE("full flag of su(3): two six-term minors of degree four") {
    // each 1x1/2x2 leading minor picks up the composite direction z +- z z/2,
    // whose square against its conjugate has total degree four
    PotentialData pd = build_potential_ke(build_flag(Family::A, 3, {1, 2}));
    REQUIRE(pd.minors.size() == 2);
    CHECK(pd.coeffs == std::vector<Rat>{Rat(2), Rat(2)});
    CHECK(pd.minor_indices == std::vector<int>{1, 2});
    CHECK(pd.minors[0].total_degree() == 4);
    CHECK(pd.minors[0].terms().size() == 6);
    CHECK(pd.minors[1].total_degree() == 4);
    CHECK(pd.minors[1].terms().size() == 6);
    for (const auto& p : pd.minors) {
        CHECK(p.self_conjugate());
        CHECK(p.constant_term() == GaussRat(1));
    }
}

TEST_CASE("grassmannian of planes in 4-space: nine-term minor") {
    PotentialData pd = build_potential_ke(build_flag(Family::A, 4, {2}));
    REQUIRE(pd.minors.size() == 1);
    CHECK(pd.coeffs == std::vector<Rat>{Rat(4)});
    CHECK(pd.minors[0].terms().size() == 9);
    CHECK(pd.minors[0].total_degree() == 4);
}

TEST_CASE("symplectic rank-two minor has the doubled long-root direction") {
    PotentialData pd = build_potential_ke(build_flag(Family::C, 2, {1}));
    REQUIRE(pd.minors.size() == 1);
    CHECK(pd.coeffs == std::vector<Rat>{Rat(4)});
    // 1 + 4 z1 w1 + z2 w2 + z3 w3 in the lex variable order
    Poly expect = Poly::one(3) + Poly::constant(3, GaussRat(Rat(4))) * zw(3, 0) + zw(3, 1) + zw(3, 2);
    CHECK(pd.minors[0] == expect);
}

TEST_CASE("odd quadrics") {
    PotentialData q3 = build_potential_ke(build_flag(Family::B, 2, {1}));
    CHECK(q3.coeffs == std::vector<Rat>{Rat(3)});
    CHECK(q3.minors[0].constant_term() == GaussRat(1));

    PotentialData q5 = build_potential_ke(build_flag(Family::B, 3, {1}));
    CHECK(q5.coeffs == std::vector<Rat>{Rat(5)});
    CHECK(q5.chart.n() == 5);
}

TEST_CASE("minors are self-conjugate with unit constant term everywhere") {
    for (const auto& entry : fbt::catalog()) {
        PotentialData pd = build_potential_ke(fbt::build(entry));
        INFO(entry.label);
        for (const auto& p : pd.minors) {
            CHECK(p.self_conjugate());
            CHECK(p.constant_term() == GaussRat(1));
        }
    }
}

TEST_CASE("diastasis normalization: no pure-type monomials", "[oracle]") {
    for (const auto& entry : fbt::catalog()) {
        PotentialData pd = build_potential_ke(fbt::build(entry));
        DiastasisReport rep = check_diastasis(pd);
        INFO(entry.label << ": "
                         << (rep.offending.empty() ? "-" : rep.offending.front()));
        CHECK(rep.ok);
    }
}

TEST_CASE("a hand-broken minor fails the diastasis check with a witness") {
    PotentialData pd = build_potential_ke(build_flag(Family::A, 2, {1}));
    pd.minors[0] = pd.minors[0] + Poly::z(1, 0);  // inject a pure-type term
    DiastasisReport rep = check_diastasis(pd);
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.offending.empty());
    CHECK(rep.offending.front().find("z1") != std::string::npos);
}

TEST_CASE("potential grows along every ray") {
    std::mt19937_64 rng(4242);
    for (const auto& entry : fbt::catalog()) {
        PotentialData pd = build_potential_ke(fbt::build(entry));
        int n = pd.chart.n();
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<GaussRat> dir(n);
            bool nonzero = false;
            while (!nonzero) {
                for (auto& c : dir) c = fbt::rnd_gauss(rng, 2);
                for (const auto& c : dir) nonzero = nonzero || !c.is_zero();
            }
            INFO(entry.label);
            CHECK(check_blowup(pd, dir));
        }
        CHECK_THROWS(check_blowup(pd, std::vector<GaussRat>(n)));  // zero direction
    }
}

TEST_CASE("coefficient count is enforced") {
    FlagManifold fm = build_flag(Family::A, 3, {1, 2});
    CHECK_THROWS_AS(build_potential(fm, {Rat(2)}), std::invalid_argument);
    CHECK_NOTHROW(build_potential(fm, {Rat(2), Rat(5)}));
}

TEST_CASE("gram polynomial is hermitian under the conjugate swap") {
    for (const auto& entry : fbt::catalog()) {
        PotentialData pd = build_potential_ke(fbt::build(entry));
        const PolyMatrix& a = pd.gram;
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j) CHECK(a.at(i, j).conj_swap() == a.at(j, i));
    }
}
