#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace flagberg;

static const std::vector<Family> kFamilies{Family::A, Family::B, Family::C, Family::D};

TEST_CASE("root counts match the closed forms for d = 2..5") {
    for (Family f : kFamilies)
        for (int d = 2; d <= 5; ++d) {
            RootDatum rd = build_root_system(f, d);
            long expect = root_count_closed_form(f, d);
            INFO(family_letter(f) << " d=" << d);
            CHECK(static_cast<long>(rd.roots.size()) == expect);
            CHECK(rd.positive_roots().size() == rd.roots.size() / 2);
        }
}

TEST_CASE("expected counts by family") {
    CHECK(root_count_closed_form(Family::A, 3) == 6);    // 3*2
    CHECK(root_count_closed_form(Family::B, 3) == 18);   // 2*9
    CHECK(root_count_closed_form(Family::C, 3) == 18);
    CHECK(root_count_closed_form(Family::D, 4) == 24);   // 2*4*3
}

TEST_CASE("canonical simple roots") {
    RootDatum a3 = build_root_system(Family::A, 3);
    CHECK(a3.simple.size() == 2);
    CHECK(a3.simple[0].e == std::vector<int>{1, -1, 0});
    CHECK(a3.simple[1].e == std::vector<int>{0, 1, -1});

    RootDatum b2 = build_root_system(Family::B, 2);
    CHECK(b2.simple[0].e == std::vector<int>{1, -1});
    CHECK(b2.simple[1].e == std::vector<int>{0, 1});

    RootDatum c2 = build_root_system(Family::C, 2);
    CHECK(c2.simple[1].e == std::vector<int>{0, 2});

    RootDatum d3 = build_root_system(Family::D, 3);
    CHECK(d3.simple[2].e == std::vector<int>{0, 1, 1});
}

TEST_CASE("every positive root is a nonnegative integer combination of simples") {
    for (Family f : kFamilies)
        for (int d = 2; d <= 4; ++d) {
            RootDatum rd = build_root_system(f, d);
            for (const auto& r : rd.positive_roots()) {
                auto c = rd.simple_coords(r);
                for (const auto& x : c) {
                    CHECK(x >= 0);
                    CHECK(x.get_den() == 1);
                }
            }
        }
}

TEST_CASE("commutation relations, membership, and pairing hold across families") {
    for (Family f : kFamilies)
        for (int d = 2; d <= 4; ++d) {
            RootDatum rd = build_root_system(f, d);
            RelationReport rep = check_root_relations(rd);
            INFO(family_letter(f) << " d=" << d << " first violation: "
                                  << (rep.violations.empty() ? "-" : rep.violations.front()));
            CHECK(rep.ok());
            CHECK(rep.brackets_checked > 0);
            for (long long t : rep.pairing_traces) CHECK(t != 0);
        }
}

TEST_CASE("opposite-root pairing has both signs outside family A") {
    // This is why nondegeneracy (not positivity) is the right invariant for
    // the trace pairing in the chosen matrix realizations.
    RootDatum b3 = build_root_system(Family::B, 3);
    RelationReport rep = check_root_relations(b3);
    bool has_pos = false, has_neg = false;
    for (long long t : rep.pairing_traces) {
        has_pos = has_pos || t > 0;
        has_neg = has_neg || t < 0;
    }
    CHECK(has_pos);
    CHECK(has_neg);

    RootDatum a3 = build_root_system(Family::A, 3);
    for (long long t : check_root_relations(a3).pairing_traces) CHECK(t > 0);
}

TEST_CASE("root matrices live in the defining algebra, non-roots are rejected") {
    for (Family f : kFamilies) {
        ClassicalAlgebra alg = make_algebra(f, 3);
        RootDatum rd = build_root_system(f, 3);
        for (const auto& r : rd.roots) CHECK(matrix_in_algebra(alg, root_vector_matrix(alg, r)));

        RootVec bogus;
        bogus.e = {3, 0, -1};
        CHECK_THROWS_AS(root_vector_matrix(alg, bogus), std::invalid_argument);
    }
    // a matrix violating the defining bilinear relation
    ClassicalAlgebra c2 = make_algebra(Family::C, 2);
    IntMat x(c2.matrix_dim);
    x.at(0, 1) = 1;  // e1-e2 needs the mirrored block too
    CHECK_FALSE(matrix_in_algebra(c2, x));
}

TEST_CASE("killing scale against the root-space trace form", "[oracle]") {
    // Independent identity: on the diagonal subalgebra the invariant form is
    // sum_alpha alpha(H) alpha(H'), and it must equal kappa * tr(H H').
    for (Family f : kFamilies)
        for (int d = 2; d <= 5; ++d) {
            ClassicalAlgebra alg = make_algebra(f, d);
            RootDatum rd = build_root_system(f, d);
            auto cartan = cartan_basis(alg);
            for (std::size_t k = 0; k < cartan.size(); ++k)
                for (std::size_t l = 0; l < cartan.size(); ++l) {
                    long long lhs = 0;
                    for (const auto& r : rd.roots)
                        lhs += root_on_cartan(alg, r, static_cast<int>(k)) *
                               root_on_cartan(alg, r, static_cast<int>(l));
                    long long tr = (cartan[k] * cartan[l]).trace();
                    INFO(family_letter(f) << d << " cartan pair " << k << "," << l);
                    CHECK(lhs == alg.killing_scale * tr);
                }
        }
}

TEST_CASE("bracket is antisymmetric and satisfies the Jacobi identity", "[property]") {
    std::mt19937_64 rng(2024);
    for (Family f : kFamilies) {
        ClassicalAlgebra alg = make_algebra(f, 3);
        RootDatum rd = build_root_system(f, 3);
        std::uniform_int_distribution<std::size_t> pick(0, rd.roots.size() - 1);
        for (int trial = 0; trial < 15; ++trial) {
            IntMat x = root_vector_matrix(alg, rd.roots[pick(rng)]);
            IntMat y = root_vector_matrix(alg, rd.roots[pick(rng)]);
            IntMat z = root_vector_matrix(alg, rd.roots[pick(rng)]);
            CHECK((bracket(x, y) + bracket(y, x)).is_zero());
            IntMat jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                         bracket(z, bracket(x, y));
            CHECK(jac.is_zero());
            // closure: brackets stay inside the algebra
            CHECK(matrix_in_algebra(alg, bracket(x, y)));
        }
    }
}

TEST_CASE("matrix dimensions per family") {
    CHECK(make_algebra(Family::A, 4).matrix_dim == 4);
    CHECK(make_algebra(Family::B, 4).matrix_dim == 9);
    CHECK(make_algebra(Family::C, 4).matrix_dim == 8);
    CHECK(make_algebra(Family::D, 4).matrix_dim == 8);
}

TEST_CASE("roots are closed under negation and contain no zero vector") {
    for (Family f : kFamilies) {
        RootDatum rd = build_root_system(f, 4);
        for (const auto& r : rd.roots) {
            CHECK_FALSE(r.is_zero());
            CHECK(rd.contains(-r));
        }
    }
}
