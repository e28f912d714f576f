#include <doctest.h>

#include "zetarep/catalog.hpp"
#include "zetarep/trees.hpp"

using namespace zetarep;

TEST_CASE("tree_zeta dimensions") {
    TreeSpec empty;
    auto z0 = tree_zeta(empty);
    REQUIRE(z0.size() == 1);
    CHECK(z0[0].first == 1);

    TreeSpec spec{{2, 2, 2}};
    auto z = tree_zeta(spec);
    REQUIRE(z.size() == 4);
    CHECK(z[0].first == 1);
    CHECK(z[1].first == 1);  // dimension 1 occurs twice in total
    CHECK(z[2].first == 2);
    CHECK(z[3].first == 4);
    // dimensions with multiplicity sum to the layer size
    mpz_class sum = 0;
    for (auto& [dim, mult] : z) sum += dim * mult;
    CHECK(sum == 8);
}

TEST_CASE("constant branching matches 1 + (d-1)^{-s}/(1-d^{-s})") {
    // partial sums of the geometric side: dimensions (d-1) d^{i-1}
    TreeSpec spec{{3, 3, 3, 3}};
    auto z = tree_zeta(spec);
    for (size_t i = 1; i < z.size(); ++i) {
        mpz_class expect = 2 * pow_int(3, i - 1);
        CHECK(z[i].first == expect);
    }
}

TEST_CASE("orbit counts equal n+1 with verified witnesses") {
    TreeSpec a{{2, 3, 2}};
    for (int n = 0; n <= 3; ++n) CHECK(orbit_count_layer(a, n) == n + 1);
    TreeSpec b{{3, 3}};
    for (int n = 0; n <= 2; ++n) CHECK(orbit_count_layer(b, n) == n + 1);
}

TEST_CASE("projective layers match the closed formulas") {
    {
        ProjectiveTreeSpec s;  // P^1 over Z_2: m_1 = 3, m_2 = 2
        s.p = 2;
        s.n = 1;
        s.d = 1;
        s.k_max = 2;
        auto m = projective_layers(s);
        REQUIRE(m.size() == 2);
        CHECK(m[0] == 3);
        CHECK(m[1] == 2);
    }
    {
        ProjectiveTreeSpec s;  // P^2 over Z_3: (3^3 - 1)/2 = 13
        s.p = 3;
        s.n = 2;
        s.d = 1;
        s.k_max = 1;
        auto m = projective_layers(s);
        REQUIRE(m.size() == 1);
        CHECK(m[0] == 13);
    }
    {
        ProjectiveTreeSpec s;  // P^1 over the quaternionic Delta at p = 2
        s.p = 2;
        s.n = 1;
        s.d = 2;
        s.k_max = 1;
        auto m = projective_layers(s);
        REQUIRE(m.size() == 1);
        CHECK(m[0] == 5);  // (2^4 - 1)/(2^2 - 1)
    }
}

TEST_CASE("gelfand_gl equals the tree composition") {
    for (auto [p, n, d, depth] : {std::tuple<long, int, int, int>{2, 1, 1, 3}, {3, 2, 1, 2}}) {
        ProjectiveTreeSpec s;
        s.p = p;
        s.n = n;
        s.d = d;
        s.k_max = depth;
        TreeSpec tree;
        for (const auto& m : projective_layers(s))
            tree.branching.push_back(mpz_get_si(m.get_mpz_t()));
        auto via_tree = tree_zeta(tree);
        auto dims = gelfand_gl(n, d).dimensions(p, depth);
        REQUIRE(via_tree.size() == dims.size());
        for (size_t i = 0; i < dims.size(); ++i) CHECK(via_tree[i].first == dims[i]);
    }
}

TEST_CASE("distance-transitivity witnesses on P^1(Z/4)") {
    ProjectiveTreeSpec s;
    s.p = 2;
    s.n = 1;
    s.d = 1;
    s.k_max = 2;
    ProjectiveTree tree(s);
    auto pts = tree.layer(2);
    CHECK(pts.size() == 6);  // 3 * 2
    // witness for the identity pair
    auto g0 = tree.witness(pts[0], pts[0]);
    CHECK(tree.equal(tree.act(pts[0], g0), pts[0]));
    // every equidistant pair has a verified witness fixing the base prefix
    auto base = tree.base_point(2);
    int pairs = 0;
    for (const auto& a : pts)
        for (const auto& b : pts) {
            if (tree.sphere_level(a) != tree.sphere_level(b)) continue;
            auto g = tree.witness(a, b);  // throws on failure
            ++pairs;
            // g fixes the base point
            CHECK(tree.equal(tree.act(base, g), base));
        }
    CHECK(pairs > 6);
}

TEST_CASE("witnesses on the quaternionic tree at p = 2") {
    ProjectiveTreeSpec s;
    s.p = 2;
    s.n = 1;
    s.d = 2;
    s.k_max = 2;
    ProjectiveTree tree(s);
    auto pts = tree.layer(2);
    CHECK(pts.size() == 20);  // 5 * 4
    auto base = tree.base_point(2);
    for (const auto& a : pts)
        for (const auto& b : pts) {
            if (tree.sphere_level(a) != tree.sphere_level(b)) continue;
            auto g = tree.witness(a, b);
            CHECK(tree.equal(tree.act(base, g), base));
        }
}
