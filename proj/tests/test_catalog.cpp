#include <doctest.h>

#include "zetarep/catalog.hpp"

using namespace zetarep;

TEST_CASE("QTPoly binomial division") {
    QTPoly p = QTPoly::binomial(1, 6) * QTPoly::binomial(0, 1) * QTPoly::monomial(-2, 3, 5);
    auto q = p.divided_by_binomial(0, 1);
    REQUIRE(q.has_value());
    auto q2 = q->divided_by_binomial(1, 6);
    REQUIRE(q2.has_value());
    CHECK(*q2 == QTPoly::monomial(-2, 3, 5));
    CHECK(!QTPoly::one().divided_by_binomial(0, 1).has_value());
    // pure q-binomial route
    QTPoly r = QTPoly::binomial(2, 0) * QTPoly::monomial(-1, 0, 3);
    auto qr = r.divided_by_binomial(2, 0);
    REQUIRE(qr.has_value());
    CHECK(*qr == QTPoly::monomial(-1, 0, 3));
}

TEST_CASE("BiRational arithmetic and inversion involution") {
    BiRational a = BiRational::monomial(1, 0, 1) * BiRational::geometric(0, 1);
    BiRational b = BiRational::monomial(0, 2, 3);
    BiRational s = a + b;
    CHECK(s.equals(b + a));
    BiRational twice = s.subst_inverse().subst_inverse();
    CHECK(twice.equals(s));
    // constant 1 passes the trivial functional equation
    CHECK(functional_equation_check(BiRational::one(), 0).pass);
}

TEST_CASE("max_parabolic(2,1,r) equals the printed closed form") {
    for (unsigned long r : {1ul, 2ul}) {
        // q^r (1 - q^{-1} t) / (1 - t)
        QTPoly num = QTPoly::monomial(static_cast<long>(r), 0, 1) * QTPoly::binomial(-1, 1);
        BiRational expect(num, 0, 0, {DenFactor{0, 1, 1}});
        CHECK(max_parabolic(2, 1, r).equals(expect));
    }
}

TEST_CASE("expansions: division, parabolic, gl3 constant term") {
    auto one = expand(BiRational::one(), 3, 4);
    CHECK(one.count(0) == 1);
    CHECK(one.count(1) == 0);
    auto d = expand(division(1, 2, 1), 3, 4);
    CHECK(d.count(0) == 81);
    CHECK(d.count(1) == 0);
    CHECK(d.count(2) == 72);
    CHECK(d.count(3) == 0);
    CHECK(d.count(4) == 72);
    auto m = expand(max_parabolic(2, 1, 1), 3, 3);
    CHECK(m.count(0) == 3);
    CHECK(m.count(1) == 2);
    auto g = expand(gl3_borel(1), 3, 3);
    CHECK(g.count(0) == 27);   // q^{3r}: the count of 1-dimensional constituents
    CHECK(g.count(1) == 0);
    CHECK(g.count(2) == 42);
    CHECK(g.count(3) == 12);
    auto u = expand(u3_borel(1), 3, 1);
    CHECK(u.count(0) == 27);
}

TEST_CASE("expansion coefficients are non-negative integers across q") {
    for (long q : {2L, 3L, 5L})
        CHECK_NOTHROW(expand(gl3_borel(2), q, 8));
    for (long q : {3L, 5L, 7L}) {
        CHECK_NOTHROW(expand(u3_borel(1), q, 8));
        CHECK_NOTHROW(expand(max_parabolic(4, 2, 1), q, 8));
        CHECK_NOTHROW(expand(division(2, 3, 1), q, 8));
    }
}

TEST_CASE("functional equations with the global factor") {
    CHECK(functional_equation_check(gl3_borel(1), 3 * (1 - 2 * 1)).pass);
    CHECK(functional_equation_check(gl3_borel(2), 3 * (1 - 2 * 2)).pass);
    CHECK(functional_equation_check(u3_borel(1), 3 * (1 - 2 * 1)).pass);
    CHECK(functional_equation_check(max_parabolic(2, 1, 1), 1 * (1 - 2 * 1)).pass);
    CHECK(functional_equation_check(max_parabolic(3, 1, 2), 2 * (1 - 2 * 2)).pass);
    // a wrong exponent must fail with a nonzero residual
    auto bad = functional_equation_check(gl3_borel(1), 0);
    CHECK(!bad.pass);
    CHECK(!bad.residual.is_zero());
}

TEST_CASE("vanishing at s = -1") {
    for (long q : {2L, 3L, 5L}) CHECK(evaluate_at_minus_one(gl3_borel(1), q) == 0);
    CHECK(evaluate_at_minus_one(u3_borel(1), 3) == 0);
    CHECK(evaluate_at_minus_one(max_parabolic(2, 1, 1), 3) == 0);
    CHECK(evaluate_at_minus_one(max_parabolic(3, 1, 1), 3) == 0);
    CHECK(evaluate_at_minus_one(max_parabolic(4, 2, 1), 3) == 0);
    CHECK(evaluate_at_minus_one(division(1, 2, 1), 3) == 0);
    CHECK(gelfand_gl(1, 1).value_at_minus_one(3) == 0);
    // a finite Dirichlet polynomial does not vanish there
    CHECK(evaluate_at_minus_one(BiRational::monomial(3, 0, 1), 2) == 8);
}

TEST_CASE("abscissae") {
    auto a = gl3_borel(1).abscissa();
    REQUIRE(a.has_value());
    CHECK(*a == mpq_class(1, 6));
    auto u = u3_borel(2).abscissa();
    REQUIRE(u.has_value());
    CHECK(*u == mpq_class(1, 6));
    for (auto [n, t] : {std::pair<int, int>{2, 1}, {3, 1}, {4, 2}}) {
        auto m = max_parabolic(n, t, 1).abscissa();
        REQUIRE(m.has_value());
        CHECK(*m == 0);
    }
    CHECK(!BiRational::monomial(3, 0, 1).abscissa().has_value());  // -inf
    CHECK(gelfand_gl(2, 1).abscissa() == 0);
}

TEST_CASE("division(n,1,r) = max_parabolic(n+1,1,r) as reduced functions") {
    for (int n : {1, 2, 3})
        for (unsigned long r : {1ul, 2ul}) CHECK(division(n, 1, r).equals(max_parabolic(n + 1, 1, r)));
}

TEST_CASE("orbit-parameter index and size formulas") {
    OrbitParam xi;
    xi.u = {1};
    xi.gamma = {-1};
    CHECK(lemma_index_formula(2, 1, xi) == 1);
    CHECK(lemma_orbit_formula(2, 1, xi, 3) == 2);  // q - 1
    OrbitParam empty;
    CHECK(lemma_index_formula(3, 1, empty) == 0);
    CHECK(lemma_orbit_formula(3, 1, empty, 3) == 1);
    OrbitParam xi2;
    xi2.u = {1};
    xi2.gamma = {-2};
    CHECK(lemma_index_formula(3, 1, xi2) == 4);
}

TEST_CASE("orbit sizes partition the truncated dual of forms") {
    // sum over xi with level <= L of |L.M_xi| = q^{L t (n-t)}
    for (auto [n, t] : {std::pair<int, int>{2, 1}, {3, 1}}) {
        for (long L = 1; L <= 2; ++L) {
            mpq_class total = 0;
            // compositions u of N <= t with strictly increasing gamma in [-L, -1]
            // t = 1: u is empty or (1); gamma in {-1..-L}
            total += lemma_orbit_formula(n, t, OrbitParam{}, 3);
            for (long g = -L; g <= -1; ++g) {
                OrbitParam xi;
                xi.u = {1};
                xi.gamma = {g};
                total += lemma_orbit_formula(n, t, xi, 3);
            }
            mpq_class expect(pow_int(3, static_cast<unsigned long>(L * t * (n - t))));
            CHECK(total == expect);
        }
    }
}

TEST_CASE("gelfand series dimensions") {
    auto dims = gelfand_gl(1, 1).dimensions(2, 3);
    // branching m_1 = 3, m_k = 2: dimensions 1, 2, 3, 6
    REQUIRE(dims.size() == 4);
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 2);
    CHECK(dims[2] == 3);
    CHECK(dims[3] == 6);
}
