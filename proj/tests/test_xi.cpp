#include <doctest.h>

#include <random>

#include "zetarep/valuation.hpp"
#include "zetarep/xi.hpp"

using namespace zetarep;

namespace {

// u = 1, d = 1: lambda_0 = lambda_1 = -l - n, beta_1 = l
XiSpec basic_spec(long N) {
    XiSpec s;
    s.u = 1;
    s.d = 1;
    s.lambda = {{-1, -1}, {-1, -1}};
    s.beta = {{0, 0}, {1, 0}};
    s.eps = {0, 0};
    s.delta = {0, 0};
    s.N = N;
    return s;
}

XiSpec u2_spec(long N) {
    XiSpec s;
    s.u = 2;
    s.d = 1;
    s.lambda = {{-1, -1, -1}, {-1, -1, -1}};
    s.beta = {{0, 0, 0}, {1, 0, 0}};
    s.eps = {0, 0};
    s.delta = {0, 0};
    s.N = N;
    return s;
}

XiSpec mixed_spec(long N) {
    XiSpec s;
    s.u = 1;
    s.d = 2;
    s.lambda = {{-2, -1}, {-1, -1}, {-1, -2}};
    s.beta = {{0, 0}, {1, 0}, {2, -1}};
    s.eps = {0, 1, -1};
    s.delta = {0, 2, 1};
    s.N = N;
    return s;
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_NOTHROW(validate_spec(basic_spec(1)));
    XiSpec bad = basic_spec(1);
    bad.lambda[0] = {1, -1};  // positive on (1, 0)
    CHECK_THROWS_AS(validate_spec(bad), AssumptionViolation);
    bad = basic_spec(1);
    bad.delta[0] = 1;
    CHECK_THROWS_AS(validate_spec(bad), AssumptionViolation);
    bad = basic_spec(1);
    bad.beta = {{0, 0}, {0, 1}};  // no beta_j = a l
    CHECK_THROWS_AS(validate_spec(bad), AssumptionViolation);
}

TEST_CASE("hand-checked coefficients of the basic spec") {
    auto s = basic_spec(1);
    CHECK(xi_coefficient(s, 1, 0) == 1);  // point (l, n) = (0, 1)
    CHECK(xi_coefficient(s, 0, 1) == 1);  // point (-1, 1)
    CHECK(xi_coefficient(s, 0, 0) == 0);
    CHECK(xi_coefficient(s, 2, 0) == 2);  // (1,1), (0,2)
    // negative t-exponents never occur
    auto tab = xi_truncate(s, -10, 10, 10);
    for (const auto& [ke, c] : tab) {
        CHECK(ke.second >= 0);
        CHECK(c > 0);
    }
}

TEST_CASE("xi_rational matches the closed form of the basic spec") {
    auto s = basic_spec(1);
    BiRational R = xi_rational(s);
    // Q/(1-Q) * (1/(1-Q) + Q^{-1} t/(1-Q^{-1} t))
    BiRational expect = BiRational::monomial(1, 0, 1) * BiRational::geometric(1, 0) *
                        (BiRational::geometric(1, 0) +
                         BiRational::monomial(-1, 1, 1) * BiRational::geometric(-1, 1));
    CHECK(R.equals(expect));
}

TEST_CASE("xi_rational matches truncation on a 12x12 window") {
    for (const XiSpec& s : {basic_spec(1), basic_spec(0), basic_spec(2), u2_spec(1), u2_spec(0),
                            mixed_spec(1), mixed_spec(3)}) {
        BiRational R = xi_rational(s);
        auto oracle = xi_truncate(s, -6, 5, 11);
        auto window = R.expand_table(-6, 5, 11);
        CHECK(window == oracle);
    }
}

TEST_CASE("inversion property with sign (-1)^{u+1}") {
    auto r1 = inversion_check(basic_spec(1));
    CHECK(r1.pass);
    CHECK(r1.sign == 1);
    auto r2 = inversion_check(u2_spec(1));
    CHECK(r2.pass);
    CHECK(r2.sign == -1);
    CHECK_THROWS_AS(inversion_check(mixed_spec(1)), AssumptionViolation);  // nonzero shifts
}

TEST_CASE("regions partition the domain") {
    for (const XiSpec& s : {basic_spec(0), u2_spec(0), mixed_spec(0), mixed_spec(2)}) {
        if (s.u == 1) {
            for (long l = -6; l <= 6; ++l)
                for (long n = 0; n <= 6; ++n) CHECK(xi_region_cover_count(s, {l, n}) == 1);
        } else {
            for (long l = -4; l <= 4; ++l)
                for (long n1 = 0; n1 <= 4; ++n1)
                    for (long n2 = 0; n2 <= 4; ++n2)
                        CHECK(xi_region_cover_count(s, {l, n1, n2}) == 1);
        }
    }
}

TEST_CASE("randomized specs: rational form vs truncation") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> coin(0, 1), small(-2, 2), neg(-3, -1), pos(1, 2);
    int checked = 0, skipped = 0;
    for (int trial = 0; trial < 40; ++trial) {
        XiSpec s;
        s.u = 1 + coin(rng);
        s.d = 1 + coin(rng);
        const int vars = 1 + s.u;
        s.lambda.assign(s.d + 1, std::vector<long>(vars));
        s.beta.assign(s.d + 1, std::vector<long>(vars, 0));
        for (int v = 0; v < vars; ++v) s.lambda[0][v] = neg(rng);
        for (int j = 1; j <= s.d; ++j)
            for (int v = 0; v < vars; ++v) s.lambda[j][v] = small(rng);
        s.beta[1][0] = pos(rng);  // beta_1 = a l
        for (int j = 2; j <= s.d; ++j)
            for (int v = 0; v < vars; ++v) s.beta[j][v] = small(rng);
        s.eps.assign(s.d + 1, 0);
        s.delta.assign(s.d + 1, 0);
        for (int j = 0; j <= s.d; ++j) s.eps[j] = small(rng);
        for (int j = 1; j <= s.d; ++j) s.delta[j] = small(rng);
        s.N = coin(rng) + coin(rng);
        REQUIRE_NOTHROW(validate_spec(s));
        try {
            BiRational R = xi_rational(s);
            auto window = R.expand_table(-5, 4, 7);
            auto oracle = xi_truncate(s, -5, 4, 7);
            CHECK(window == oracle);
            ++checked;
        } catch (const SizeLimit&) {
            ++skipped;
        }
    }
    CHECK(checked >= 30);  // the guard may skip a few heavy decompositions
}

TEST_CASE("randomized shift-free specs satisfy the inversion law") {
    std::mt19937 rng(16180);
    std::uniform_int_distribution<int> coin(0, 1), small(-2, 2), neg(-3, -1), pos(1, 2);
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        XiSpec s;
        s.u = 1 + coin(rng);
        s.d = 1 + coin(rng);
        const int vars = 1 + s.u;
        s.lambda.assign(s.d + 1, std::vector<long>(vars));
        s.beta.assign(s.d + 1, std::vector<long>(vars, 0));
        for (int v = 0; v < vars; ++v) s.lambda[0][v] = neg(rng);
        for (int j = 1; j <= s.d; ++j)
            for (int v = 0; v < vars; ++v) s.lambda[j][v] = small(rng);
        s.beta[1][0] = pos(rng);
        for (int j = 2; j <= s.d; ++j)
            for (int v = 0; v < vars; ++v) s.beta[j][v] = small(rng);
        s.eps.assign(s.d + 1, 0);
        s.delta.assign(s.d + 1, 0);
        s.N = 0;
        try {
            auto res = inversion_check(s);
            CHECK(res.pass);
            CHECK(res.sign == (s.u % 2 == 0 ? -1 : 1));
            ++checked;
        } catch (const SizeLimit&) {
        }
    }
    CHECK(checked >= 15);
}

TEST_CASE("json round trip") {
    auto s = mixed_spec(2);
    auto back = XiSpec::from_json(s.to_json());
    CHECK(back.lambda == s.lambda);
    CHECK(back.beta == s.beta);
    CHECK(back.eps == s.eps);
    CHECK(back.delta == s.delta);
    CHECK(back.N == s.N);
}
