#include <doctest.h>

#include <random>

#include "zetarep/pfaffian.hpp"

using namespace zetarep;

namespace {

SplitLattice family(const char* name, int n = 3, int t = 1, int d = 1) {
    FamilyParams params;
    params.family = name;
    params.n = n;
    params.t = t;
    params.d = d;
    return build_family(params, 3);
}

long norm_exponent_of_set(const std::vector<mpq_class>& vals, const mpz_class& p) {
    long e = 0;
    for (const auto& v : vals) {
        if (v == 0) continue;
        e = std::max(e, -valuation(v, p));
    }
    return e;
}

}  // namespace

TEST_CASE("pfaffian of a 2x2 block") {
    // [[0, T1], [-T1, 0]] over one variable
    std::vector<std::vector<LinForm>> m(2, std::vector<LinForm>(2, LinForm(1)));
    m[0][1].c[0] = 1;
    m[1][0].c[0] = -1;
    IntPoly pf = pfaffian(m, {0, 1});
    IntPoly t1 = IntPoly::from_linform(m[0][1]);
    CHECK(pf == t1);
}

TEST_CASE("F_0 = {1} and zero Pfaffians are dropped") {
    auto slat = family("gl_borel");
    auto fam = pfaffian_family(slat.reduced_commutator_matrix(), slat);
    REQUIRE(fam.F.size() == 5);  // k = 0..4 for rank 9
    CHECK(fam.F[0].size() == 1);
    CHECK(fam.F[0][0] == IntPoly::constant(3, 1));
    for (const auto& f : fam.F[2]) CHECK(!f.is_zero());
    // rank 9 alternating: the degree-4 Pfaffians all vanish on the Borel split
    CHECK(fam.F[4].empty());
}

TEST_CASE("gl3 Borel norm sets match the closed descriptions") {
    auto slat = family("gl_borel");
    auto fam = pfaffian_family(slat.reduced_commutator_matrix(), slat);
    const mpz_class p = 3;
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<int> expo(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        mpq_class x(num(rng)), y(num(rng)), z(num(rng));
        x /= pow_int(p, expo(rng));
        y /= pow_int(p, expo(rng));
        z /= pow_int(p, expo(rng));
        std::vector<mpq_class> pt = {z, x, y};  // variable order (z, x, y)
        auto norm_k = [&](size_t k) {
            long e = 0;
            for (const auto& f : fam.F[k]) {
                mpq_class v = f.eval(pt);
                if (v != 0) e = std::max(e, -valuation(v, p));
            }
            return e;
        };
        CHECK(norm_k(1) == norm_exponent_of_set({x, y, z}, p));
        CHECK(norm_k(2) == norm_exponent_of_set({x * x, y * y, z * z}, p));
        CHECK(norm_k(3) == norm_exponent_of_set({x * x * y, x * y * y}, p));
    }
}

TEST_CASE("index_of_form: integral points and the gl3 example") {
    auto slat = family("gl_borel");
    auto fam = pfaffian_family(slat.reduced_commutator_matrix(), slat);
    const mpz_class p = 3;
    CHECK(index_of_form(slat, {mpq_class(1), mpq_class(2), mpq_class(5)}, p, &fam) == 0);
    // x = (p^{-1}, 0, 0) on the (x, y, z) coordinates: our order is (z, x, y)
    std::vector<mpq_class> pt = {mpq_class(0), mpq_class(1, 3), mpq_class(0)};
    CHECK(index_of_form(slat, pt, p, &fam) == 2);
    // at (p^{-1}, p^{-1}, p^{-1}) the top Pfaffians dominate: negative parts
    // sum to 6, the square root of the index is p^3
    std::vector<mpq_class> diag(3, mpq_class(1, 3));
    auto prof = evaluated_profile(slat, diag, p);
    CHECK(prof.negative_part_sum() == 6);
    CHECK(index_of_form(slat, diag, p, &fam) == 3);
}

TEST_CASE("index_of_form is invariant under integral shifts") {
    auto slat = family("gl_borel");
    const mpz_class p = 3;
    for (long a = 0; a < 9; ++a)
        for (long b = 0; b < 9; ++b)
            for (long c = 0; c < 9; ++c) {
                std::vector<mpq_class> x = {mpq_class(a, 9), mpq_class(b, 9), mpq_class(c, 9)};
                long e = index_of_form(slat, x, p);
                std::vector<mpq_class> shifted = {x[0] + 1, x[1] - 2, x[2] + 7};
                CHECK(index_of_form(slat, shifted, p) == e);
            }
}

TEST_CASE("pairing of evaluated profiles on grids") {
    for (const char* name : {"gl_borel", "u3"}) {
        auto slat = family(name);
        const mpz_class p = 3;
        for (long a = 0; a < 9; ++a)
            for (long b = 0; b < 9; ++b) {
                std::vector<mpq_class> x = {mpq_class(a, 9), mpq_class(b, 9), mpq_class(5, 9)};
                auto prof = evaluated_profile(slat, x, p);
                CHECK(prof.paired());
            }
    }
}

TEST_CASE("parabolic index example: M_xi with xi = ((1),(-1))") {
    // gl_n parabolic t = 1: the form dual to p^{-1} E_{n1} has e = n - 1
    for (int n : {2, 3, 4}) {
        auto slat = family("gl_parabolic", n, 1);
        // complement basis: E_{1j}, j = 2..n in row-major order; the form
        // M_xi pairs via the trace with the E_{1,?}: Tr(M X) with M = p^{-1}E'
        // picks the coordinate of E_{1n}... the dual coordinate vector has a
        // single entry p^{-1} at the last complement position
        std::vector<mpq_class> x(slat.m_plus_1(), 0);
        x.back() = mpq_class(1, 3);
        CHECK(index_of_form(slat, x, 3) == n - 1);
    }
}

TEST_CASE("size guard for the symbolic route") {
    auto slat = family("gl_parabolic", 4, 2);
    CHECK(slat.rank() == 16);
    CHECK_THROWS_AS(pfaffian_family(slat.reduced_commutator_matrix(), slat), SizeLimit);
}
