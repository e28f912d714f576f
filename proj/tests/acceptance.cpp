// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Exit code = number of failed criteria.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "zetarep/catalog.hpp"
#include "zetarep/cyclic_algebra.hpp"
#include "zetarep/oracle.hpp"
#include "zetarep/orbits.hpp"
#include "zetarep/pfaffian.hpp"
#include "zetarep/trees.hpp"
#include "zetarep/xi.hpp"

using namespace zetarep;

namespace {

int failures = 0;

void run(int id, const std::string& what, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
        body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double sec = std::chrono::duration<double>(t1 - t0).count();
    std::cout << (err.empty() ? "[PASS] " : "[FAIL] ") << "criterion " << std::setw(2) << id
              << "  " << what << "  (" << std::fixed << std::setprecision(2) << sec << " s)";
    if (!err.empty()) {
        std::cout << "\n       " << err;
        ++failures;
    }
    std::cout << "\n";
}

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw CheckFailure(msg);
}

SplitLattice family(const char* name, const mpz_class& p, int n = 3, int t = 1, int d = 1) {
    FamilyParams params;
    params.family = name;
    params.n = n;
    params.t = t;
    params.d = d;
    return build_family(params, p);
}

void compare_oracle_closed(const SplitLattice& slat, const BiRational& closed, const mpz_class& p,
                           unsigned long r, unsigned long L, long e_max) {
    ZetaJob job(slat, p, r, L);
    auto oracle = bruteforce_zeta(job);
    require(oracle.exact_up_to >= e_max, "oracle not certified up to e = " + std::to_string(e_max));
    auto expansion = expand(closed, p, e_max);
    for (long e = 0; e <= e_max; ++e) {
        mpz_class a = oracle.count(e), b = expansion.count(e);
        if (a != b) {
            std::ostringstream os;
            os << "coefficient mismatch at e = " << e << ": oracle " << a.get_str() << ", closed "
               << b.get_str();
            throw CheckFailure(os.str());
        }
    }
}

// trace-form matrix B_m of the quadratic model (d = 2), basis 1, xi, Pi, xi Pi
std::vector<std::vector<mpq_class>> quad_trace_form(const mpz_class& p, const mpz_class& D,
                                                    int m) {
    auto tr = [&](int i, int j, int m_) -> mpq_class {
        // tr(xi^i Pi^j * Pi^{-m}): nonzero iff j - m even; Tr(1) = 2, Tr(xi) = 0
        if (((j - m_) % 2 + 2) % 2 != 0) return 0;
        long half = (j - m_) / 2;
        mpq_class val = (i == 0) ? mpq_class(2) : mpq_class(0);
        if (half >= 0)
            val *= mpq_class(pow_int(p, half));
        else
            val /= mpq_class(pow_int(p, -half));
        return val;
    };
    struct Mono {
        int i, j;
    };
    const Mono basis[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::vector<std::vector<mpq_class>> B(4, std::vector<mpq_class>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            // (xi^i Pi^j)(xi^i' Pi^j') = sign * D^{carry_xi} p^{carry_pi} xi^{i''} Pi^{j''}
            mpq_class coeff = (basis[a].j == 1 && basis[b].i == 1) ? -1 : 1;
            int i2 = basis[a].i + basis[b].i, j2 = basis[a].j + basis[b].j;
            if (i2 >= 2) {
                i2 -= 2;
                coeff *= mpq_class(D);
            }
            // leave j2 unreduced: tr handles Pi powers via parity and halving
            B[a][b] = coeff * tr(i2, j2, m);
        }
    return B;
}

}  // namespace

int main() {
    const mpz_class p3 = 3, p5 = 5;

    run(1, "GL3 Borel oracle vs closed form (p=3 L=3; p=5 L=2)", [&] {
        compare_oracle_closed(family("gl_borel", p3), gl3_borel(1), p3, 1, 3, 3);
        compare_oracle_closed(family("gl_borel", p5), gl3_borel(1), p5, 1, 2, 2);
    });

    run(2, "U3 Borel oracle vs closed form (p=3, delta^2=-1, L=3)", [&] {
        compare_oracle_closed(family("u3", p3), u3_borel(1), p3, 1, 3, 3);
    });

    run(3, "maximal parabolic oracle vs the V_{n,t}(J) formula", [&] {
        for (auto [n, t] : {std::pair<int, int>{2, 1}, {3, 1}, {4, 2}})
            compare_oracle_closed(family("gl_parabolic", p3, n, t), max_parabolic(n, t, 1), p3, 1,
                                  2, 2);
    });

    run(4, "division algebra d=2: oracle, closed form, trace-form divisors", [&] {
        compare_oracle_closed(family("gl_division", p3, 1, 0, 2), division(1, 2, 1), p3, 1, 2, 2);
        ZetaJob job(family("gl_division", p3, 1, 0, 2), p3, 1, 2);
        auto tally = bruteforce_zeta(job);
        require(tally.count(0) == 81 && tally.count(2) == 72, "expected {0: 81, 2: 72}");
        // B_m elementary divisors: pi^{-m0} with multiplicity (m1+1)d,
        // pi^{-m0+1} with multiplicity (d-m1-1)d
        mpz_class D = default_nonresidue(p3);
        CyclicAlgebra alg(p3, 2, 1, 6);
        for (int m = 0; m <= 3; ++m) {
            int m0 = m / 2, m1 = m % 2;
            std::vector<long> expect;
            for (int i = 0; i < (m1 + 1) * 2; ++i) expect.push_back(-m0);
            for (int i = 0; i < (2 - m1 - 1) * 2; ++i) expect.push_back(-m0 + 1);
            std::sort(expect.begin(), expect.end());
            auto prof = smith_valuations(quad_trace_form(p3, D, m), p3);
            require(prof.nu == expect, "B_" + std::to_string(m) + " divisors off (quadratic)");
            // independent route: Teichmueller-basis residues mod p^6
            std::vector<std::vector<mpq_class>> Bt(4, std::vector<mpq_class>(4));
            CycElem mono[4] = {alg.one(), alg.xi(), alg.pi(), alg.mul(alg.xi(), alg.pi())};
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    // tr(x y Pi^{-m}) = p^{-m0} tr(x y Pi^{2 - m1} ) / p for odd part:
                    // multiply by Pi^{(2 - m1) % 2 ? ... } use x y Pi^{2-m1} = x y Pi^{-m1} p
                    // tr(x y Pi^{-m}) = p^{-m0-[m1>0]} tr(x y Pi^{(2-m1) mod 2 lift});
                    // residues mod p^6 determine the divisor valuations < 4
                    CycElem prod = alg.mul(mono[a], mono[b]);
                    int lift = (m1 == 0) ? 0 : 2 - m1;
                    CycElem shifted = prod;
                    for (int c = 0; c < lift; ++c) shifted = alg.mul(shifted, alg.pi());
                    mpq_class val(alg.reduced_trace(shifted));
                    if (m1 > 0) val /= mpq_class(p3);
                    val /= mpq_class(pow_int(p3, m0));
                    Bt[a][b] = val;
                }
            auto prof2 = smith_valuations(Bt, p3);
            require(prof2.nu == expect, "B_" + std::to_string(m) + " divisors off (Galois ring)");
        }
    });

    run(5, "vanishing at s = -1", [&] {
        require(evaluate_at_minus_one(gl3_borel(1), 3) == 0, "gl3_borel");
        require(evaluate_at_minus_one(u3_borel(1), 3) == 0, "u3_borel");
        for (auto [n, t] : {std::pair<int, int>{2, 1}, {3, 1}, {4, 2}})
            require(evaluate_at_minus_one(max_parabolic(n, t, 1), 3) == 0, "max_parabolic");
        require(evaluate_at_minus_one(division(1, 2, 1), 3) == 0, "division(1,2,1)");
        require(gelfand_gl(1, 1).value_at_minus_one(3) == 0, "gelfand_gl(1,1)");
    });

    run(6, "functional equations with exponent (m+1)(1-2r)", [&] {
        for (unsigned long r : {1ul, 2ul}) {
            require(functional_equation_check(gl3_borel(r), 3 * (1 - 2 * (long)r)).pass,
                    "gl3_borel r=" + std::to_string(r));
            require(functional_equation_check(u3_borel(r), 3 * (1 - 2 * (long)r)).pass,
                    "u3_borel r=" + std::to_string(r));
            require(functional_equation_check(max_parabolic(2, 1, r), 1 * (1 - 2 * (long)r)).pass,
                    "max_parabolic(2,1) r=" + std::to_string(r));
            require(functional_equation_check(max_parabolic(3, 1, r), 2 * (1 - 2 * (long)r)).pass,
                    "max_parabolic(3,1) r=" + std::to_string(r));
        }
    });

    run(7, "abscissae of convergence", [&] {
        auto a1 = gl3_borel(1).abscissa();
        require(a1 && *a1 == mpq_class(1, 6), "gl3_borel abscissa 1/6");
        auto a2 = u3_borel(1).abscissa();
        require(a2 && *a2 == mpq_class(1, 6), "u3_borel abscissa 1/6");
        for (auto [n, t] : {std::pair<int, int>{2, 1}, {3, 1}, {4, 2}}) {
            auto am = max_parabolic(n, t, 1).abscissa();
            require(am && *am == 0, "max_parabolic abscissa 0");
        }
        require(gelfand_gl(2, 1).abscissa() == 0, "tree boundary abscissa 0");
    });

    run(8, "orbit method self-consistency (Heisenberg and gl2, L=2)", [&] {
        auto check_space = [&](const LieLattice& lat) {
            CoadjointSpace space(lat, p3, 1, 2);
            auto data = space.all_orbits();
            uint64_t covered = 0;
            for (const auto& orb : data.orbits) {
                covered += orb.size;
                mpz_class expect = pow_int(p3, 2 * static_cast<unsigned long>(orb.index_exponent));
                require(mpz_class(static_cast<unsigned long>(orb.size)) == expect,
                        "orbit size != q^{2e}");
            }
            require(covered == data.total_points, "orbits do not partition the dual");
            mpz_class total = pow_int(p3, 2 * static_cast<unsigned long>(lat.rank()));
            require(mpz_class(static_cast<unsigned long>(data.total_points)) == total,
                    "dual size != 3^{2 dim}");
        };
        check_space(heisenberg());
        auto gl2 = family("gl_parabolic", p3, 2, 1);
        check_space(gl2.lattice());
        // multiplicities at eta = 0 reassemble the tallies
        require(truncated_dual_tally(heisenberg(), {0}, p3, 1, 2) ==
                    multiplicity_tally(heisenberg(), {0}, p3, 1, 2),
                "Heisenberg multiplicity reassembly");
        std::vector<int> h_idx;
        for (int i = gl2.m_plus_1(); i < gl2.rank(); ++i) h_idx.push_back(i);
        auto direct = truncated_dual_tally(gl2.lattice(), h_idx, p3, 1, 2);
        auto viamult = multiplicity_tally(gl2.lattice(), h_idx, p3, 1, 2);
        require(direct == viamult, "gl2 multiplicity reassembly");
        ZetaJob job(gl2, p3, 1, 1);  // dual level 2 = coset level L - r = 1
        auto oracle = bruteforce_zeta(job);
        for (long e = 0; e <= oracle.exact_up_to; ++e) {
            auto it = viamult.find(e);
            mpz_class got = it == viamult.end() ? mpz_class(0) : it->second;
            require(got == oracle.count(e), "multiplicities disagree with the bruteforce tally");
        }
    });

    run(9, "Pfaffian/Smith route equivalence on the gl3 and u3 grids", [&] {
        for (const char* name : {"gl_borel", "u3"}) {
            auto slat = family(name, p3);
            auto fam = pfaffian_family(slat.reduced_commutator_matrix(), slat);
            for (long a = 0; a < 9; ++a)
                for (long b = 0; b < 9; ++b)
                    for (long c = 0; c < 9; ++c) {
                        std::vector<mpq_class> x = {mpq_class(a, 9), mpq_class(b, 9),
                                                    mpq_class(c, 9)};
                        auto prof = evaluated_profile(slat, x, p3);
                        require(prof.paired(), "nu values do not come in pairs");
                        index_of_form(slat, x, p3, &fam);  // throws RouteMismatch on disagreement
                    }
        }
    });

    run(10, "Xi engine: rationality window and reciprocity", [&] {
        auto make = [](int u, int d, std::vector<std::vector<long>> lam,
                       std::vector<std::vector<long>> bet, long N) {
            XiSpec s;
            s.u = u;
            s.d = d;
            s.lambda = std::move(lam);
            s.beta = std::move(bet);
            s.eps.assign(d + 1, 0);
            s.delta.assign(d + 1, 0);
            s.N = N;
            return s;
        };
        std::vector<XiSpec> specs = {
            make(1, 1, {{-1, -1}, {-1, -1}}, {{0, 0}, {1, 0}}, 1),
            make(1, 2, {{-2, -1}, {-1, -1}, {-1, -2}}, {{0, 0}, {1, 0}, {2, -1}}, 1),
            make(2, 1, {{-1, -1, -1}, {-1, -1, -1}}, {{0, 0, 0}, {1, 0, 0}}, 1),
            make(2, 2, {{-1, -1, -1}, {-1, -2, -1}, {-2, -1, -1}},
                 {{0, 0, 0}, {1, 0, 0}, {1, -1, 0}}, 1),
        };
        for (size_t i = 0; i < specs.size(); ++i) {
            BiRational R = xi_rational(specs[i]);
            auto window = R.expand_table(-6, 5, 11);
            auto oracle = xi_truncate(specs[i], -6, 5, 11);
            require(window == oracle, "spec " + std::to_string(i) + ": window != truncation");
            auto inv = inversion_check(specs[i]);
            require(inv.pass, "spec " + std::to_string(i) + ": inversion fails");
            require(inv.sign == (specs[i].u % 2 == 0 ? -1 : 1),
                    "spec " + std::to_string(i) + ": wrong sign");
        }
    });

    run(11, "trees: orbit counts, dimensions, projective layers, Gelfand", [&] {
        TreeSpec a{{2, 3, 2}}, b{{3, 3}};
        for (int n = 0; n <= 3; ++n)
            require(orbit_count_layer(a, n) == n + 1, "orbit count (2,3,2)");
        for (int n = 0; n <= 2; ++n)
            require(orbit_count_layer(b, n) == n + 1, "orbit count (3,3)");
        auto z = tree_zeta(a);
        mpz_class prod = 1;
        for (size_t i = 0; i < a.branching.size(); ++i) {
            require(z[i + 1].first == (a.branching[i] - 1) * prod, "tree dimension formula");
            prod *= a.branching[i];
        }
        for (auto [pp, n, d, k] :
             {std::tuple<long, int, int, int>{2, 1, 1, 2}, {3, 2, 1, 1}, {2, 1, 2, 1}}) {
            ProjectiveTreeSpec s;
            s.p = pp;
            s.n = n;
            s.d = d;
            s.k_max = k;
            auto layers = projective_layers(s);  // throws if enumeration != formula
            TreeSpec tree;
            for (const auto& m : layers) tree.branching.push_back(mpz_get_si(m.get_mpz_t()));
            auto via_tree = tree_zeta(tree);
            auto dims = gelfand_gl(n, d).dimensions(pp, k);
            require(via_tree.size() == dims.size(), "gelfand depth mismatch");
            for (size_t i = 0; i < dims.size(); ++i)
                require(via_tree[i].first == dims[i], "gelfand dimension mismatch");
        }
    });

    run(12, "division(n,1,r) = max_parabolic(n+1,1,r) as reduced functions", [&] {
        for (int n : {1, 2, 3})
            for (unsigned long r : {1ul, 2ul})
                require(division(n, 1, r).equals(max_parabolic(n + 1, 1, r)),
                        "identity fails at n = " + std::to_string(n));
    });

    if (failures == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << failures << " criteria failed\n";
    return failures;
}
