#pragma once

#include <vector>

#include "zetarep/birational.hpp"
#include "zetarep/lie_lattice.hpp"
#include "zetarep/tally.hpp"

namespace zetarep {

// ---- closed-form zeta functions, t = q^{-s} ---------------------------------

// Borel -> GL_3^r: q^{3(r-1)} q^{1-3s} (q - q^{-s}) (u(q^s) - q u(q^{-s}))
//                  / ((1-q^{-s})(1-q^{1-6s})),  u(X) = X^2-2X+1-2X^{-1}+X^{-2}-X^{-3}
BiRational gl3_borel(unsigned long r);

// Borel -> U_3^r (unramified): q^{3(r-1)} q^{1-2s} (q - q^{-s})
//                  (q^{-s} u(q^s) + q u(q^{-s})) / (1-q^{1-6s}),  u(X) = X^2+X+X^{-2}
BiRational u3_borel(unsigned long r);

// maximal parabolic of type (t, n-t) -> GL_n^r:
//   q^{rt(n-t)} sum_J V_{n,t}(J) prod_{j in J} t^{j(n-j)} / (1 - t^{j(n-j)})
BiRational max_parabolic(int n, int t, unsigned long r);

// maximal (1,n)-parabolic -> GL_{n+1}^{dr}(Delta): q^{rnd^2} (1-q^{-dn}t^{dn})/(1-t^{dn})
BiRational division(int n, int d, unsigned long r);

BiRational catalog(const std::string& name, int n, int t, int d, unsigned long r);

// ---- parabolic combinatorics -------------------------------------------------

// V_q(m) = prod_{j=1}^m (1 - q^{-j}) as a Laurent polynomial in q.
BiRational vol_gl(int m);

// V_{n,t}(J) for J subset of {1..t}.
BiRational parabolic_volume(int n, int t, const std::vector<int>& J);

// Orbit parameter xi = (u, gamma): composition u with N(u) <= t and strictly
// increasing negative integers gamma.
struct OrbitParam {
    std::vector<int> u;
    std::vector<long> gamma;
};

// Index exponent sum_i -u_i gamma_i (n - u_i - 2 sum_{j<i} u_j).
long lemma_index_formula(int n, int t, const OrbitParam& xi);

// L-orbit size of M_xi at numeric q.
mpq_class lemma_orbit_formula(int n, int t, const OrbitParam& xi, const mpq_class& q);

// ---- checks -----------------------------------------------------------------

struct FeqResult {
    bool pass = false;
    BiRational residual;  // R(1/q,1/t) - q^E R(q,t), zero iff pass
};

// R(q^{-1}, t^{-1}) == q^expected_exponent * R(q, t) as rational functions.
FeqResult functional_equation_check(const BiRational& R, long expected_exponent);

// substitute t = q = q_value (s = -1); PoleAtPoint if genuinely singular there
mpq_class evaluate_at_minus_one(const BiRational& R, const mpq_class& q_value);

// Taylor coefficients at q = q0 as an exact tally; throws if non-integral or
// negative (these are Dirichlet coefficients of a representation).
DirichletTally expand(const BiRational& R, const mpz_class& q0, long e_max);

// ---- boundary series of the projective tree (Gelfand pair) -------------------

// zeta = 1 + A^{-s} (q^{-ds} + B^{-s} / (1 - q^{-dns})) with
// A = (q^{dn}-1)/(q^d-1), B = q^{d(n+1)}-1; not a series in q^{-s} alone.
struct GelfandSeries {
    int n = 1;
    int d = 1;

    // constituent dimensions with multiplicity 1, depths 0..depth
    std::vector<mpz_class> dimensions(const mpz_class& q, int depth) const;
    // exact value at s = -1
    mpq_class value_at_minus_one(const mpq_class& q) const;
    // abscissa of the boundary zeta: from the single pole factor 1 - t^{dn}
    mpq_class abscissa() const;
};

GelfandSeries gelfand_gl(int n, int d);

}  // namespace zetarep
