#pragma once

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <vector>

namespace zetarep {

// Sentinel for v_p(0) = +infinity.
inline constexpr long kValInf = std::numeric_limits<long>::max();

struct ConvergenceViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_prime_small(const mpz_class& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

// v_p of a nonzero integer.
inline long valuation_int(const mpz_class& a, const mpz_class& p) {
    if (a == 0) return kValInf;
    mpz_class rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

// v_p(a/b) = v_p(a) - v_p(b), v_p(0) = +inf.
inline long valuation(const mpq_class& x, const mpz_class& p) {
    if (!is_prime_small(p)) throw std::invalid_argument("valuation: p must be prime");
    if (x == 0) return kValInf;
    return valuation_int(x.get_num(), p) - valuation_int(x.get_den(), p);
}

inline mpz_class pow_int(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Inverse of a mod m; a must be a unit.
inline mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("inv_mod: not a unit");
    return r;
}

inline mpz_class mod_nonneg(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    return r;
}

// Reduce a rational with p-unit denominator mod p^M.
inline mpz_class rational_mod(const mpq_class& x, const mpz_class& p, unsigned long M) {
    mpz_class pm = pow_int(p, M);
    if (mpz_divisible_p(x.get_den().get_mpz_t(), p.get_mpz_t()))
        throw std::domain_error("rational_mod: denominator not a p-unit");
    mpz_class num = mod_nonneg(x.get_num(), pm);
    return mod_nonneg(num * inv_mod(mod_nonneg(x.get_den(), pm), pm), pm);
}

// Truncated p-adic exponential: sum a^k/k! until all remaining terms vanish mod p^M.
// Requires v_p(a) >= 1 (>= 2 when p = 2).
inline mpz_class padic_exp(const mpq_class& a, const mpz_class& p, unsigned long M) {
    long v = valuation(a, p);
    long vmin = (p == 2) ? 2 : 1;
    if (v != kValInf && v < vmin)
        throw ConvergenceViolation("padic_exp: v_p(a) too small for convergence");
    if (a == 0 || v >= static_cast<long>(M)) return mpz_class(1) % pow_int(p, M);

    mpq_class term = 1, sum = 1;
    mpz_class pm1 = p - 1;
    for (unsigned long k = 1;; ++k) {
        term *= a;
        term /= static_cast<unsigned long>(k);
        if (valuation(term, p) < static_cast<long>(M)) sum += term;
        // v_p(a^j/j!) >= j*v - (j-1)/(p-1), increasing in j; stop once >= M.
        mpz_class lower = mpz_class(k) * v * pm1 - mpz_class(k - 1);
        if (lower >= mpz_class(M) * pm1) break;
    }
    return rational_mod(sum, p, M);
}

}  // namespace zetarep
