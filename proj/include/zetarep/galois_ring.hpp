#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "zetarep/valuation.hpp"

namespace zetarep {

// Element of GR(p^L, d): residues mod p^L relative to the fixed modulus.
struct GrElem {
    std::vector<mpz_class> c;
    bool operator==(const GrElem& o) const { return c == o.c; }
};

// Galois ring GR(p^L, d) = Z_p[xi]/p^L where xi is the Teichmueller lift of a
// primitive (p^d - 1)-th root of unity; the modulus divides X^{p^d-1} - 1.
class GaloisRing {
   public:
    GaloisRing(const mpz_class& p, int d, unsigned long L);

    const mpz_class& p() const { return p_; }
    int degree() const { return d_; }
    unsigned long precision() const { return L_; }
    const mpz_class& modulus() const { return mod_; }
    const std::vector<mpz_class>& min_poly() const { return g_; }  // monic, g[0..d-1]

    GrElem zero() const { return {std::vector<mpz_class>(d_, 0)}; }
    GrElem one() const;
    GrElem xi() const;
    GrElem from_int(const mpz_class& a) const;

    GrElem add(const GrElem& a, const GrElem& b) const;
    GrElem sub(const GrElem& a, const GrElem& b) const;
    GrElem neg(const GrElem& a) const;
    GrElem mul(const GrElem& a, const GrElem& b) const;
    GrElem scalar_mul(const mpz_class& s, const GrElem& a) const;

    // Frobenius sigma: xi -> xi^p, applied k times.
    GrElem frobenius(const GrElem& a, int k = 1) const;
    // Trace to the prime subring, sum of all Frobenius conjugates.
    mpz_class trace(const GrElem& a) const;

    bool is_unit(const GrElem& a) const;
    GrElem inverse(const GrElem& a) const;

    bool is_zero(const GrElem& a) const;

   private:
    GrElem reduce_poly(std::vector<mpz_class> c) const;  // length may exceed d
    mpz_class p_;
    int d_;
    unsigned long L_;
    mpz_class mod_;                           // p^L
    std::vector<mpz_class> g_;                // monic modulus, X^d + g[d-1]X^{d-1}+...+g[0]
    std::vector<std::vector<mpz_class>> fr_;  // fr_[k] = xi^{p^k} as coeff vector
};

}  // namespace zetarep
