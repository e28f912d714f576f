#pragma once

#include <memory>
#include <vector>

#include "zetarep/galois_ring.hpp"

namespace zetarep {

// Element of the maximal order Delta mod p^L in the basis xi^i Pi^j:
// slice[j] holds the Galois-ring coefficient of Pi^j.
struct CycElem {
    std::vector<GrElem> slice;
    bool operator==(const CycElem& o) const { return slice == o.slice; }
};

// Cyclic algebra Delta = GR<Pi> with Pi^d = p and Pi x = sigma(x) Pi, where
// sigma(xi) = xi^{p^h}, gcd(h, d) = 1. Arithmetic mod p^L.
class CyclicAlgebra {
   public:
    CyclicAlgebra(const mpz_class& p, int d, int h, unsigned long L);

    const GaloisRing& ring() const { return gr_; }
    const mpz_class& p() const { return gr_.p(); }
    int index() const { return d_; }
    int invariant() const { return h_; }
    unsigned long precision() const { return gr_.precision(); }

    CycElem zero() const;
    CycElem one() const;
    CycElem xi() const;
    CycElem pi() const;
    CycElem from_ring(const GrElem& a) const;
    CycElem from_int(const mpz_class& a) const;

    CycElem add(const CycElem& a, const CycElem& b) const;
    CycElem sub(const CycElem& a, const CycElem& b) const;
    CycElem neg(const CycElem& a) const;
    CycElem mul(const CycElem& a, const CycElem& b) const;

    bool is_zero(const CycElem& a) const;
    // unit in Delta: nonzero residue mod the maximal ideal (Pi)
    bool is_unit(const CycElem& a) const;
    CycElem inverse(const CycElem& a) const;

    // tr_{d|f}(x) = Tr(sum_i a_{i,0} xi^i): Galois-ring trace of the j=0 slice.
    mpz_class reduced_trace(const CycElem& x) const;

    // Reduce mod Pi^K: the coefficient of xi^i Pi^j is cut mod p^{ceil((K-j)/d)}.
    CycElem reduce_mod_pi_pow(const CycElem& a, long K) const;
    // Pi-adic valuation in 0..dL, dL for zero.
    long pi_valuation(const CycElem& a) const;

   private:
    GaloisRing gr_;
    int d_, h_;
};

}  // namespace zetarep
