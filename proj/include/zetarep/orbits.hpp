#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zetarep/lie_lattice.hpp"
#include "zetarep/oracle.hpp"

namespace zetarep {

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegralMultiplicity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Orbit {
    std::vector<uint32_t> rep;  // numerators mod p^L of the seed point
    uint64_t size = 0;
    long index_exponent = 0;  // e with |g_r : stab(w)| = q^{2e}
};

struct OrbitData {
    std::vector<Orbit> orbits;
    uint64_t total_points = 0;
};

// Co-adjoint action of G = exp(p^r g) on the truncated dual (p^{-L} o/o)^n,
// acting through the generators exp(p^r Y_i)^{+-1}. Odd p only.
class CoadjointSpace {
   public:
    CoadjointSpace(const LieLattice& lat, const mpz_class& p, unsigned long r, unsigned long L,
                   uint64_t budget = kDefaultGridBudget);

    int dim() const { return n_; }
    uint64_t total() const { return total_; }
    uint64_t level_modulus() const { return pl_; }

    uint64_t encode(const std::vector<uint32_t>& pt) const;
    std::vector<uint32_t> decode(uint64_t code) const;

    // orbit of a seed under all generators; sorted point codes
    std::vector<uint64_t> orbit_of(const std::vector<uint32_t>& seed) const;

    // stabilizer-index exponent of a dual point on the scaled lattice
    long index_exponent(const std::vector<uint32_t>& pt) const;

    // partition of the whole truncated dual into orbits
    OrbitData all_orbits() const;

   private:
    LieLattice lat_;
    mpz_class p_;
    unsigned long r_, L_;
    int n_;
    uint64_t pl_ = 1, total_ = 1;
    std::vector<std::vector<uint64_t>> gens_;  // transposed action matrices mod p^L
};

// m(pi_omega, Ind_H^G(pi_eta)) = IN(omega, eta) / (|G.omega|^{1/2} |H.eta|^{1/2}).
// h_indices: positions of the h-basis inside the basis of g (h must be closed).
mpz_class induced_multiplicity(const LieLattice& lat, const std::vector<int>& h_indices,
                               const std::vector<uint32_t>& omega,
                               const std::vector<uint32_t>& eta, const mpz_class& p,
                               unsigned long r, unsigned long L,
                               uint64_t budget = kDefaultGridBudget);

// Direct tally of sum_{w | restriction to h vanishes} q^{-e(w)(1+s)} over the
// truncated dual at level L; counts[e] = N_e / q^e (certified integral).
std::map<long, mpz_class> truncated_dual_tally(const LieLattice& lat,
                                               const std::vector<int>& h_indices,
                                               const mpz_class& p, unsigned long r,
                                               unsigned long L,
                                               uint64_t budget = kDefaultGridBudget);

// Same tally assembled from orbits and multiplicities: sum over orbit reps of
// m(pi_omega, Ind(1)) at the orbit's dimension exponent.
std::map<long, mpz_class> multiplicity_tally(const LieLattice& lat,
                                             const std::vector<int>& h_indices, const mpz_class& p,
                                             unsigned long r, unsigned long L,
                                             uint64_t budget = kDefaultGridBudget);

}  // namespace zetarep
