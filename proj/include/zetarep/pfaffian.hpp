#pragma once

#include <set>
#include <vector>

#include "zetarep/lie_lattice.hpp"
#include "zetarep/lin_poly.hpp"
#include "zetarep/smith.hpp"

namespace zetarep {

struct RouteMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// F_k: sets of degree-k Pfaffians of the reduced commutator matrix, square
// roots of principal 2k x 2k minors with the h-variables set to zero.
// F_0 = {1} by convention.
struct PfaffianFamily {
    size_t nvars = 0;
    std::vector<std::vector<IntPoly>> F;  // F[k], k = 0..floor(n/2)

    // max over k >= 1 and f in F_k of -v_p(f(x)), clipped at 0
    long norm_exponent(const std::vector<mpq_class>& x, const mpz_class& p) const;
};

inline constexpr int kPfaffianSizeCap = 10;

// Pfaffian of the alternating form-valued submatrix indexed by rows (signed
// perfect-matching expansion).
IntPoly pfaffian(const std::vector<std::vector<LinForm>>& m, const std::vector<int>& rows);

// All degree-k Pfaffians over basis subsets; zero polynomials dropped,
// duplicates (up to sign) merged. Throws SizeLimit when n > 10.
PfaffianFamily pfaffian_family(const std::vector<std::vector<LinForm>>& reduced,
                               const SplitLattice& split);

// ---- stabilizer index ------------------------------------------------------

// nu profile of the commutator matrix evaluated at a point of the dual; the
// point has m+1 complement coordinates, h-coordinates vanish.
ValuationProfile evaluated_profile(const SplitLattice& split, const std::vector<mpq_class>& x,
                                   const mpz_class& p);

// Exponent e with |g : stab_g(w)|^{1/2} = q^e, from the Smith route; when
// `family` is non-null the Pfaffian-norm route is computed as well and the two
// must agree (RouteMismatch otherwise).
long index_of_form(const SplitLattice& split, const std::vector<mpq_class>& x, const mpz_class& p,
                   const PfaffianFamily* family = nullptr);

}  // namespace zetarep
