#pragma once

#include <cstdint>
#include <vector>

#include "zetarep/lie_lattice.hpp"
#include "zetarep/pfaffian.hpp"
#include "zetarep/tally.hpp"

namespace zetarep {

struct OverflowGuard : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr uint64_t kDefaultGridBudget = 10'000'000;

struct ZetaJob {
    SplitLattice slat;
    mpz_class p;
    unsigned long r = 1;
    unsigned long L = 1;
    uint64_t budget = kDefaultGridBudget;
    int workers = 0;              // 0 = library default
    bool check_routes = false;    // run the symbolic Pfaffian route per point
    bool serial_reference = false;

    ZetaJob(SplitLattice s, mpz_class prime, unsigned long level_r, unsigned long trunc_L)
        : slat(std::move(s)), p(std::move(prime)), r(level_r), L(trunc_L) {
        if (!permissible_level(p, r)) throw ParamError("ZetaJob: r not permissible for p");
        if (L < 1) throw ParamError("ZetaJob: L >= 1 required");
    }
};

// Raw per-exponent point counts N_e over the grid (f/o)^{m+1} at level <= L,
// plus whether ||F_1(x)|| = ||x|| held at every sampled point.
struct GridTally {
    std::vector<uint64_t> point_counts;  // index e
    bool f1_norm_equals_coordinate_norm = true;
    uint64_t points = 0;
};

// Discrete form of the integral formula: zeta(s) = q^{r(m+1)} * sum over the
// truncated dual of q^{-e(x)(1+s)}; counts[e] = N_e * q^{r(m+1)-e}.
DirichletTally bruteforce_zeta(const ZetaJob& job);

// Grid enumeration kernels; the serial one is the exact-arithmetic reference,
// the parallel one uses the mod-p^K Smith kernel under OpenMP.
GridTally tally_grid_serial(const ZetaJob& job);
GridTally tally_grid_parallel(const ZetaJob& job);

// Tally -> Dirichlet coefficients with certification bound.
DirichletTally assemble_tally(const ZetaJob& job, const GridTally& grid);

}  // namespace zetarep
