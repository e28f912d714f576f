// Benchmark: serial exact-arithmetic grid tally vs the OpenMP mod-p^K kernel.

#include <chrono>
#include <iostream>

#include "zetarep/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace zetarep;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::string family = argc > 1 ? argv[1] : "gl_parabolic";
    long p = argc > 2 ? std::stol(argv[2]) : 3;
    unsigned long L = argc > 3 ? std::stoul(argv[3]) : 2;

    FamilyParams params;
    params.family = family;
    params.n = 4;
    params.t = 2;
    if (family == "gl_borel") params.n = 3;
    if (family == "gl_division") {
        params.n = 1;
        params.d = 2;
    }
    SplitLattice slat = build_family(params, mpz_class(p));
    ZetaJob job(slat, mpz_class(p), 1, L);

    std::cout << "family=" << family << " p=" << p << " L=" << L << " rank=" << slat.rank()
              << " m+1=" << slat.m_plus_1() << "\n";

    auto t0 = std::chrono::steady_clock::now();
    GridTally serial = tally_grid_serial(job);
    auto t1 = std::chrono::steady_clock::now();
    GridTally parallel = tally_grid_parallel(job);
    auto t2 = std::chrono::steady_clock::now();

    bool equal = serial.point_counts == parallel.point_counts &&
                 serial.f1_norm_equals_coordinate_norm == parallel.f1_norm_equals_coordinate_norm;
    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << "points=" << serial.points << "\n";
    std::cout << "serial reference: " << ts << " s\n";
    std::cout << "parallel kernel (" << threads << " threads): " << tp << " s\n";
    std::cout << "speedup: " << (tp > 0 ? ts / tp : 0.0) << "\n";
    std::cout << "tallies identical: " << (equal ? "yes" : "NO") << "\n";
    return equal ? 0 : 1;
}
