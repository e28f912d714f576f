#include "zetarep/oracle.hpp"

#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include <atomic>
#include <memory>
#include <sstream>

namespace zetarep {

std::string DirichletTally::to_json() const {
    nlohmann::ordered_json j;
    j["q"] = q.get_str();
    j["r"] = r;
    j["L"] = L;
    j["exact_up_to"] = exact_up_to;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : counts) arr.push_back({e, c.get_str()});
    j["coefficients"] = arr;
    return j.dump();
}

std::string DirichletTally::to_csv() const {
    std::ostringstream os;
    os << "e,count\n";
    for (const auto& [e, c] : counts) os << e << "," << c.get_str() << "\n";
    return os.str();
}

namespace {

struct IntEntry {
    int i, j;
    std::vector<mpz_class> coeff;  // length m+1, entry of the reduced matrix
};

// Sparse list of the nonzero upper-triangle entries of the reduced matrix.
std::vector<IntEntry> integer_entries(const SplitLattice& split) {
    auto reduced = split.reduced_commutator_matrix();
    const int n = split.rank(), m1 = split.m_plus_1();
    std::vector<IntEntry> entries;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (reduced[i][j].is_zero()) continue;
            IntEntry e;
            e.i = i;
            e.j = j;
            e.coeff.resize(m1);
            for (int k = 0; k < m1; ++k) e.coeff[k] = reduced[i][j].c[k];
            entries.push_back(std::move(e));
        }
    return entries;
}

uint64_t grid_size_checked(const ZetaJob& job) {
    const int m1 = job.slat.m_plus_1();
    mpz_class total = 1;
    mpz_class pl = pow_int(job.p, job.L);
    for (int k = 0; k < m1; ++k) total *= pl;
    if (total > mpz_class(static_cast<unsigned long>(job.budget)))
        throw OverflowGuard("grid of " + total.get_str() + " points exceeds budget " +
                            std::to_string(job.budget) + " (use --allow-large)");
    if (!total.fits_ulong_p()) throw OverflowGuard("grid size does not fit a machine word");
    return mpz_get_ui(total.get_mpz_t());
}

// Exact per-point index via rational Smith reduction.
struct ExactPointEval {
    const mpz_class& p;
    long L;
    const std::vector<IntEntry>& entries;
    int n, m1;

    // returns (e, f1_ok); a = integer numerators, x = a / p^L
    std::pair<long, bool> operator()(const std::vector<mpz_class>& a) const {
        std::vector<std::vector<mpq_class>> mat(n, std::vector<mpq_class>(n, mpq_class(0)));
        long lam_f1 = std::numeric_limits<long>::min();
        for (const auto& en : entries) {
            mpz_class v = 0;
            for (int k = 0; k < m1; ++k)
                if (en.coeff[k] != 0) v += en.coeff[k] * a[k];
            if (v == 0) continue;
            mat[en.i][en.j] = mpq_class(v);
            mat[en.j][en.i] = mpq_class(-v);
            lam_f1 = std::max(lam_f1, L - valuation_int(v, p));
        }
        long lam_x = 0;
        for (int k = 0; k < m1; ++k)
            if (a[k] != 0) lam_x = std::max(lam_x, L - valuation_int(a[k], p));
        auto prof = smith_valuations(std::move(mat), p);
        long s = 0;
        for (long nu : prof.nu)
            if (nu != kValInf) s += std::max(L - nu, 0L);
        if (s % 2 != 0) throw RouteMismatch("grid point with odd negative part");
        bool f1_ok = (lam_x == 0) || (lam_f1 == lam_x);
        return {s / 2, f1_ok};
    }
};

void decode_point(uint64_t t, uint64_t pl, int m1, std::vector<mpz_class>& a) {
    for (int k = 0; k < m1; ++k) {
        a[k] = static_cast<unsigned long>(t % pl);
        t /= pl;
    }
}

}  // namespace

GridTally tally_grid_serial(const ZetaJob& job) {
    const uint64_t total = grid_size_checked(job);
    const int n = job.slat.rank(), m1 = job.slat.m_plus_1();
    const uint64_t pl = mpz_get_ui(pow_int(job.p, job.L).get_mpz_t());
    auto entries = integer_entries(job.slat);
    ExactPointEval eval{job.p, static_cast<long>(job.L), entries, n, m1};

    std::unique_ptr<PfaffianFamily> family;
    if (job.check_routes)
        family = std::make_unique<PfaffianFamily>(
            pfaffian_family(job.slat.reduced_commutator_matrix(), job.slat));

    GridTally g;
    g.point_counts.assign(static_cast<size_t>(job.L) * n + 1, 0);
    std::vector<mpz_class> a(m1);
    std::vector<mpq_class> x(m1);
    mpq_class plq(pow_int(job.p, job.L));
    for (uint64_t t = 0; t < total; ++t) {
        decode_point(t, pl, m1, a);
        auto [e, ok] = eval(a);
        if (family) {
            for (int k = 0; k < m1; ++k) x[k] = mpq_class(a[k]) / plq;
            long e_pf = family->norm_exponent(x, job.p);
            if (e_pf != e) throw RouteMismatch("oracle grid: route disagreement");
        }
        if (static_cast<size_t>(e) >= g.point_counts.size()) g.point_counts.resize(e + 1, 0);
        ++g.point_counts[e];
        g.f1_norm_equals_coordinate_norm &= ok;
        ++g.points;
    }
    return g;
}

GridTally tally_grid_parallel(const ZetaJob& job) {
    const uint64_t total = grid_size_checked(job);
    const int n = job.slat.rank(), m1 = job.slat.m_plus_1();
    const int cap = static_cast<int>(job.L);
    if (!SmithModKernel::representable(job.p, cap + 1)) return tally_grid_serial(job);

    auto entries = integer_entries(job.slat);
    // int64 fast path needs small coefficients; fall back otherwise
    std::vector<std::vector<int64_t>> coeff64(entries.size());
    const uint64_t pl = mpz_get_ui(pow_int(job.p, job.L).get_mpz_t());
    for (size_t idx = 0; idx < entries.size(); ++idx) {
        coeff64[idx].resize(m1);
        for (int k = 0; k < m1; ++k) {
            const mpz_class& c = entries[idx].coeff[k];
            if (!c.fits_slong_p() || (mpz_cmpabs_ui(c.get_mpz_t(), 1u << 20) > 0))
                return tally_grid_serial(job);
            coeff64[idx][k] = mpz_get_si(c.get_mpz_t());
        }
    }
    // entry accumulation m1 * maxcoeff * p^L must stay well inside int64
    if (mpz_class(m1) * (1u << 20) * mpz_class(static_cast<unsigned long>(pl)) >
        mpz_class(1) << 61)
        return tally_grid_serial(job);

    const uint64_t p64 = mpz_get_ui(job.p.get_mpz_t());
    SmithModKernel kernel(p64, cap);
    const uint64_t mod = kernel.modulus();

    int nthreads = 1;
#ifdef _OPENMP
    nthreads = job.workers > 0 ? job.workers : omp_get_max_threads();
#endif
    const size_t emax_guess = static_cast<size_t>(job.L) * n + 1;
    std::vector<std::vector<uint64_t>> local(nthreads, std::vector<uint64_t>(emax_guess, 0));
    std::vector<uint8_t> local_f1(nthreads, 1);
    std::atomic<bool> odd_negative{false};

#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
    {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        std::vector<uint64_t> a(m1), mat(static_cast<size_t>(n) * n);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (int64_t t = 0; t < static_cast<int64_t>(total); ++t) {
            uint64_t rest = static_cast<uint64_t>(t);
            for (int k = 0; k < m1; ++k) {
                a[k] = rest % pl;
                rest /= pl;
            }
            std::fill(mat.begin(), mat.end(), 0);
            int lam_f1 = std::numeric_limits<int>::min();
            for (size_t idx = 0; idx < entries.size(); ++idx) {
                int64_t v = 0;
                for (int k = 0; k < m1; ++k)
                    if (coeff64[idx][k] != 0) v += coeff64[idx][k] * static_cast<int64_t>(a[k]);
                uint64_t vm = static_cast<uint64_t>(((v % static_cast<int64_t>(mod)) +
                                                    static_cast<int64_t>(mod))) % mod;
                if (v != 0) {
                    int vv = (v % static_cast<int64_t>(pl) == 0)
                                 ? cap  // valuation >= L, clipped
                                 : [&] {
                                       int64_t w = v < 0 ? -v : v;
                                       int c = 0;
                                       while (w % static_cast<int64_t>(p64) == 0 && c < cap) {
                                           w /= static_cast<int64_t>(p64);
                                           ++c;
                                       }
                                       return c;
                                   }();
                    lam_f1 = std::max(lam_f1, cap - vv);
                }
                mat[entries[idx].i * n + entries[idx].j] = vm;
                mat[entries[idx].j * n + entries[idx].i] = (mod - vm) % mod;
            }
            int lam_x = 0;
            for (int k = 0; k < m1; ++k)
                if (a[k] != 0) lam_x = std::max(lam_x, cap - kernel.val(a[k] % mod));
            auto nu = kernel.valuations(mat, n);
            long s = 0;
            for (int v : nu) s += std::max(cap - v, 0);
            if (s % 2 != 0) odd_negative = true;
            size_t e = static_cast<size_t>(s / 2);
            if (e >= local[tid].size()) local[tid].resize(e + 1, 0);
            ++local[tid][e];
            if (lam_x > 0 && lam_f1 != lam_x) local_f1[tid] = 0;
        }
    }
    if (odd_negative) throw RouteMismatch("grid point with odd negative part");

    GridTally g;
    g.points = total;
    size_t width = 0;
    for (auto& v : local) width = std::max(width, v.size());
    g.point_counts.assign(width, 0);
    for (int tid = 0; tid < nthreads; ++tid) {
        g.f1_norm_equals_coordinate_norm &= (local_f1[tid] != 0);
        for (size_t e = 0; e < local[tid].size(); ++e) g.point_counts[e] += local[tid][e];
    }
    return g;
}

DirichletTally assemble_tally(const ZetaJob& job, const GridTally& grid) {
    DirichletTally tally;
    tally.q = job.p;
    tally.r = job.r;
    tally.L = job.L;
    // eps = 0 certifies ||F_1(x)|| = ||x|| for every x (the degree-1 forms
    // span the saturated coordinate lattice), so points beyond level L have
    // index exponent > L; otherwise the bound degrades by eps.
    long eps = job.slat.f1_content_epsilon(job.p);
    if (eps == 0 && !grid.f1_norm_equals_coordinate_norm)
        throw RouteMismatch("F_1 content is trivial but a sampled point violated norm equality");
    tally.exact_up_to = static_cast<long>(job.L) - eps;
    const long rm1 = static_cast<long>(job.r) * job.slat.m_plus_1();
    for (size_t e = 0; e < grid.point_counts.size(); ++e) {
        if (grid.point_counts[e] == 0) continue;
        mpz_class n_e(static_cast<unsigned long>(grid.point_counts[e]));
        long exp = rm1 - static_cast<long>(e);
        if (exp >= 0) {
            tally.counts[e] = n_e * pow_int(job.p, exp);
        } else {
            mpz_class d = pow_int(job.p, -exp), qt, rem;
            mpz_fdiv_qr(qt.get_mpz_t(), rem.get_mpz_t(), n_e.get_mpz_t(), d.get_mpz_t());
            if (rem == 0)
                tally.counts[e] = qt;
            else if (static_cast<long>(e) <= tally.exact_up_to)
                throw RouteMismatch("certified coefficient is not an integer");
            // uncertified fractional coefficients are dropped
        }
    }
    return tally;
}

DirichletTally bruteforce_zeta(const ZetaJob& job) {
    if (!job.slat.relatively_fab())
        throw RelativeFAbViolation("bruteforce_zeta: split is not relatively FAb");
    GridTally grid = job.serial_reference ? tally_grid_serial(job) : tally_grid_parallel(job);
    return assemble_tally(job, grid);
}

}  // namespace zetarep
