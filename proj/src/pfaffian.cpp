#include "zetarep/pfaffian.hpp"

#include <algorithm>

namespace zetarep {

IntPoly pfaffian(const std::vector<std::vector<LinForm>>& m, const std::vector<int>& rows) {
    const size_t k2 = rows.size();
    if (k2 % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
    const size_t nvars = m.empty() ? 0 : m[0][0].c.size();
    if (k2 == 0) return IntPoly::constant(nvars, 1);

    // pf(A) = sum_j (-1)^j A_{0j} pf(A without rows/cols 0, j)
    std::vector<int> rest(rows.begin() + 1, rows.end());
    IntPoly acc(nvars);
    for (size_t j = 0; j < rest.size(); ++j) {
        const LinForm& a = m[rows[0]][rest[j]];
        if (a.is_zero()) continue;
        std::vector<int> sub;
        sub.reserve(k2 - 2);
        for (size_t t = 0; t < rest.size(); ++t)
            if (t != j) sub.push_back(rest[t]);
        IntPoly term = IntPoly::from_linform(a) * pfaffian(m, sub);
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

PfaffianFamily pfaffian_family(const std::vector<std::vector<LinForm>>& reduced,
                               const SplitLattice& split) {
    const int n = split.rank();
    if (n > kPfaffianSizeCap)
        throw SizeLimit("pfaffian_family: symbolic route capped at rank 10");
    PfaffianFamily fam;
    fam.nvars = static_cast<size_t>(split.m_plus_1());
    fam.F.resize(static_cast<size_t>(n / 2) + 1);
    fam.F[0].push_back(IntPoly::constant(fam.nvars, 1));

    for (int k = 1; 2 * k <= n; ++k) {
        std::set<IntPoly> seen;
        std::vector<int> subset(2 * k);
        // iterate over all 2k-subsets of {0..n-1}
        std::vector<int> idx(2 * k);
        for (int i = 0; i < 2 * k; ++i) idx[i] = i;
        while (true) {
            IntPoly pf = pfaffian(reduced, idx).sign_normalized();
            if (!pf.is_zero()) seen.insert(pf);
            int pos = 2 * k - 1;
            while (pos >= 0 && idx[pos] == n - 2 * k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int t = pos + 1; t < 2 * k; ++t) idx[t] = idx[t - 1] + 1;
        }
        fam.F[k].assign(seen.begin(), seen.end());
    }
    return fam;
}

long PfaffianFamily::norm_exponent(const std::vector<mpq_class>& x, const mpz_class& p) const {
    long e = 0;
    for (size_t k = 1; k < F.size(); ++k)
        for (const IntPoly& f : F[k]) {
            mpq_class v = f.eval(x);
            if (v == 0) continue;
            e = std::max(e, -valuation(v, p));
        }
    return e;
}

ValuationProfile evaluated_profile(const SplitLattice& split, const std::vector<mpq_class>& x,
                                   const mpz_class& p) {
    if (x.size() != static_cast<size_t>(split.m_plus_1()))
        throw std::invalid_argument("evaluated_profile: coordinate count != m+1");
    auto reduced = split.reduced_commutator_matrix();
    const int n = split.rank();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = reduced[i][j].eval(x);
    return smith_valuations(std::move(a), p);
}

long index_of_form(const SplitLattice& split, const std::vector<mpq_class>& x, const mpz_class& p,
                   const PfaffianFamily* family) {
    ValuationProfile prof = evaluated_profile(split, x, p);
    long s = prof.negative_part_sum();
    if (s % 2 != 0) throw RouteMismatch("index_of_form: odd negative part, pairing broken");
    long e = s / 2;
    if (family != nullptr) {
        long e_pf = family->norm_exponent(x, p);
        if (e_pf != e)
            throw RouteMismatch("index_of_form: Pfaffian route " + std::to_string(e_pf) +
                                " != Smith route " + std::to_string(e));
    }
    return e;
}

}  // namespace zetarep
