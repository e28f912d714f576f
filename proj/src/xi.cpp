#include "zetarep/xi.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "zetarep/valuation.hpp"

namespace zetarep {

namespace {

long dot(const std::vector<long>& c, const std::vector<long>& v) {
    long s = 0;
    for (size_t i = 0; i < c.size(); ++i) s += c[i] * v[i];
    return s;
}

}  // namespace

void validate_spec(const XiSpec& spec) {
    const size_t vars = 1 + static_cast<size_t>(spec.u);
    if (spec.u < 1 || spec.d < 1) throw AssumptionViolation("xi: u, d >= 1");
    if (spec.lambda.size() != static_cast<size_t>(spec.d + 1) ||
        spec.beta.size() != static_cast<size_t>(spec.d + 1) ||
        spec.eps.size() != static_cast<size_t>(spec.d + 1) ||
        spec.delta.size() != static_cast<size_t>(spec.d + 1))
        throw AssumptionViolation("xi: need d+1 forms and shifts");
    for (const auto& f : spec.lambda)
        if (f.size() != vars) throw AssumptionViolation("xi: lambda arity mismatch");
    for (const auto& f : spec.beta)
        if (f.size() != vars) throw AssumptionViolation("xi: beta arity mismatch");
    if (spec.N < 0) throw AssumptionViolation("xi: N >= 0");
    // (i) lambda_0 strictly negative on N_0^{1+u} \ {0}: negative on the generators
    for (size_t i = 0; i < vars; ++i)
        if (spec.lambda[0][i] >= 0)
            throw AssumptionViolation("xi: lambda_0 not strictly negative on unit vector " +
                                      std::to_string(i));
    // (ii) beta_0 = 0
    for (long c : spec.beta[0])
        if (c != 0) throw AssumptionViolation("xi: beta_0 must vanish");
    // delta_0 = 0
    if (spec.delta[0] != 0) throw AssumptionViolation("xi: delta_0 must vanish");
    // (iii) some beta_{j0} = a*l with a >= 1
    bool found = false;
    for (int j = 1; j <= spec.d && !found; ++j) {
        if (spec.beta[j][0] < 1) continue;
        bool pure = true;
        for (size_t i = 1; i < vars; ++i) pure = pure && spec.beta[j][i] == 0;
        found = pure;
    }
    if (!found) throw AssumptionViolation("xi: no beta_{j0}(l,n) = a l with a >= 1");
}

// ---- truncation oracle -------------------------------------------------------

namespace {

std::pair<long, long> point_exponents(const XiSpec& spec, const std::vector<long>& v) {
    long qmin = dot(spec.lambda[0], v) + spec.eps[0];
    long tmin = dot(spec.beta[0], v) + spec.delta[0];
    for (int j = 1; j <= spec.d; ++j) {
        qmin = std::min(qmin, dot(spec.lambda[j], v) + spec.eps[j]);
        tmin = std::min(tmin, dot(spec.beta[j], v) + spec.delta[j]);
    }
    return {-qmin, -tmin};
}

}  // namespace

std::map<std::pair<long, long>, mpz_class> xi_truncate(const XiSpec& spec, long k_min, long k_max,
                                                       long e_max) {
    validate_spec(spec);
    const int u = spec.u;
    // j0 with beta_{j0} = a l bounds l from below on {e <= e_max}
    long a = 0, dj0 = 0;
    for (int j = 1; j <= spec.d; ++j) {
        bool pure = spec.beta[j][0] >= 1;
        for (int i = 1; i <= u && pure; ++i) pure = spec.beta[j][i] == 0;
        if (pure) {
            a = spec.beta[j][0];
            dj0 = spec.delta[j];
            break;
        }
    }
    if (a < 1) throw AssumptionViolation("xi: validated spec lost its beta_{j0} = a l form");
    // e >= -(a l + delta_{j0})  =>  l >= -(e_max + delta_{j0}) / a
    long l_lo = -(e_max + dj0);
    l_lo = (l_lo >= 0) ? (l_lo + a - 1) / a : -((-l_lo) / a);
    // k >= -(lambda_0(l,n) + eps_0) and lambda_0 has negative coefficients:
    // |c_0| l <= k_max + eps_0 - sum_i |c_i| N gives the upper bound on l
    const auto& l0 = spec.lambda[0];
    long budget = k_max + spec.eps[0];
    long base = 0;
    for (int i = 1; i <= u; ++i) base += -l0[i] * spec.N;
    long l_hi_num = budget - base;
    long c0 = -l0[0];
    long l_hi = (l_hi_num >= 0) ? l_hi_num / c0 : -((-l_hi_num + c0 - 1) / c0);

    std::map<std::pair<long, long>, mpz_class> table;
    std::vector<long> v(1 + u);
    std::function<void(int, long)> rec = [&](int i, long used) {
        if (i > u) {
            auto [k, e] = point_exponents(spec, v);
            if (k >= k_min && k <= k_max && e >= 0 && e <= e_max) ++table[{k, e}];
            return;
        }
        // remaining budget for -lambda_0 contributions
        long ci = -l0[i];
        long rest = 0;
        for (int i2 = i + 1; i2 <= u; ++i2) rest += -l0[i2] * spec.N;
        long cap_num = budget - used - rest;
        if (cap_num < 0) return;
        long hi = cap_num / ci;  // ci * n_i <= cap_num
        for (long n = spec.N; n <= hi; ++n) {
            v[i] = n;
            rec(i + 1, used + ci * n);
        }
    };
    for (long l = l_lo; l <= l_hi; ++l) {
        v[0] = l;
        long used = -l0[0] * l;
        rec(1, used);
    }
    return table;
}

mpz_class xi_coefficient(const XiSpec& spec, long k, long e) {
    if (e < 0) return 0;
    auto tab = xi_truncate(spec, k, k, e);
    auto it = tab.find({k, e});
    return it == tab.end() ? mpz_class(0) : it->second;
}

// ---- rational form via homogenized cones --------------------------------------

namespace {

using Ray = std::vector<mpz_class>;  // length D = 2 + u, coordinate 0 = x0

struct AffForm {
    std::vector<long> coef;  // 1+u coefficients
    long cst = 0;
    long eval_hom(const Ray& r) const {  // on (x0, v)
        mpz_class s = cst * r[0];
        for (size_t i = 0; i < coef.size(); ++i) s += coef[i] * r[i + 1];
        if (!s.fits_slong_p()) throw SizeLimit("xi: weight overflow");
        return mpz_get_si(s.get_mpz_t());
    }
};

struct RegionSystem {
    std::vector<AffForm> ge;  // constraints f(v) >= 0, homogenized with cst * x0
    AffForm qexp, texp;
};

size_t rank_of(const std::vector<Ray>& rays) {
    if (rays.empty()) return 0;
    std::vector<std::vector<mpq_class>> m;
    for (const auto& r : rays) {
        std::vector<mpq_class> row;
        for (const auto& x : r) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    size_t rows = m.size(), cols = m[0].size(), rk = 0;
    for (size_t c = 0; c < cols && rk < rows; ++c) {
        size_t piv = rk;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rk], m[piv]);
        for (size_t i = rk + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[rk][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[rk][j];
        }
        ++rk;
    }
    return rk;
}

// 1-dimensional integer kernel of the rows, or empty.
Ray kernel_dir(const std::vector<const AffForm*>& rows, size_t D) {
    std::vector<std::vector<mpq_class>> m;
    for (const auto* f : rows) {
        std::vector<mpq_class> row(D);
        row[0] = f->cst;
        for (size_t i = 0; i + 1 < D; ++i) row[i + 1] = f->coef[i];
        m.push_back(std::move(row));
    }
    // row-reduce, find pivot columns
    size_t rows_n = m.size(), rk = 0;
    std::vector<long> pivot_col;
    for (size_t c = 0; c < D && rk < rows_n; ++c) {
        size_t piv = rk;
        while (piv < rows_n && m[piv][c] == 0) ++piv;
        if (piv == rows_n) continue;
        std::swap(m[rk], m[piv]);
        for (size_t i = 0; i < rows_n; ++i) {
            if (i == rk || m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[rk][c];
            for (size_t j = 0; j < D; ++j) m[i][j] -= f * m[rk][j];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++rk;
    }
    if (rk != D - 1) return {};
    // free column: the one not pivotal
    std::vector<bool> is_piv(D, false);
    for (long c : pivot_col) is_piv[c] = true;
    size_t free_c = 0;
    while (free_c < D && is_piv[free_c]) ++free_c;
    std::vector<mpq_class> x(D, 0);
    x[free_c] = 1;
    for (size_t i = 0; i < rk; ++i) x[pivot_col[i]] = -m[i][free_c] / m[i][pivot_col[i]];
    // clear denominators, divide content
    mpz_class lcm = 1;
    for (const auto& xi : x) lcm = lcm * xi.get_den() / gcd(lcm, mpz_class(xi.get_den()));
    Ray r(D);
    mpz_class content = 0;
    for (size_t i = 0; i < D; ++i) {
        mpq_class scaled = x[i] * mpq_class(lcm);
        r[i] = scaled.get_num();
        content = gcd(content, r[i]);
    }
    if (content > 1)
        for (auto& c : r) c /= content;
    return r;
}

std::vector<Ray> extreme_rays(const RegionSystem& sys, size_t D) {
    const size_t m = sys.ge.size();
    std::set<Ray> found;
    std::vector<int> subset;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (subset.size() == D - 1) {
            std::vector<const AffForm*> rows;
            for (int i : subset) rows.push_back(&sys.ge[i]);
            Ray r = kernel_dir(rows, D);
            if (r.empty()) return;
            // orient: all constraints nonnegative on r or on -r
            auto feasible = [&](const Ray& v) {
                for (const auto& f : sys.ge)
                    if (f.eval_hom(v) < 0) return false;
                return true;
            };
            Ray neg(D);
            for (size_t i = 0; i < D; ++i) neg[i] = -r[i];
            Ray cand;
            if (feasible(r)) cand = r;
            if (feasible(neg)) {
                if (!cand.empty()) return;  // a line; cone not pointed here
                cand = neg;
            }
            if (cand.empty()) return;
            // extremality: tight constraints span rank D-1
            std::vector<Ray> tight;
            for (const auto& f : sys.ge)
                if (f.eval_hom(cand) == 0) {
                    Ray row(D);
                    row[0] = f.cst;
                    for (size_t i = 0; i + 1 < D; ++i) row[i + 1] = f.coef[i];
                    tight.push_back(std::move(row));
                }
            if (rank_of(tight) == D - 1) found.insert(cand);
            return;
        }
        if (start >= m) return;
        for (size_t i = start; i < m; ++i) {
            subset.push_back(static_cast<int>(i));
            rec(i + 1);
            subset.pop_back();
        }
    };
    rec(0);
    return {found.begin(), found.end()};
}

// pulling triangulation at the lowest-index ray; returns ray index subsets
void triangulate(const std::vector<Ray>& rays, const std::vector<int>& idx,
                 const RegionSystem& sys, std::vector<std::vector<int>>& out) {
    if (idx.empty()) {
        out.push_back({});
        return;
    }
    std::vector<Ray> rset;
    for (int i : idx) rset.push_back(rays[i]);
    size_t rk = rank_of(rset);
    if (idx.size() == rk) {
        out.push_back(idx);
        return;
    }
    int apex = idx[0];
    std::set<std::vector<int>> facets;
    for (const auto& f : sys.ge) {
        if (f.eval_hom(rays[apex]) <= 0) continue;
        std::vector<int> tight;
        for (int i : idx)
            if (f.eval_hom(rays[i]) == 0) tight.push_back(i);
        if (tight.empty()) continue;
        std::vector<Ray> tset;
        for (int i : tight) tset.push_back(rays[i]);
        if (rank_of(tset) == rk - 1) facets.insert(tight);
    }
    for (const auto& facet : facets) {
        std::vector<std::vector<int>> sub;
        triangulate(rays, facet, sys, sub);
        for (auto& s : sub) {
            s.push_back(apex);
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
    }
    if (out.size() > 512) throw SizeLimit("xi: triangulation too large");
}

// integer points of the half-open parallelepiped { sum a_i r_i : 0 <= a_i < 1 }
std::vector<Ray> fpp_points(const std::vector<Ray>& gens, size_t D) {
    std::vector<Ray> pts;
    const size_t k = gens.size();
    if (k == 0) {
        pts.push_back(Ray(D, 0));
        return pts;
    }
    // pick k independent coordinate rows
    std::vector<size_t> sel;
    {
        std::vector<std::vector<mpq_class>> m;
        for (size_t d0 = 0; d0 < D && sel.size() < k; ++d0) {
            std::vector<std::vector<mpq_class>> trial = m;
            std::vector<mpq_class> row;
            for (const auto& g : gens) row.emplace_back(g[d0]);
            trial.push_back(row);
            std::vector<Ray> rr;
            for (const auto& tr : trial) {
                Ray v(k);
                for (size_t j = 0; j < k; ++j) v[j] = tr[j].get_num();  // integral here
                rr.push_back(v);
            }
            if (rank_of(rr) == trial.size()) {
                m = std::move(trial);
                sel.push_back(d0);
            }
        }
        if (sel.size() != k) throw SizeLimit("xi: dependent parallelepiped generators");
    }
    // box of the selected coordinates
    std::vector<long> lo(k, 0), hi(k, 0);
    for (size_t a = 0; a < k; ++a) {
        mpz_class l = 0, h = 0;
        for (const auto& g : gens) {
            if (g[sel[a]] < 0) l += g[sel[a]];
            if (g[sel[a]] > 0) h += g[sel[a]];
        }
        lo[a] = mpz_get_si(l.get_mpz_t());
        hi[a] = mpz_get_si(h.get_mpz_t());
    }
    // solve R_sel * alpha = w for each integer w in the box
    std::vector<long> w(k);
    std::function<void(size_t)> rec = [&](size_t a) {
        if (a == k) {
            // solve k x k system over Q
            std::vector<std::vector<mpq_class>> m(k, std::vector<mpq_class>(k + 1));
            for (size_t i = 0; i < k; ++i) {
                for (size_t j = 0; j < k; ++j) m[i][j] = mpq_class(gens[j][sel[i]]);
                m[i][k] = w[i];
            }
            for (size_t c = 0, r0 = 0; c < k && r0 < k; ++c) {
                size_t piv = r0;
                while (piv < k && m[piv][c] == 0) ++piv;
                if (piv == k) return;  // singular: cannot happen (independent)
                std::swap(m[r0], m[piv]);
                for (size_t i = 0; i < k; ++i) {
                    if (i == r0 || m[i][c] == 0) continue;
                    mpq_class f = m[i][c] / m[r0][c];
                    for (size_t j = c; j <= k; ++j) m[i][j] -= f * m[r0][j];
                }
                ++r0;
            }
            std::vector<mpq_class> alpha(k);
            for (size_t i = 0; i < k; ++i) alpha[i] = m[i][k] / m[i][i];
            for (const auto& al : alpha)
                if (al < 0 || al >= 1) return;
            // v = sum alpha_j gens_j must be integral in all coordinates
            Ray v(D, 0);
            for (size_t d0 = 0; d0 < D; ++d0) {
                mpq_class s = 0;
                for (size_t j = 0; j < k; ++j) s += alpha[j] * mpq_class(gens[j][d0]);
                if (s.get_den() != 1) return;
                v[d0] = s.get_num();
            }
            pts.push_back(std::move(v));
            return;
        }
        for (long x = lo[a]; x <= hi[a]; ++x) {
            w[a] = x;
            rec(a + 1);
        }
    };
    rec(0);
    return pts;
}

// x0-degree-1 slice of the generating function of the closed simplicial cone
BiRational cone_slice(const std::vector<Ray>& gens, const RegionSystem& sys, size_t D) {
    auto pts = fpp_points(gens, D);
    QTPoly num1, num0, ray1;
    std::vector<DenFactor> factors;
    for (const auto& g : gens) {
        long a = sys.qexp.eval_hom(g), b = sys.texp.eval_hom(g);
        if (g[0] == 0) {
            if (b < 0 || (b == 0 && a <= 0))
                throw AssumptionViolation("xi: non-convergent ray weight (divergent series)");
            factors.push_back({a, b, 1});
        } else if (g[0] == 1) {
            ray1 += QTPoly::monomial(a, b, 1);
        }
        // rays with x0-component >= 2 cannot contribute to the slice
    }
    for (const auto& f : pts) {
        long a = sys.qexp.eval_hom(f), b = sys.texp.eval_hom(f);
        if (f[0] == 0)
            num0 += QTPoly::monomial(a, b, 1);
        else if (f[0] == 1)
            num1 += QTPoly::monomial(a, b, 1);
    }
    QTPoly num = num1 + num0 * ray1;
    if (num.is_zero()) return BiRational();
    return BiRational(std::move(num), 0, 0, factors);
}

BiRational region_gf(const RegionSystem& sys, size_t D) {
    {
        // pointedness: the homogeneous constraint rows must have full rank,
        // otherwise the ray enumeration below would silently drop a line
        std::vector<Ray> rows;
        for (const auto& f : sys.ge) {
            Ray row(D);
            row[0] = f.cst;
            for (size_t i = 0; i + 1 < D; ++i) row[i + 1] = f.coef[i];
            rows.push_back(std::move(row));
        }
        if (rank_of(rows) != D)
            throw AssumptionViolation("xi: region cone is not pointed");
    }
    auto rays = extreme_rays(sys, D);
    std::vector<int> all(rays.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> raw;
    triangulate(rays, all, sys, raw);
    std::set<std::vector<int>> dedup(raw.begin(), raw.end());
    std::vector<std::vector<int>> pieces(dedup.begin(), dedup.end());
    if (pieces.size() > 16) throw SizeLimit("xi: too many cone pieces");

    // inclusion-exclusion over the fan: intersections are common-ray faces
    std::map<std::vector<int>, long> coeff;
    const size_t M = pieces.size();
    for (size_t mask = 1; mask < (size_t(1) << M); ++mask) {
        std::vector<int> inter;
        bool first = true;
        for (size_t i = 0; i < M; ++i) {
            if (!(mask & (size_t(1) << i))) continue;
            if (first) {
                inter = pieces[i];
                first = false;
            } else {
                std::vector<int> tmp;
                std::set_intersection(inter.begin(), inter.end(), pieces[i].begin(),
                                      pieces[i].end(), std::back_inserter(tmp));
                inter = std::move(tmp);
            }
        }
        coeff[inter] += (__builtin_popcountll(mask) % 2 == 1) ? 1 : -1;
    }
    BiRational total;
    for (const auto& [face, c] : coeff) {
        if (c == 0) continue;
        std::vector<Ray> gens;
        for (int i : face) gens.push_back(rays[i]);
        BiRational part = cone_slice(gens, sys, D);
        if (part.is_zero()) continue;
        BiRational scaled = BiRational::monomial(0, 0, c) * part;
        total = total.is_zero() ? scaled : (total + scaled);
    }
    return total;
}

XiSpec shifted_to_zero(const XiSpec& spec) {
    XiSpec s = spec;
    if (spec.N == 0) return s;
    std::vector<long> shift(1 + spec.u, 0);
    for (int i = 1; i <= spec.u; ++i) shift[i] = spec.N;
    for (int j = 0; j <= spec.d; ++j) {
        s.eps[j] += dot(spec.lambda[j], shift);
        s.delta[j] += dot(spec.beta[j], shift);
    }
    s.N = 0;
    return s;
}

// region (j, k, sgn): the Q-min is attained first at j, the t-min first at k,
// and l >= 0 or l <= -1 according to sgn
RegionSystem build_region_system(const XiSpec& spec, int j, int k, int sgn) {
    RegionSystem sys;
    for (int i = 0; i <= spec.d; ++i) {
        if (i == j) continue;
        AffForm f;
        f.coef.resize(1 + spec.u);
        for (int v = 0; v <= spec.u; ++v) f.coef[v] = spec.lambda[i][v] - spec.lambda[j][v];
        f.cst = spec.eps[i] - spec.eps[j] - (i < j ? 1 : 0);
        sys.ge.push_back(std::move(f));
    }
    for (int i = 0; i <= spec.d; ++i) {
        if (i == k) continue;
        AffForm f;
        f.coef.resize(1 + spec.u);
        for (int v = 0; v <= spec.u; ++v) f.coef[v] = spec.beta[i][v] - spec.beta[k][v];
        f.cst = spec.delta[i] - spec.delta[k] - (i < k ? 1 : 0);
        sys.ge.push_back(std::move(f));
    }
    {  // sign of l
        AffForm f;
        f.coef.assign(1 + spec.u, 0);
        f.coef[0] = sgn == 0 ? 1 : -1;
        f.cst = sgn == 0 ? 0 : -1;  // l >= 0 or -l - 1 >= 0
        sys.ge.push_back(std::move(f));
    }
    for (int v = 1; v <= spec.u; ++v) {  // n_v >= 0
        AffForm f;
        f.coef.assign(1 + spec.u, 0);
        f.coef[v] = 1;
        sys.ge.push_back(std::move(f));
    }
    {  // homogenization variable x0 >= 0: encoded as cst = 1, coef = 0
        AffForm f;
        f.coef.assign(1 + spec.u, 0);
        f.cst = 1;
        sys.ge.push_back(std::move(f));
    }
    sys.qexp.coef.resize(1 + spec.u);
    sys.texp.coef.resize(1 + spec.u);
    for (int v = 0; v <= spec.u; ++v) {
        sys.qexp.coef[v] = -spec.lambda[j][v];
        sys.texp.coef[v] = -spec.beta[k][v];
    }
    sys.qexp.cst = -spec.eps[j];
    sys.texp.cst = -spec.delta[k];
    return sys;
}

}  // namespace

BiRational xi_rational(const XiSpec& spec_in) {
    validate_spec(spec_in);
    if (spec_in.u > 2) throw SizeLimit("xi_rational: guarded at u <= 2");
    XiSpec spec = shifted_to_zero(spec_in);
    const size_t D = 2 + static_cast<size_t>(spec.u);

    BiRational total;
    for (int j = 0; j <= spec.d; ++j)
        for (int k = 0; k <= spec.d; ++k)
            for (int sgn = 0; sgn < 2; ++sgn) {
                BiRational part = region_gf(build_region_system(spec, j, k, sgn), D);
                if (part.is_zero()) continue;
                total = total.is_zero() ? part : (total + part);
            }
    return total.reduced();
}

int xi_region_cover_count(const XiSpec& spec_in, const std::vector<long>& point) {
    validate_spec(spec_in);
    XiSpec spec = shifted_to_zero(spec_in);
    if (point.size() != static_cast<size_t>(1 + spec.u))
        throw AssumptionViolation("region cover: arity mismatch");
    for (int v = 1; v <= spec.u; ++v)
        if (point[v] < 0) throw AssumptionViolation("region cover: point outside Z x N_0^u");
    // evaluate the affine region constraints at (x0, point) with x0 = 1
    Ray hom(2 + spec.u);
    hom[0] = 1;
    for (int v = 0; v <= spec.u; ++v) hom[v + 1] = point[v];
    int count = 0;
    for (int j = 0; j <= spec.d; ++j)
        for (int k = 0; k <= spec.d; ++k)
            for (int sgn = 0; sgn < 2; ++sgn) {
                RegionSystem sys = build_region_system(spec, j, k, sgn);
                bool inside = true;
                for (const auto& f : sys.ge)
                    if (f.eval_hom(hom) < 0) {
                        inside = false;
                        break;
                    }
                if (inside) ++count;
            }
    return count;
}

InversionResult inversion_check(const XiSpec& spec) {
    validate_spec(spec);
    for (int j = 0; j <= spec.d; ++j)
        if (spec.eps[j] != 0 || spec.delta[j] != 0)
            throw AssumptionViolation("inversion_check: shifts must vanish");
    XiSpec s1 = spec, s0 = spec;
    s1.N = 1;
    s0.N = 0;
    BiRational lhs = xi_rational(s1).subst_inverse();
    int sign = (spec.u % 2 == 0) ? -1 : 1;  // (-1)^{u+1}
    BiRational rhs = BiRational::monomial(0, 0, sign) * xi_rational(s0);
    InversionResult res;
    res.sign = sign;
    res.pass = lhs.equals(rhs);
    return res;
}

XiSpec XiSpec::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    XiSpec s;
    s.u = j.at("u").get<int>();
    s.d = j.at("d").get<int>();
    s.lambda = j.at("lambda").get<std::vector<std::vector<long>>>();
    s.beta = j.at("beta").get<std::vector<std::vector<long>>>();
    s.eps = j.at("eps").get<std::vector<long>>();
    s.delta = j.at("delta").get<std::vector<long>>();
    s.N = j.value("N", 0L);
    validate_spec(s);
    return s;
}

std::string XiSpec::to_json() const {
    nlohmann::ordered_json j;
    j["u"] = u;
    j["d"] = d;
    j["lambda"] = lambda;
    j["beta"] = beta;
    j["eps"] = eps;
    j["delta"] = delta;
    j["N"] = N;
    return j.dump();
}

}  // namespace zetarep
