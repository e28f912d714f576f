#include "zetarep/trees.hpp"

#include <algorithm>
#include <functional>

#include "zetarep/lie_lattice.hpp"

namespace zetarep {

std::vector<std::pair<mpz_class, mpz_class>> tree_zeta(const TreeSpec& spec) {
    for (long m : spec.branching)
        if (m < 2) throw ParamError("tree_zeta: branching entries >= 2");
    std::vector<std::pair<mpz_class, mpz_class>> out;
    out.emplace_back(1, 1);  // trivial constituent
    mpz_class prod = 1;
    for (size_t i = 0; i < spec.branching.size(); ++i) {
        out.emplace_back((spec.branching[i] - 1) * prod, 1);
        prod *= spec.branching[i];
    }
    return out;
}

std::vector<int> AutomorphismPortrait::apply(const std::vector<int>& word) const {
    if (word.empty()) return {};
    std::vector<int> img;
    const AutomorphismPortrait* node = this;
    for (size_t t = 0; t < word.size(); ++t) {
        int c = word[t];
        int mapped = (node && !node->perm.empty()) ? node->perm[c] : c;
        img.push_back(mapped);
        node = (node && c < static_cast<int>(node->child.size()) && node->child[c])
                   ? node->child[c].get()
                   : nullptr;
    }
    return img;
}

namespace {

int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int c = 0;
    while (c < static_cast<int>(a.size()) && c < static_cast<int>(b.size()) && a[c] == b[c]) ++c;
    return c;
}

std::unique_ptr<AutomorphismPortrait> path_mapper(const TreeSpec& spec,
                                                  const std::vector<int>& v,
                                                  const std::vector<int>& w, size_t depth) {
    // maps the path v (from this node down) onto w by transpositions
    if (depth >= v.size()) return nullptr;
    auto node = std::make_unique<AutomorphismPortrait>();
    long m = spec.branching[depth];
    node->perm.resize(m);
    for (long i = 0; i < m; ++i) node->perm[i] = static_cast<int>(i);
    std::swap(node->perm[v[depth]], node->perm[w[depth]]);
    node->child.resize(m);
    node->child[v[depth]] = path_mapper(spec, v, w, depth + 1);
    return node;
}

}  // namespace

AutomorphismPortrait tree_witness(const TreeSpec& spec, const std::vector<int>& v,
                                  const std::vector<int>& w) {
    const int n = static_cast<int>(v.size());
    if (w.size() != v.size() || n > spec.depth())
        throw ParamError("tree_witness: malformed layer words");
    std::vector<int> base(n, 0);
    int cv = common_prefix(base, v), cw = common_prefix(base, w);
    if (cv != cw) throw NoWitness("tree_witness: vertices not equidistant from the base");
    const int c = cv;

    AutomorphismPortrait root;
    AutomorphismPortrait* node = &root;
    // walk down the base path to the split vertex
    for (int t = 0; t < c; ++t) {
        long m = spec.branching[t];
        node->perm.resize(m);
        for (long i = 0; i < m; ++i) node->perm[i] = static_cast<int>(i);
        node->child.resize(m);
        node->child[v[t]] = std::make_unique<AutomorphismPortrait>();
        node = node->child[v[t]].get();
    }
    if (c < n) {
        long m = spec.branching[c];
        node->perm.resize(m);
        for (long i = 0; i < m; ++i) node->perm[i] = static_cast<int>(i);
        // both v[c], w[c] differ from base[c] = 0, so 0 stays fixed
        std::swap(node->perm[v[c]], node->perm[w[c]]);
        node->child.resize(m);
        node->child[v[c]] = path_mapper(spec, v, w, c + 1);
    }
    return root;
}

int orbit_count_layer(const TreeSpec& spec, int n) {
    if (n < 0 || n > spec.depth()) throw ParamError("orbit_count_layer: level out of range");
    if (n == 0) return 1;
    // enumerate the layer
    std::vector<std::vector<int>> layer;
    std::vector<int> word(n, 0);
    while (true) {
        layer.push_back(word);
        int pos = n - 1;
        while (pos >= 0 && word[pos] == spec.branching[pos] - 1) word[pos--] = 0;
        if (pos < 0) break;
        ++word[pos];
    }
    std::vector<int> base(n, 0);
    std::vector<char> classes(n + 1, 0);
    for (const auto& v : layer) classes[common_prefix(base, v)] = 1;
    // witness every equidistant pair and verify by action
    for (const auto& v : layer)
        for (const auto& w : layer) {
            if (common_prefix(base, v) != common_prefix(base, w)) continue;
            AutomorphismPortrait g = tree_witness(spec, v, w);
            if (g.apply(v) != w || g.apply(base) != base)
                throw NoWitness("orbit_count_layer: witness failed verification");
        }
    int count = 0;
    for (char c : classes) count += c;
    return count;
}

// ---- projective tree ----------------------------------------------------------

ProjectiveTree::ProjectiveTree(const ProjectiveTreeSpec& spec)
    : spec_(spec),
      // headroom: witness construction divides by Pi up to k_max - 1 times
      alg_(spec.p, spec.d, spec.inv,
           static_cast<unsigned long>((2 * spec.k_max + spec.d - 1) / spec.d + 1)) {
    if (spec.n < 1 || spec.k_max < 1) throw ParamError("projective tree: n, k_max >= 1");
}

ProjPoint ProjectiveTree::normalize(std::vector<CycElem> coords, long K) const {
    int i0 = -1;
    for (size_t i = 0; i < coords.size(); ++i)
        if (alg_.is_unit(coords[i])) {
            i0 = static_cast<int>(i);
            break;
        }
    if (i0 < 0) throw ParamError("projective point: not primitive");
    CycElem z = alg_.inverse(coords[i0]);
    ProjPoint pt;
    pt.level = K;
    for (auto& c : coords) pt.x.push_back(alg_.reduce_mod_pi_pow(alg_.mul(z, c), K));
    return pt;
}

ProjPoint ProjectiveTree::base_point(long K) const {
    std::vector<CycElem> coords(spec_.n + 1, alg_.zero());
    coords[0] = alg_.one();
    ProjPoint pt;
    pt.level = K;
    for (auto& c : coords) pt.x.push_back(alg_.reduce_mod_pi_pow(c, K));
    return pt;
}

bool ProjectiveTree::equal(const ProjPoint& a, const ProjPoint& b) const {
    return a.level == b.level && a.x == b.x;
}

ProjPoint ProjectiveTree::reduce(const ProjPoint& a, long K) const {
    std::vector<CycElem> coords;
    for (const auto& c : a.x) coords.push_back(alg_.reduce_mod_pi_pow(c, K));
    return normalize(std::move(coords), K);
}

std::vector<ProjPoint> ProjectiveTree::layer(long K) const {
    // canonical representatives: coords before the first unit lie in (Pi),
    // the first unit coordinate is 1, the rest run over Delta mod Pi^K
    const int d = alg_.index();
    auto coeff_bound = [&](int j) {
        long e = (K - j + d - 1) / d;
        return e <= 0 ? mpz_class(1) : pow_int(alg_.p(), static_cast<unsigned long>(e));
    };
    // enumerate Delta/Pi^K elements
    std::vector<CycElem> all;
    {
        mpz_class count = 1;
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) count *= coeff_bound(j);
        if (count > mpz_class(static_cast<unsigned long>(spec_.budget)))
            throw EnumerationBudget("projective layer: ring enumeration too large");
        std::vector<std::pair<int, int>> slots;
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) slots.emplace_back(i, j);
        std::vector<mpz_class> cur(slots.size(), 0);
        while (true) {
            CycElem e = alg_.zero();
            for (size_t s = 0; s < slots.size(); ++s) e.slice[slots[s].second].c[slots[s].first] = cur[s];
            all.push_back(e);
            size_t pos = 0;
            while (pos < slots.size()) {
                ++cur[pos];
                if (cur[pos] < coeff_bound(slots[pos].second)) break;
                cur[pos++] = 0;
            }
            if (pos == slots.size()) break;
        }
    }
    std::vector<CycElem> nonunits;
    for (const auto& e : all)
        if (!alg_.is_unit(e)) nonunits.push_back(e);

    std::vector<ProjPoint> pts;
    mpz_class total_est = 1;
    for (int i = 0; i <= spec_.n; ++i) total_est *= static_cast<long>(all.size());
    if (total_est > mpz_class(static_cast<unsigned long>(spec_.budget)))
        throw EnumerationBudget("projective layer: point enumeration too large");

    std::vector<CycElem> coords(spec_.n + 1, alg_.zero());
    std::function<void(int, int)> rec = [&](int i, int i0) {
        if (i > spec_.n) {
            if (i0 < 0) return;  // no unit coordinate: not a projective point
            ProjPoint pt;
            pt.level = K;
            pt.x = coords;
            pts.push_back(std::move(pt));
            return;
        }
        if (i0 < 0) {
            // still before the first unit: non-unit coordinate or the unit 1
            for (const auto& e : nonunits) {
                coords[i] = alg_.reduce_mod_pi_pow(e, K);
                rec(i + 1, -1);
            }
            coords[i] = alg_.one();
            rec(i + 1, i);
        } else {
            for (const auto& e : all) {
                coords[i] = alg_.reduce_mod_pi_pow(e, K);
                rec(i + 1, i0);
            }
        }
        coords[i] = alg_.zero();
    };
    rec(0, -1);
    return pts;
}

long ProjectiveTree::sphere_level(const ProjPoint& a) const {
    for (long j = a.level; j >= 1; --j) {
        ProjPoint red = reduce(a, j);
        if (equal(red, base_point(j))) return j;
    }
    return 0;
}

namespace {

// left-divide by Pi: y with Pi y = x; x must lie in (Pi)
CycElem div_pi_left(const CyclicAlgebra& alg, const CycElem& x) {
    const int d = alg.index();
    CycElem y = alg.zero();
    if (d == 1) {
        // Pi = p: divide the single slice by p
        y.slice[0] = x.slice[0];
        for (auto& c : y.slice[0].c) {
            if (c % alg.p() != 0) throw NoWitness("div_pi_left: element not in (Pi)");
            c /= alg.p();
        }
        return y;
    }
    // slice_j(x) = sigma(slice_{j-1}(y)) for j>=1; slice_0(x) = p sigma(slice_{d-1}(y))
    for (int j = 1; j < d; ++j) y.slice[j - 1] = alg.ring().frobenius(x.slice[j], -alg.invariant());
    GrElem top = x.slice[0];
    for (auto& c : top.c) {
        if (c % alg.p() != 0) throw NoWitness("div_pi_left: element not in (Pi)");
        c /= alg.p();
    }
    y.slice[d - 1] = alg.ring().frobenius(top, -alg.invariant());
    return y;
}

CycElem div_pi_pow(const CyclicAlgebra& alg, CycElem x, long j) {
    for (long t = 0; t < j; ++t) x = div_pi_left(alg, x);
    return x;
}

// invert a matrix over Delta/p^L by row reduction with unit pivots
std::vector<std::vector<CycElem>> mat_inverse(const CyclicAlgebra& alg,
                                              std::vector<std::vector<CycElem>> m) {
    const size_t n = m.size();
    std::vector<std::vector<CycElem>> inv(n, std::vector<CycElem>(n, alg.zero()));
    for (size_t i = 0; i < n; ++i) inv[i][i] = alg.one();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && !alg.is_unit(m[piv][c])) ++piv;
        if (piv == n) throw NoWitness("mat_inverse: no unit pivot");
        std::swap(m[c], m[piv]);
        std::swap(inv[c], inv[piv]);
        CycElem z = alg.inverse(m[c][c]);
        for (size_t j = 0; j < n; ++j) {
            m[c][j] = alg.mul(z, m[c][j]);
            inv[c][j] = alg.mul(z, inv[c][j]);
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || alg.is_zero(m[r][c])) continue;
            CycElem f = m[r][c];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] = alg.sub(m[r][j], alg.mul(f, m[c][j]));
                inv[r][j] = alg.sub(inv[r][j], alg.mul(f, inv[c][j]));
            }
        }
    }
    return inv;
}

}  // namespace

std::vector<std::vector<CycElem>> ProjectiveTree::witness(const ProjPoint& a,
                                                          const ProjPoint& b) const {
    const int n = spec_.n;
    long j = sphere_level(a);
    if (sphere_level(b) != j)
        throw ParamError("witness: points on different spheres around the base");
    const long K = a.level;

    // identity matrix
    std::vector<std::vector<CycElem>> g(n + 1, std::vector<CycElem>(n + 1, alg_.zero()));
    for (int i = 0; i <= n; ++i) g[i][i] = alg_.one();
    if (equal(a, b)) return g;

    // tails u, v with a = (a0 : Pi^j u), b = (b0 : Pi^j v)
    std::vector<CycElem> u(n), v(n);
    for (int i = 0; i < n; ++i) {
        u[i] = div_pi_pow(alg_, a.x[i + 1], j);
        v[i] = div_pi_pow(alg_, b.x[i + 1], j);
    }
    int iu = -1;
    for (int i = 0; i < n && iu < 0; ++i)
        if (alg_.is_unit(u[i])) iu = i;
    int iv = -1;
    for (int i = 0; i < n && iv < 0; ++i)
        if (alg_.is_unit(v[i])) iv = i;
    if (iu < 0 || iv < 0) throw NoWitness("witness: tails not primitive");

    // complete a primitive row to an invertible matrix: the row on top, then
    // the standard basis vectors skipping the row's unit position
    auto complete = [&](const std::vector<CycElem>& row, int ipiv) {
        std::vector<std::vector<CycElem>> m(n, std::vector<CycElem>(n, alg_.zero()));
        m[0] = row;
        int fill = 0;
        for (int i = 1; i < n; ++i) {
            if (fill == ipiv) ++fill;
            m[i][fill++] = alg_.one();
        }
        return m;
    };
    auto U = complete(u, iu);
    auto V = complete(v, iv);
    auto Uinv = mat_inverse(alg_, U);
    // h = U^{-1} V maps u (= e_1 U) to e_1 V = v
    std::vector<std::vector<CycElem>> h(n, std::vector<CycElem>(n, alg_.zero()));
    for (int i = 0; i < n; ++i)
        for (int c2 = 0; c2 < n; ++c2) {
            CycElem s = alg_.zero();
            for (int k = 0; k < n; ++k) s = alg_.add(s, alg_.mul(Uinv[i][k], V[k][c2]));
            h[i][c2] = s;
        }

    // a_i solving Pi^j sum u_i a_i = b0 - a0
    CycElem c0 = div_pi_pow(alg_, alg_.sub(b.x[0], a.x[0]), j);
    std::vector<CycElem> avec(n, alg_.zero());
    avec[iu] = alg_.mul(alg_.inverse(u[iu]), c0);

    for (int i = 0; i < n; ++i) {
        g[i + 1][0] = avec[i];
        for (int c2 = 0; c2 < n; ++c2) g[i + 1][c2 + 1] = h[i][c2];
    }
    for (int c2 = 1; c2 <= n; ++c2) g[0][c2] = alg_.zero();
    g[0][0] = alg_.one();

    ProjPoint img = act(a, g);
    if (!equal(img, reduce(b, K))) throw NoWitness("witness: verification failed");
    return g;
}

ProjPoint ProjectiveTree::act(const ProjPoint& a, const std::vector<std::vector<CycElem>>& g) const {
    const int n = spec_.n;
    std::vector<CycElem> img(n + 1, alg_.zero());
    for (int j = 0; j <= n; ++j) {
        CycElem s = alg_.zero();
        for (int i = 0; i <= n; ++i) s = alg_.add(s, alg_.mul(a.x[i], g[i][j]));
        img[j] = s;
    }
    return normalize(std::move(img), a.level);
}

std::vector<mpz_class> projective_layers(const ProjectiveTreeSpec& spec) {
    ProjectiveTree tree(spec);
    mpz_class qd = pow_int(spec.p, spec.d);
    mpz_class qdn = pow_int(spec.p, static_cast<unsigned long>(spec.d) * spec.n);
    mpz_class m1 = (qdn * qd - 1) / (qd - 1);

    std::vector<mpz_class> branching;
    mpz_class prev = 1;
    for (int k = 1; k <= spec.k_max; ++k) {
        auto pts = tree.layer(k);
        mpz_class size(static_cast<unsigned long>(pts.size()));
        mpz_class expected = m1;
        for (int t = 2; t <= k; ++t) expected *= qdn;
        if (size != expected)
            throw EnumerationBudget("projective layer size " + size.get_str() +
                                    " disagrees with the closed formula " + expected.get_str());
        branching.push_back(size / prev);
        prev = size;
    }
    return branching;
}

}  // namespace zetarep
