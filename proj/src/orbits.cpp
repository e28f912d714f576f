#include "zetarep/orbits.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "zetarep/smith.hpp"

namespace zetarep {

namespace {

// exp of an n x n rational matrix with entry valuations >= 1, reduced mod p^L
std::vector<std::vector<mpz_class>> matrix_exp_mod(const std::vector<std::vector<mpq_class>>& x,
                                                   const mpz_class& p, unsigned long L) {
    const size_t n = x.size();
    for (const auto& row : x)
        for (const auto& e : row)
            if (e != 0 && valuation(e, p) < 1)
                throw PrecisionError("matrix exponential: entry valuation < 1");
    std::vector<std::vector<mpq_class>> term(n, std::vector<mpq_class>(n, 0)), sum = term;
    for (size_t i = 0; i < n; ++i) term[i][i] = sum[i][i] = 1;
    mpz_class pm1 = p - 1;
    for (unsigned long k = 1;; ++k) {
        // term <- term * x / k
        std::vector<std::vector<mpq_class>> nt(n, std::vector<mpq_class>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) {
                if (term[i][l] == 0) continue;
                for (size_t j = 0; j < n; ++j) {
                    if (x[l][j] == 0) continue;
                    nt[i][j] += term[i][l] * x[l][j];
                }
            }
        for (auto& row : nt)
            for (auto& e : row) e /= static_cast<unsigned long>(k);
        term = std::move(nt);
        bool all_zero = true;
        for (size_t i = 0; i < n && all_zero; ++i)
            for (size_t j = 0; j < n; ++j)
                if (term[i][j] != 0 && valuation(term[i][j], p) < static_cast<long>(L)) {
                    all_zero = false;
                    break;
                }
        if (!all_zero)
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) sum[i][j] += term[i][j];
        // v(x^k / k!) >= k - (k-1)/(p-1) eventually exceeds L
        mpz_class lower = mpz_class(k) * pm1 - mpz_class(k - 1);
        if (lower >= mpz_class(L) * pm1) break;
    }
    std::vector<std::vector<mpz_class>> out(n, std::vector<mpz_class>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = rational_mod(sum[i][j], p, L);
    return out;
}

}  // namespace

CoadjointSpace::CoadjointSpace(const LieLattice& lat, const mpz_class& p, unsigned long r,
                               unsigned long L, uint64_t budget)
    : lat_(lat), p_(p), r_(r), L_(L), n_(lat.rank()) {
    if (p == 2) throw ParamError("coadjoint orbits: gated to odd p");
    if (!permissible_level(p, r)) throw ParamError("coadjoint orbits: r not permissible");
    if (L < 1) throw ParamError("coadjoint orbits: L >= 1");
    mpz_class plz = pow_int(p, L);
    mpz_class tot = 1;
    for (int i = 0; i < n_; ++i) tot *= plz;
    if (tot > mpz_class(static_cast<unsigned long>(budget)))
        throw OverflowGuard("truncated dual of " + tot.get_str() + " points exceeds budget");
    pl_ = mpz_get_ui(plz.get_mpz_t());
    total_ = mpz_get_ui(tot.get_mpz_t());

    // generator action matrices: Ad(exp(p^r Y_i)^{+-1}) = exp(+-p^r ad_{Y_i}),
    // stored transposed so that (g.w)_j = sum_i A_{ij} w_i is a row scan
    mpq_class pr(pow_int(p, r));
    for (int g = 0; g < n_; ++g)
        for (int sign = 0; sign < 2; ++sign) {
            std::vector<std::vector<mpq_class>> ad(n_, std::vector<mpq_class>(n_, 0));
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k) {
                    mpq_class c = lat.c(g, j, k);
                    if (c != 0) ad[k][j] = (sign ? -c : c) * pr;
                }
            auto mat = matrix_exp_mod(ad, p, L);
            // A == I mod p certifies invertibility at working precision
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) {
                    mpz_class expect = (i == j) ? 1 : 0;
                    if (mod_nonneg(mat[i][j] - expect, p_) != 0)
                        throw PrecisionError("generator not congruent to identity mod p");
                }
            std::vector<uint64_t> flat(static_cast<size_t>(n_) * n_);
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    flat[static_cast<size_t>(j) * n_ + i] = mpz_get_ui(mat[i][j].get_mpz_t());
            gens_.push_back(std::move(flat));
        }
}

uint64_t CoadjointSpace::encode(const std::vector<uint32_t>& pt) const {
    uint64_t code = 0;
    for (int i = n_ - 1; i >= 0; --i) code = code * pl_ + pt[i];
    return code;
}

std::vector<uint32_t> CoadjointSpace::decode(uint64_t code) const {
    std::vector<uint32_t> pt(n_);
    for (int i = 0; i < n_; ++i) {
        pt[i] = static_cast<uint32_t>(code % pl_);
        code /= pl_;
    }
    return pt;
}

std::vector<uint64_t> CoadjointSpace::orbit_of(const std::vector<uint32_t>& seed) const {
    if (seed.size() != static_cast<size_t>(n_))
        throw ParamError("orbit_of: point has wrong dimension");
    for (uint32_t c : seed)
        if (c >= pl_) throw ParamError("orbit_of: coordinate not reduced mod p^L");
    std::unordered_set<uint64_t> seen;
    std::deque<uint64_t> queue;
    uint64_t s = encode(seed);
    seen.insert(s);
    queue.push_back(s);
    std::vector<uint32_t> pt(n_), img(n_);
    while (!queue.empty()) {
        uint64_t cur = queue.front();
        queue.pop_front();
        pt = decode(cur);
        for (const auto& g : gens_) {
            for (int j = 0; j < n_; ++j) {
                unsigned __int128 acc = 0;
                const uint64_t* row = g.data() + static_cast<size_t>(j) * n_;
                for (int i = 0; i < n_; ++i) acc += static_cast<unsigned __int128>(row[i]) * pt[i];
                img[j] = static_cast<uint32_t>(acc % pl_);
            }
            uint64_t code = encode(img);
            if (seen.insert(code).second) queue.push_back(code);
        }
    }
    std::vector<uint64_t> orbit(seen.begin(), seen.end());
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

long CoadjointSpace::index_exponent(const std::vector<uint32_t>& pt) const {
    // scaled commutator matrix at the lifted point: p^r R(b) / p^L
    std::vector<std::vector<mpq_class>> a(n_, std::vector<mpq_class>(n_, 0));
    mpq_class scale = mpq_class(pow_int(p_, r_)) / mpq_class(pow_int(p_, L_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            mpq_class s = 0;
            for (int k = 0; k < n_; ++k)
                if (lat_.c(i, j, k) != 0) s += lat_.c(i, j, k) * mpq_class(pt[k]);
            a[i][j] = s * scale;
        }
    auto prof = smith_valuations(std::move(a), p_);
    long s = prof.negative_part_sum();
    if (s % 2 != 0) throw PrecisionError("orbit index: odd negative part");
    return s / 2;
}

OrbitData CoadjointSpace::all_orbits() const {
    OrbitData data;
    data.total_points = total_;
    std::vector<uint8_t> visited(total_, 0);
    for (uint64_t s = 0; s < total_; ++s) {
        if (visited[s]) continue;
        auto seed = decode(s);
        auto orbit = orbit_of(seed);
        for (uint64_t c : orbit) visited[c] = 1;
        Orbit o;
        o.rep = seed;
        o.size = orbit.size();
        o.index_exponent = index_exponent(seed);
        data.orbits.push_back(std::move(o));
    }
    return data;
}

namespace {

LieLattice sub_lattice(const LieLattice& lat, const std::vector<int>& h_indices) {
    const int h = static_cast<int>(h_indices.size());
    std::vector<std::string> labels;
    for (int i : h_indices) labels.push_back(lat.labels()[i]);
    LieLattice sub(h, labels);
    for (int a = 0; a < h; ++a)
        for (int b = 0; b < h; ++b) {
            for (int k = 0; k < lat.rank(); ++k) {
                mpq_class c = lat.c(h_indices[a], h_indices[b], k);
                if (c == 0) continue;
                auto it = std::find(h_indices.begin(), h_indices.end(), k);
                if (it == h_indices.end())
                    throw ParamError("induced_multiplicity: h is not closed under the bracket");
                sub.set_c(a, b, static_cast<int>(it - h_indices.begin()), c);
            }
        }
    return sub;
}

mpz_class sqrt_exact(const mpz_class& n) {
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) throw NonIntegralMultiplicity("orbit size is not a perfect square");
    return root;
}

}  // namespace

mpz_class induced_multiplicity(const LieLattice& lat, const std::vector<int>& h_indices,
                               const std::vector<uint32_t>& omega,
                               const std::vector<uint32_t>& eta, const mpz_class& p,
                               unsigned long r, unsigned long L, uint64_t budget) {
    CoadjointSpace gspace(lat, p, r, L, budget);
    LieLattice hsub = sub_lattice(lat, h_indices);
    CoadjointSpace hspace(hsub, p, r, L, budget);

    auto gorbit = gspace.orbit_of(omega);
    auto horbit = hspace.orbit_of(eta);
    std::unordered_set<uint64_t> hset(horbit.begin(), horbit.end());

    uint64_t in_count = 0;
    std::vector<uint32_t> proj(h_indices.size());
    for (uint64_t code : gorbit) {
        auto pt = gspace.decode(code);
        for (size_t a = 0; a < h_indices.size(); ++a) proj[a] = pt[h_indices[a]];
        if (hset.count(hspace.encode(proj))) ++in_count;
    }
    mpz_class denom = sqrt_exact(mpz_class(static_cast<unsigned long>(gorbit.size()))) *
                      sqrt_exact(mpz_class(static_cast<unsigned long>(horbit.size())));
    mpz_class num(static_cast<unsigned long>(in_count)), q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
    if (rem != 0)
        throw NonIntegralMultiplicity("IN(omega,eta) not divisible by the orbit geometric mean");
    return q;
}

std::map<long, mpz_class> truncated_dual_tally(const LieLattice& lat,
                                               const std::vector<int>& h_indices,
                                               const mpz_class& p, unsigned long r,
                                               unsigned long L, uint64_t budget) {
    CoadjointSpace space(lat, p, r, L, budget);
    std::map<long, mpz_class> counts;
    for (uint64_t c = 0; c < space.total(); ++c) {
        auto pt = space.decode(c);
        bool vanishes = true;
        for (int i : h_indices)
            if (pt[i] != 0) {
                vanishes = false;
                break;
            }
        if (!vanishes) continue;
        ++counts[space.index_exponent(pt)];
    }
    std::map<long, mpz_class> tally;
    for (const auto& [e, n] : counts) {
        mpz_class d = pow_int(p, static_cast<unsigned long>(e)), q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (rem != 0)
            throw NonIntegralMultiplicity("truncated tally coefficient not integral at e=" +
                                          std::to_string(e));
        tally[e] = q;
    }
    return tally;
}

std::map<long, mpz_class> multiplicity_tally(const LieLattice& lat,
                                             const std::vector<int>& h_indices, const mpz_class& p,
                                             unsigned long r, unsigned long L, uint64_t budget) {
    CoadjointSpace gspace(lat, p, r, L, budget);
    LieLattice hsub = sub_lattice(lat, h_indices);
    CoadjointSpace hspace(hsub, p, r, L, budget);
    std::vector<uint32_t> zero_eta(h_indices.size(), 0);
    auto horbit = hspace.orbit_of(zero_eta);  // = {0}
    std::unordered_set<uint64_t> hset(horbit.begin(), horbit.end());

    std::map<long, mpz_class> tally;
    std::vector<uint8_t> visited(gspace.total(), 0);
    std::vector<uint32_t> proj(h_indices.size());
    for (uint64_t s = 0; s < gspace.total(); ++s) {
        if (visited[s]) continue;
        auto seed = gspace.decode(s);
        auto orbit = gspace.orbit_of(seed);
        for (uint64_t c : orbit) visited[c] = 1;
        uint64_t in_count = 0;
        for (uint64_t code : orbit) {
            auto pt = gspace.decode(code);
            for (size_t a = 0; a < h_indices.size(); ++a) proj[a] = pt[h_indices[a]];
            if (hset.count(hspace.encode(proj))) ++in_count;
        }
        if (in_count == 0) continue;
        long e = gspace.index_exponent(seed);
        mpz_class denom = sqrt_exact(mpz_class(static_cast<unsigned long>(orbit.size())));
        mpz_class num(static_cast<unsigned long>(in_count)), q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
        if (rem != 0) throw NonIntegralMultiplicity("orbit multiplicity not integral");
        tally[e] += q;
    }
    return tally;
}

}  // namespace zetarep
