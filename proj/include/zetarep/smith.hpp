#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "zetarep/valuation.hpp"

namespace zetarep {

// Valuations nu_1 <= ... <= nu_n of the elementary divisors pi^{nu_i} of a
// square matrix over the local ring, +inf entries for the rank deficit.
struct ValuationProfile {
    std::vector<long> nu;  // sorted ascending, kValInf for vanishing divisors

    long negative_part_sum() const {
        long s = 0;
        for (long v : nu)
            if (v != kValInf && v < 0) s += -v;
        return s;
    }
    bool paired() const {
        size_t i = 0, n = nu.size();
        while (i < n && nu[i] != kValInf) ++i;
        if (i % 2 != 0) return false;
        for (size_t j = 0; j + 1 < i; j += 2)
            if (nu[j] != nu[j + 1]) return false;
        return true;
    }
};

// Finite elementary divisor valuations of a rectangular matrix over Z_p by
// valuation-pivot elimination. Pivot: entry of minimal v_p, ties row-major.
inline std::vector<long> smith_valuations_rect(std::vector<std::vector<mpq_class>> a,
                                               const mpz_class& p) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<long> nu;
    size_t lo = 0;
    while (lo < rows && lo < cols) {
        long best = kValInf;
        size_t bi = lo, bj = lo;
        for (size_t i = lo; i < rows; ++i)
            for (size_t j = lo; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                long v = valuation(a[i][j], p);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best == kValInf) break;  // zero block
        std::swap(a[lo], a[bi]);
        for (size_t i = lo; i < rows; ++i) std::swap(a[i][lo], a[i][bj]);
        const mpq_class piv = a[lo][lo];
        for (size_t i = lo + 1; i < rows; ++i) {
            if (a[i][lo] == 0) continue;
            mpq_class f = a[i][lo] / piv;
            for (size_t j = lo; j < cols; ++j) a[i][j] -= f * a[lo][j];
        }
        for (size_t j = lo + 1; j < cols; ++j) {
            if (a[lo][j] == 0) continue;
            mpq_class f = a[lo][j] / piv;
            for (size_t i = lo; i < rows; ++i) a[i][j] -= f * a[i][lo];
        }
        nu.push_back(best);
        ++lo;
    }
    std::sort(nu.begin(), nu.end());
    return nu;
}

// Square-matrix version padded with +inf for the rank deficit.
inline ValuationProfile smith_valuations(std::vector<std::vector<mpq_class>> a, const mpz_class& p) {
    const size_t n = a.size();
    for (auto& row : a)
        if (row.size() != n) throw std::invalid_argument("smith_valuations: matrix not square");
    ValuationProfile prof;
    prof.nu = smith_valuations_rect(std::move(a), p);
    prof.nu.resize(n, kValInf);
    return prof;
}

// Fast kernel: valuations clipped at cap, arithmetic mod p^cap in uint64.
// Returns min(nu_i, cap) ascending; only valid when p^cap fits in 63 bits.
class SmithModKernel {
   public:
    SmithModKernel(uint64_t p, int cap) : p_(p), cap_(cap) {
        mod_ = 1;
        for (int i = 0; i < cap; ++i) mod_ *= p;
    }

    static bool representable(const mpz_class& p, int cap) {
        mpz_class m = pow_int(p, static_cast<unsigned long>(cap));
        return mpz_sizeinbase(m.get_mpz_t(), 2) <= 62;
    }

    uint64_t modulus() const { return mod_; }

    int val(uint64_t x) const {
        if (x == 0) return cap_;
        int v = 0;
        while (x % p_ == 0) {
            x /= p_;
            ++v;
        }
        return v;
    }

    // In-place; a has n*n entries mod p^cap. Returns clipped valuations, ascending.
    std::vector<int> valuations(std::vector<uint64_t>& a, size_t n) const {
        std::vector<int> nu;
        size_t lo = 0;
        while (lo < n) {
            int best = cap_;
            size_t bi = lo, bj = lo;
            for (size_t i = lo; i < n && best > 0; ++i)
                for (size_t j = lo; j < n; ++j) {
                    int v = val(a[i * n + j]);
                    if (v < best) {
                        best = v;
                        bi = i;
                        bj = j;
                        if (best == 0) break;
                    }
                }
            if (best >= cap_) break;
            if (bi != lo)
                for (size_t j = lo; j < n; ++j) std::swap(a[lo * n + j], a[bi * n + j]);
            if (bj != lo)
                for (size_t i = lo; i < n; ++i) std::swap(a[i * n + lo], a[i * n + bj]);
            // pivot = u * p^best; clear column and row using unit inverse
            uint64_t pb = 1;
            for (int k = 0; k < best; ++k) pb *= p_;
            uint64_t unit = a[lo * n + lo] / pb;
            uint64_t uinv = inv_unit(unit);
            for (size_t i = lo + 1; i < n; ++i) {
                uint64_t e = a[i * n + lo];
                if (e == 0) continue;
                uint64_t f = mulmod(e / pb, uinv);  // e / pivot, exact in Z/p^(cap-best)
                for (size_t j = lo; j < n; ++j)
                    a[i * n + j] = submod(a[i * n + j], mulmod(f, a[lo * n + j]));
            }
            for (size_t j = lo + 1; j < n; ++j) {
                uint64_t e = a[lo * n + j];
                if (e == 0) continue;
                uint64_t f = mulmod(e / pb, uinv);
                for (size_t i = lo; i < n; ++i)
                    a[i * n + j] = submod(a[i * n + j], mulmod(f, a[i * n + lo]));
            }
            nu.push_back(best);
            ++lo;
        }
        std::sort(nu.begin(), nu.end());
        nu.resize(n, cap_);
        return nu;
    }

   private:
    uint64_t mulmod(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % mod_);
    }
    uint64_t submod(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + mod_ - b; }
    uint64_t inv_unit(uint64_t u) const {
        // Newton lift of the inverse mod p up to p^cap
        uint64_t x = inv_mod_u64(u % p_, p_);
        uint64_t m = p_;
        while (m < mod_) {
            m = (mod_ / m < m) ? mod_ : m * m;
            unsigned __int128 t = static_cast<unsigned __int128>(u % m) * x % m;
            t = (2 + m - static_cast<uint64_t>(t)) % m;
            x = static_cast<uint64_t>(static_cast<unsigned __int128>(x) * t % m);
        }
        return x % mod_;
    }
    static uint64_t inv_mod_u64(uint64_t a, uint64_t m) {
        int64_t t = 0, nt = 1;
        int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
        while (nr != 0) {
            int64_t q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        if (t < 0) t += static_cast<int64_t>(m);
        return static_cast<uint64_t>(t);
    }

    uint64_t p_;
    int cap_;
    uint64_t mod_ = 0;
};

}  // namespace zetarep
