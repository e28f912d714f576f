#include "zetarep/cyclic_algebra.hpp"

#include <numeric>

namespace zetarep {

CyclicAlgebra::CyclicAlgebra(const mpz_class& p, int d, int h, unsigned long L)
    : gr_(p, d, L), d_(d), h_(h) {
    if (d < 1) throw std::invalid_argument("CyclicAlgebra: d >= 1");
    if (h < 1 || h > d || std::gcd(h, d) != 1)
        throw std::invalid_argument("CyclicAlgebra: need 1 <= h <= d with gcd(h, d) = 1");
}

CycElem CyclicAlgebra::zero() const {
    return {std::vector<GrElem>(d_, gr_.zero())};
}
CycElem CyclicAlgebra::one() const {
    CycElem e = zero();
    e.slice[0] = gr_.one();
    return e;
}
CycElem CyclicAlgebra::xi() const {
    CycElem e = zero();
    e.slice[0] = gr_.xi();
    return e;
}
CycElem CyclicAlgebra::pi() const {
    CycElem e = zero();
    if (d_ == 1)
        e.slice[0] = gr_.from_int(p());  // Pi = p when d = 1
    else
        e.slice[1] = gr_.one();
    return e;
}
CycElem CyclicAlgebra::from_ring(const GrElem& a) const {
    CycElem e = zero();
    e.slice[0] = a;
    return e;
}
CycElem CyclicAlgebra::from_int(const mpz_class& a) const { return from_ring(gr_.from_int(a)); }

CycElem CyclicAlgebra::add(const CycElem& a, const CycElem& b) const {
    CycElem r = zero();
    for (int j = 0; j < d_; ++j) r.slice[j] = gr_.add(a.slice[j], b.slice[j]);
    return r;
}
CycElem CyclicAlgebra::sub(const CycElem& a, const CycElem& b) const {
    CycElem r = zero();
    for (int j = 0; j < d_; ++j) r.slice[j] = gr_.sub(a.slice[j], b.slice[j]);
    return r;
}
CycElem CyclicAlgebra::neg(const CycElem& a) const { return sub(zero(), a); }

CycElem CyclicAlgebra::mul(const CycElem& a, const CycElem& b) const {
    // (x Pi^j)(y Pi^j') = x sigma^{hj}(y) Pi^{j+j'}, Pi^d = p
    CycElem r = zero();
    for (int j = 0; j < d_; ++j) {
        if (gr_.is_zero(a.slice[j])) continue;
        for (int j2 = 0; j2 < d_; ++j2) {
            if (gr_.is_zero(b.slice[j2])) continue;
            GrElem prod = gr_.mul(a.slice[j], gr_.frobenius(b.slice[j2], h_ * j));
            int jj = j + j2;
            if (jj >= d_) {
                jj -= d_;
                prod = gr_.scalar_mul(p(), prod);
            }
            r.slice[jj] = gr_.add(r.slice[jj], prod);
        }
    }
    return r;
}

bool CyclicAlgebra::is_zero(const CycElem& a) const {
    for (int j = 0; j < d_; ++j)
        if (!gr_.is_zero(a.slice[j])) return false;
    return true;
}

bool CyclicAlgebra::is_unit(const CycElem& a) const {
    // x mod Pi is the residue of the j = 0 slice mod p
    return gr_.is_unit(a.slice[0]);
}

CycElem CyclicAlgebra::inverse(const CycElem& a) const {
    if (!is_unit(a)) throw std::domain_error("CyclicAlgebra: not a unit");
    // start from the Galois-ring inverse of the principal slice, then Newton:
    // the error 1 - a y is in (Pi), and y <- y(2 - a y) squares it away
    CycElem y = from_ring(gr_.inverse(a.slice[0]));
    unsigned long steps = 1;
    while ((1ul << steps) < d_ * precision() + 1) ++steps;
    for (unsigned long k = 0; k <= steps; ++k) {
        CycElem ay = mul(a, y);
        CycElem two = sub(add(one(), one()), ay);
        y = mul(y, two);
    }
    return y;
}

mpz_class CyclicAlgebra::reduced_trace(const CycElem& x) const {
    return gr_.trace(x.slice[0]);
}

CycElem CyclicAlgebra::reduce_mod_pi_pow(const CycElem& a, long K) const {
    // Pi^K Delta = (+) p^{ceil((K-j)/d)} o * xi^i Pi^j, so the xi^i Pi^j
    // coefficient of the canonical representative is cut mod that power.
    if (K > d_ * static_cast<long>(precision()))
        throw std::domain_error("reduce_mod_pi_pow: K exceeds working precision");
    CycElem r = zero();
    for (int j = 0; j < d_; ++j) {
        long e = (K - j + d_ - 1) / d_;  // ceil((K - j)/d)
        if (e <= 0) continue;           // component lies inside Pi^K
        if (e >= static_cast<long>(precision())) {
            r.slice[j] = a.slice[j];
            continue;
        }
        mpz_class pe = pow_int(p(), static_cast<unsigned long>(e));
        r.slice[j] = a.slice[j];
        for (int i = 0; i < gr_.degree(); ++i) r.slice[j].c[i] = mod_nonneg(r.slice[j].c[i], pe);
    }
    return r;
}

long CyclicAlgebra::pi_valuation(const CycElem& a) const {
    long best = d_ * static_cast<long>(precision());
    for (int j = 0; j < d_; ++j) {
        for (int i = 0; i < gr_.degree(); ++i) {
            if (a.slice[j].c[i] == 0) continue;
            long vp = valuation_int(a.slice[j].c[i], p());
            best = std::min(best, vp * d_ + j);
        }
    }
    return best;
}

}  // namespace zetarep
