#include "zetarep/galois_ring.hpp"

#include <algorithm>

namespace zetarep {

namespace {

using Poly = std::vector<mpz_class>;  // coefficients, low degree first

Poly poly_mod(Poly a, const Poly& g, const mpz_class& m) {
    const size_t d = g.size() - 1;  // g monic of degree d
    for (size_t i = a.size(); i-- > d;) {
        mpz_class lead = mod_nonneg(a[i], m);
        if (lead == 0) continue;
        for (size_t k = 0; k < d; ++k) a[i - d + k] = mod_nonneg(a[i - d + k] - lead * g[k], m);
        a[i] = 0;
    }
    a.resize(d);
    for (auto& x : a) x = mod_nonneg(x, m);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const Poly& g, const mpz_class& m) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return poly_mod(std::move(r), g, m);
}

Poly poly_pow(Poly base, mpz_class e, const Poly& g, const mpz_class& m) {
    Poly r(g.size() - 1, 0);
    r[0] = 1;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mul(r, base, g, m);
        base = poly_mul(base, base, g, m);
        e /= 2;
    }
    return r;
}

bool poly_is_one(const Poly& a) {
    if (a.empty() || a[0] != 1) return false;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

std::vector<mpz_class> prime_factors(mpz_class n) {
    std::vector<mpz_class> fs;
    for (mpz_class f = 2; f * f <= n; ++f)
        if (n % f == 0) {
            fs.push_back(f);
            while (n % f == 0) n /= f;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

// gcd of polynomials over F_p (monic result; empty = gcd 1 by unit)
Poly poly_gcd_fp(Poly a, Poly b, const mpz_class& p) {
    auto deg = [](const Poly& x) {
        for (size_t i = x.size(); i-- > 0;)
            if (x[i] != 0) return static_cast<long>(i);
        return -1L;
    };
    while (deg(b) >= 0) {
        long da = deg(a), db = deg(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        mpz_class inv = inv_mod(b[db], p);
        mpz_class f = mod_nonneg(a[da] * inv, p);
        for (long k = 0; k <= db; ++k) a[da - db + k] = mod_nonneg(a[da - db + k] - f * b[k], p);
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

// Monic degree-d polynomial over F_p, irreducible with primitive root.
Poly find_primitive_poly(const mpz_class& p, int d) {
    mpz_class order = pow_int(p, d) - 1;
    auto order_factors = prime_factors(order);
    auto d_factors = prime_factors(d);

    // iterate over monic polynomials by their low coefficients
    std::vector<long> digits(d, 0);
    const long pl = mpz_get_si(p.get_mpz_t());
    while (true) {
        Poly g(d + 1, 0);
        g[d] = 1;
        for (int i = 0; i < d; ++i) g[i] = digits[i];
        bool ok = g[0] != 0;  // no root at 0
        if (ok) {
            // Rabin: X^{p^d} == X mod g, and gcd(X^{p^{d/l}} - X, g) = 1
            Poly x = poly_mod({0, 1}, g, p);
            Poly xp = poly_pow(x, pow_int(p, d), g, p);
            Poly diff(d);
            for (int i = 0; i < d; ++i) diff[i] = mod_nonneg(xp[i] - x[i], p);
            ok = std::all_of(diff.begin(), diff.end(), [](const mpz_class& c) { return c == 0; });
            if (ok)
                for (const auto& l : d_factors) {
                    Poly xq = poly_pow(x, pow_int(p, d / mpz_get_ui(l.get_mpz_t())), g, p);
                    for (int i = 0; i < d; ++i) xq[i] = mod_nonneg(xq[i] - x[i], p);
                    Poly gg = poly_gcd_fp(g, xq, p);
                    long dg = -1;
                    for (size_t i = gg.size(); i-- > 0;)
                        if (gg[i] != 0) {
                            dg = static_cast<long>(i);
                            break;
                        }
                    if (dg != 0) {
                        ok = false;
                        break;
                    }
                }
            if (ok)  // primitivity of the root X
                for (const auto& l : order_factors) {
                    Poly xe = poly_pow(x, order / l, g, p);
                    if (poly_is_one(xe)) {
                        ok = false;
                        break;
                    }
                }
            if (ok) return g;
        }
        int pos = 0;
        while (pos < d && ++digits[pos] == pl) digits[pos++] = 0;
        if (pos == d) throw std::runtime_error("no primitive polynomial found");
    }
}

}  // namespace

GaloisRing::GaloisRing(const mpz_class& p, int d, unsigned long L) : p_(p), d_(d), L_(L) {
    if (!is_prime_small(p)) throw std::invalid_argument("GaloisRing: p must be prime");
    if (d < 1 || L < 1) throw std::invalid_argument("GaloisRing: d, L >= 1");
    mod_ = pow_int(p, L);

    Poly g0 = find_primitive_poly(p, d);  // over F_p, lifted naively
    // Teichmueller lift of the root: iterate tau <- tau^{p^d} until stable mod p^L
    Poly tau = poly_mod({0, 1}, g0, mod_);
    mpz_class pd = pow_int(p, d);
    for (unsigned long it = 0; it <= L_; ++it) tau = poly_pow(tau, pd, g0, mod_);

    // conjugates tau^{p^k}; minimal polynomial prod (X - tau_k) has scalar coeffs
    std::vector<Poly> conj(d);
    conj[0] = tau;
    for (int k = 1; k < d; ++k) conj[k] = poly_pow(conj[k - 1], p, g0, mod_);
    // multiply out prod (X - tau_k): coefficients in R0, tracked as vector<Poly>
    std::vector<Poly> coef(1, Poly(d, 0));
    coef[0][0] = 1;  // polynomial "1"
    for (int k = 0; k < d; ++k) {
        std::vector<Poly> next(coef.size() + 1, Poly(d, 0));
        for (size_t i = 0; i < coef.size(); ++i) {
            // X * coef_i
            for (int j = 0; j < d; ++j) next[i + 1][j] = mod_nonneg(next[i + 1][j] + coef[i][j], mod_);
            // -tau_k * coef_i
            Poly prod = poly_mul(coef[i], conj[k], g0, mod_);
            for (int j = 0; j < d; ++j) next[i][j] = mod_nonneg(next[i][j] - prod[j], mod_);
        }
        coef = std::move(next);
    }
    g_.assign(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        for (int j = 1; j < d; ++j)
            if (coef[i][j] != 0)
                throw std::runtime_error("GaloisRing: minimal polynomial not rational");
        g_[i] = coef[i][0];
    }
    if (g_[d] != 1) throw std::runtime_error("GaloisRing: modulus not monic");

    // xi = X in Z/p^L[X]/(g); Frobenius images xi^{p^k}
    fr_.resize(d);
    Poly gi(g_.begin(), g_.end());
    Poly x = poly_mod({0, 1}, gi, mod_);
    fr_[0] = x;
    for (int k = 1; k < d; ++k) fr_[k] = poly_pow(fr_[k - 1], p, gi, mod_);
    // sanity: xi^{p^d} = xi (Teichmueller stability of the new modulus)
    Poly back = poly_pow(fr_[d - 1], p, gi, mod_);
    if (back != x) throw std::runtime_error("GaloisRing: Frobenius does not close up");
}

GrElem GaloisRing::one() const {
    GrElem e = zero();
    e.c[0] = 1;
    return e;
}
GrElem GaloisRing::xi() const {
    GrElem e = zero();
    if (d_ == 1) {
        e.c[0] = mod_nonneg(-g_[0], mod_);  // the Teichmueller root itself
        return e;
    }
    e.c[1] = 1;
    return e;
}
GrElem GaloisRing::from_int(const mpz_class& a) const {
    GrElem e = zero();
    e.c[0] = mod_nonneg(a, mod_);
    return e;
}

GrElem GaloisRing::reduce_poly(std::vector<mpz_class> c) const {
    Poly g(g_.begin(), g_.end());
    return {poly_mod(std::move(c), g, mod_)};
}

GrElem GaloisRing::add(const GrElem& a, const GrElem& b) const {
    GrElem r = zero();
    for (int i = 0; i < d_; ++i) r.c[i] = mod_nonneg(a.c[i] + b.c[i], mod_);
    return r;
}
GrElem GaloisRing::sub(const GrElem& a, const GrElem& b) const {
    GrElem r = zero();
    for (int i = 0; i < d_; ++i) r.c[i] = mod_nonneg(a.c[i] - b.c[i], mod_);
    return r;
}
GrElem GaloisRing::neg(const GrElem& a) const { return sub(zero(), a); }

GrElem GaloisRing::mul(const GrElem& a, const GrElem& b) const {
    std::vector<mpz_class> r(2 * d_ - 1, 0);
    for (int i = 0; i < d_; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < d_; ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return reduce_poly(std::move(r));
}

GrElem GaloisRing::scalar_mul(const mpz_class& s, const GrElem& a) const {
    GrElem r = zero();
    for (int i = 0; i < d_; ++i) r.c[i] = mod_nonneg(s * a.c[i], mod_);
    return r;
}

GrElem GaloisRing::frobenius(const GrElem& a, int k) const {
    k = ((k % d_) + d_) % d_;
    if (k == 0) return a;
    // sigma^k(sum a_i xi^i) = sum a_i (xi^{p^k})^i
    GrElem img = {fr_[k]};
    GrElem acc = from_int(a.c[0]);
    GrElem pw = one();
    for (int i = 1; i < d_; ++i) {
        pw = mul(pw, img);
        acc = add(acc, scalar_mul(a.c[i], pw));
    }
    return acc;
}

mpz_class GaloisRing::trace(const GrElem& a) const {
    GrElem s = a;
    for (int k = 1; k < d_; ++k) s = add(s, frobenius(a, k));
    for (int i = 1; i < d_; ++i)
        if (s.c[i] != 0) throw std::runtime_error("GaloisRing: trace not in prime subring");
    return s.c[0];
}

bool GaloisRing::is_unit(const GrElem& a) const {
    for (int i = 0; i < d_; ++i)
        if (a.c[i] % p_ != 0) return true;
    return false;
}

bool GaloisRing::is_zero(const GrElem& a) const {
    for (int i = 0; i < d_; ++i)
        if (a.c[i] != 0) return false;
    return true;
}

GrElem GaloisRing::inverse(const GrElem& a) const {
    if (!is_unit(a)) throw std::domain_error("GaloisRing: not a unit");
    // Newton: y <- y(2 - a y), starting from the inverse modulo p
    // via Fermat in F_{p^d}: a^{p^d - 2}
    GrElem y = a;
    {
        // compute a^{p^d-2} mod p in the residue field, lift naively
        Poly g(g_.begin(), g_.end());
        Poly av(a.c.begin(), a.c.end());
        for (auto& x : av) x = mod_nonneg(x, p_);
        Poly inv0 = poly_pow(av, pow_int(p_, d_) - 2, g, p_);
        y = {inv0};
    }
    for (unsigned long prec = 1; prec < L_; prec *= 2) {
        GrElem ay = mul(a, y);
        GrElem two_minus = sub(from_int(2), ay);
        y = mul(y, two_minus);
    }
    return y;
}

}  // namespace zetarep
