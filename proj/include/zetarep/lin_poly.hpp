#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "zetarep/valuation.hpp"

namespace zetarep {

// Homogeneous integer linear form c_1 T_1 + ... + c_m T_m.
struct LinForm {
    std::vector<mpz_class> c;

    explicit LinForm(size_t m = 0) : c(m, 0) {}
    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
    mpq_class eval(const std::vector<mpq_class>& x) const {
        mpq_class s = 0;
        for (size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0) s += mpq_class(c[k]) * x[k];
        return s;
    }
    mpz_class eval_int(const std::vector<mpz_class>& x) const {
        mpz_class s = 0;
        for (size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0) s += c[k] * x[k];
        return s;
    }
    LinForm operator-() const {
        LinForm r(c.size());
        for (size_t k = 0; k < c.size(); ++k) r.c[k] = -c[k];
        return r;
    }
    bool operator==(const LinForm& o) const { return c == o.c; }
};

// Multivariate polynomial over Z, monomials keyed by exponent vectors.
class IntPoly {
   public:
    using Monomial = std::vector<int>;

    explicit IntPoly(size_t nvars = 0) : nvars_(nvars) {}

    static IntPoly from_linform(const LinForm& f) {
        IntPoly p(f.c.size());
        for (size_t k = 0; k < f.c.size(); ++k) {
            if (f.c[k] == 0) continue;
            Monomial m(f.c.size(), 0);
            m[k] = 1;
            p.terms_[m] = f.c[k];
        }
        return p;
    }
    static IntPoly constant(size_t nvars, const mpz_class& v) {
        IntPoly p(nvars);
        if (v != 0) p.terms_[Monomial(nvars, 0)] = v;
        return p;
    }

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, mpz_class>& terms() const { return terms_; }

    IntPoly& operator+=(const IntPoly& o) {
        for (const auto& [m, v] : o.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end())
                terms_.emplace(m, v);
            else {
                it->second += v;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    IntPoly operator-() const {
        IntPoly r(nvars_);
        for (const auto& [m, v] : terms_) r.terms_[m] = -v;
        return r;
    }
    IntPoly operator*(const IntPoly& o) const {
        IntPoly r(nvars_);
        for (const auto& [m1, v1] : terms_)
            for (const auto& [m2, v2] : o.terms_) {
                Monomial m(nvars_);
                for (size_t k = 0; k < nvars_; ++k) m[k] = m1[k] + m2[k];
                auto it = r.terms_.find(m);
                if (it == r.terms_.end())
                    r.terms_.emplace(std::move(m), v1 * v2);
                else {
                    it->second += v1 * v2;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        return r;
    }

    mpq_class eval(const std::vector<mpq_class>& x) const {
        mpq_class s = 0;
        for (const auto& [m, v] : terms_) {
            mpq_class t(v);
            for (size_t k = 0; k < nvars_; ++k)
                for (int e = 0; e < m[k]; ++e) t *= x[k];
            s += t;
        }
        return s;
    }
    mpz_class eval_int(const std::vector<mpz_class>& x) const {
        mpz_class s = 0;
        for (const auto& [m, v] : terms_) {
            mpz_class t = v;
            for (size_t k = 0; k < nvars_; ++k)
                for (int e = 0; e < m[k]; ++e) t *= x[k];
            s += t;
        }
        return s;
    }

    // Canonical sign: leading (lex-largest) coefficient positive.
    IntPoly sign_normalized() const {
        if (terms_.empty()) return *this;
        if (terms_.rbegin()->second < 0) return -*this;
        return *this;
    }

    bool operator==(const IntPoly& o) const { return terms_ == o.terms_; }
    bool operator<(const IntPoly& o) const { return terms_ < o.terms_; }

   private:
    size_t nvars_;
    std::map<Monomial, mpz_class> terms_;
};

}  // namespace zetarep
