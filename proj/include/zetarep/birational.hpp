#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zetarep {

struct NonExpandable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoleAtPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotFactorable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Laurent polynomial in (q, t) over Z.
class QTPoly {
   public:
    using Key = std::pair<long, long>;  // (q-exponent, t-exponent)

    QTPoly() = default;
    static QTPoly monomial(long aq, long at, const mpz_class& c) {
        QTPoly p;
        if (c != 0) p.terms_[{aq, at}] = c;
        return p;
    }
    static QTPoly one() { return monomial(0, 0, 1); }
    // 1 - q^a t^b
    static QTPoly binomial(long a, long b) {
        QTPoly p = one();
        p += monomial(a, b, -1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, mpz_class>& terms() const { return terms_; }

    QTPoly& operator+=(const QTPoly& o);
    QTPoly operator+(const QTPoly& o) const {
        QTPoly r = *this;
        r += o;
        return r;
    }
    QTPoly operator-() const;
    QTPoly operator-(const QTPoly& o) const { return *this + (-o); }
    QTPoly operator*(const QTPoly& o) const;

    QTPoly subst_inverse() const;  // (q,t) -> (q^-1, t^-1)
    QTPoly shifted(long dq, long dt) const;

    long min_tdeg() const;
    long max_tdeg() const;
    long min_qdeg() const;
    long max_qdeg() const;

    mpq_class eval(const mpq_class& q0, const mpq_class& t0) const;

    // Exact division by 1 - q^a t^b with (b, a) lexicographically positive.
    std::optional<QTPoly> divided_by_binomial(long a, long b) const;

    bool operator==(const QTPoly& o) const { return terms_ == o.terms_; }

   private:
    std::map<Key, mpz_class> terms_;
};

// (1 - q^a t^b)^mult with (b, a) lex-positive.
struct DenFactor {
    long a = 0;
    long b = 0;
    int mult = 1;
};

// Rational function num / (q^A t^B * prod (1 - q^a t^b)^m) with integer
// coefficients; the carrier of every closed-form zeta.
class BiRational {
   public:
    BiRational() : num_(QTPoly::monomial(0, 0, 0)) {}
    explicit BiRational(QTPoly num) : num_(std::move(num)) {}
    BiRational(QTPoly num, long den_qpow, long den_tpow, std::vector<DenFactor> factors);

    static BiRational monomial(long aq, long at, const mpz_class& c) {
        return BiRational(QTPoly::monomial(aq, at, c));
    }
    static BiRational one() { return BiRational(QTPoly::one()); }
    // 1 / (1 - q^a t^b)
    static BiRational geometric(long a, long b) {
        return BiRational(QTPoly::one(), 0, 0, {DenFactor{a, b, 1}});
    }

    const QTPoly& num() const { return num_; }
    long den_qpow() const { return den_qpow_; }
    long den_tpow() const { return den_tpow_; }
    const std::vector<DenFactor>& den_factors() const { return den_; }
    QTPoly den_poly() const;

    BiRational operator+(const BiRational& o) const;
    BiRational operator-(const BiRational& o) const;
    BiRational operator*(const BiRational& o) const;
    // divisor must reduce to monomial * product of binomials (NotFactorable otherwise)
    BiRational operator/(const BiRational& o) const;

    BiRational subst_inverse() const;
    bool equals(const BiRational& o) const;  // cross-multiplied identity
    bool is_zero() const { return num_.is_zero(); }

    // Cancel denominator factors and monomials against the numerator.
    BiRational reduced() const;

    // Exact value at (q0, t0); factors vanishing there must cancel into the
    // numerator, else PoleAtPoint.
    mpq_class eval(const mpq_class& q0, const mpq_class& t0) const;

    // Taylor coefficients of t^0..t^emax at numeric q = q0 (exact rationals).
    std::vector<mpq_class> expand_coeffs(const mpq_class& q0, long e_max) const;

    // Coefficient table on a (q-exponent, t-exponent) window; exact integers.
    std::map<std::pair<long, long>, mpz_class> expand_table(long k_min, long k_max,
                                                            long e_max) const;

    // max a/b over reduced denominator factors with b >= 1; nullopt = -inf.
    std::optional<mpq_class> abscissa() const;

    std::string to_json() const;

   private:
    void normalize_factor(long a, long b, int mult);
    QTPoly num_;
    long den_qpow_ = 0;
    long den_tpow_ = 0;
    std::vector<DenFactor> den_;
};

}  // namespace zetarep
