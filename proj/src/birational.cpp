#include "zetarep/birational.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>

namespace zetarep {

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    for (const auto& [k, v] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end())
            terms_.emplace(k, v);
        else {
            it->second += v;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QTPoly QTPoly::operator-() const {
    QTPoly r;
    for (const auto& [k, v] : terms_) r.terms_[k] = -v;
    return r;
}

QTPoly QTPoly::operator*(const QTPoly& o) const {
    QTPoly r;
    for (const auto& [k1, v1] : terms_)
        for (const auto& [k2, v2] : o.terms_) {
            Key k{k1.first + k2.first, k1.second + k2.second};
            auto it = r.terms_.find(k);
            if (it == r.terms_.end())
                r.terms_.emplace(k, v1 * v2);
            else {
                it->second += v1 * v2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

QTPoly QTPoly::subst_inverse() const {
    QTPoly r;
    for (const auto& [k, v] : terms_) r.terms_[{-k.first, -k.second}] = v;
    return r;
}

QTPoly QTPoly::shifted(long dq, long dt) const {
    QTPoly r;
    for (const auto& [k, v] : terms_) r.terms_[{k.first + dq, k.second + dt}] = v;
    return r;
}

long QTPoly::min_tdeg() const {
    long m = std::numeric_limits<long>::max();
    for (const auto& [k, v] : terms_) m = std::min(m, k.second);
    return m;
}
long QTPoly::max_tdeg() const {
    long m = std::numeric_limits<long>::min();
    for (const auto& [k, v] : terms_) m = std::max(m, k.second);
    return m;
}
long QTPoly::min_qdeg() const {
    long m = std::numeric_limits<long>::max();
    for (const auto& [k, v] : terms_) m = std::min(m, k.first);
    return m;
}
long QTPoly::max_qdeg() const {
    long m = std::numeric_limits<long>::min();
    for (const auto& [k, v] : terms_) m = std::max(m, k.first);
    return m;
}

mpq_class QTPoly::eval(const mpq_class& q0, const mpq_class& t0) const {
    auto powq = [](const mpq_class& x, long e) {
        mpq_class r = 1;
        mpq_class b = e >= 0 ? x : mpq_class(1) / x;
        for (long i = 0; i < std::abs(e); ++i) r *= b;
        return r;
    };
    mpq_class s = 0;
    for (const auto& [k, v] : terms_) s += mpq_class(v) * powq(q0, k.first) * powq(t0, k.second);
    return s;
}

std::optional<QTPoly> QTPoly::divided_by_binomial(long a, long b) const {
    if (b < 0 || (b == 0 && a <= 0))
        throw std::invalid_argument("divided_by_binomial: factor not canonical");
    if (is_zero()) return QTPoly();
    QTPoly rem = *this, quot;
    if (b > 0) {
        const long tmin = min_tdeg();
        while (!rem.is_zero()) {
            long d = rem.max_tdeg();
            if (d - b < tmin) return std::nullopt;
            // cancel every monomial at top t-degree d with quotient term
            // c q^{aq-a} t^{d-b} * (1 - q^a t^b), since leading term is -q^a t^b
            QTPoly qt;
            for (const auto& [k, v] : rem.terms_)
                if (k.second == d) qt += QTPoly::monomial(k.first - a, d - b, -v);
            quot += qt;
            rem += -(qt * QTPoly::binomial(a, b));
        }
        return quot;
    }
    // pure q-binomial: slice by t-degree, divide each slice by 1 - q^a
    const long qmin = min_qdeg();
    while (!rem.is_zero()) {
        auto lead = std::max_element(rem.terms().begin(), rem.terms().end(),
                                     [](const auto& x, const auto& y) {
                                         return x.first.first < y.first.first;
                                     });
        long dq = lead->first.first;
        if (dq - a < qmin) return std::nullopt;
        QTPoly qt;
        for (const auto& [k, v] : rem.terms_)
            if (k.first == dq) qt += QTPoly::monomial(dq - a, k.second, -v);
        quot += qt;
        rem += -(qt * QTPoly::binomial(a, b));
    }
    return quot;
}

// ---- BiRational -------------------------------------------------------------

void BiRational::normalize_factor(long a, long b, int mult) {
    if (mult == 0) return;
    if (a == 0 && b == 0) throw std::invalid_argument("BiRational: zero denominator factor");
    bool flip = (b < 0) || (b == 0 && a < 0);
    if (flip) {
        // 1 - q^a t^b = -q^a t^b (1 - q^{-a} t^{-b})
        den_qpow_ += a * mult;
        den_tpow_ += b * mult;
        if (mult % 2 != 0) num_ = -num_;
        a = -a;
        b = -b;
    }
    for (auto& f : den_)
        if (f.a == a && f.b == b) {
            f.mult += mult;
            return;
        }
    den_.push_back({a, b, mult});
}

BiRational::BiRational(QTPoly num, long den_qpow, long den_tpow, std::vector<DenFactor> factors)
    : num_(std::move(num)), den_qpow_(den_qpow), den_tpow_(den_tpow) {
    for (const auto& f : factors) normalize_factor(f.a, f.b, f.mult);
    std::sort(den_.begin(), den_.end(), [](const DenFactor& x, const DenFactor& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
}

QTPoly BiRational::den_poly() const {
    QTPoly d = QTPoly::monomial(den_qpow_, den_tpow_, 1);
    for (const auto& f : den_)
        for (int i = 0; i < f.mult; ++i) d = d * QTPoly::binomial(f.a, f.b);
    return d;
}

BiRational BiRational::operator*(const BiRational& o) const {
    std::vector<DenFactor> fs = den_;
    fs.insert(fs.end(), o.den_.begin(), o.den_.end());
    return BiRational(num_ * o.num_, den_qpow_ + o.den_qpow_, den_tpow_ + o.den_tpow_, fs);
}

BiRational BiRational::operator+(const BiRational& o) const {
    // a/D + b/E = (a * E + b * D) / (D E)
    QTPoly n = num_ * o.den_poly() + o.num_ * den_poly();
    std::vector<DenFactor> fs = den_;
    fs.insert(fs.end(), o.den_.begin(), o.den_.end());
    BiRational r(std::move(n), den_qpow_ + o.den_qpow_, den_tpow_ + o.den_tpow_, fs);
    return r.reduced();
}

BiRational BiRational::operator-(const BiRational& o) const {
    BiRational neg = o;
    neg.num_ = -neg.num_;
    return *this + neg;
}

BiRational BiRational::operator/(const BiRational& o) const {
    if (o.num_.is_zero()) throw std::domain_error("BiRational: division by zero");
    // invert o: its numerator must be a monomial times binomial factors
    QTPoly n = o.num_;
    std::vector<DenFactor> new_factors;
    // peel binomial factors greedily: try factors appearing in.. we factor by
    // scanning candidate exponents from the support of n.
    auto try_peel = [&](QTPoly& poly) -> bool {
        if (poly.terms().size() < 2) return false;
        // candidate binomial: difference of the lex-smallest term and any other
        auto it0 = poly.terms().begin();
        for (auto it = std::next(it0); it != poly.terms().end(); ++it) {
            long a = it->first.first - it0->first.first;
            long b = it->first.second - it0->first.second;
            if (b < 0 || (b == 0 && a <= 0)) continue;
            auto q = poly.divided_by_binomial(a, b);
            if (q) {
                new_factors.push_back({a, b, 1});
                poly = *q;
                return true;
            }
        }
        return false;
    };
    while (try_peel(n)) {
    }
    if (n.terms().size() != 1)
        throw NotFactorable("divisor numerator is not monomial * binomials");
    auto [mk, mc] = *n.terms().begin();
    if (mc != 1 && mc != -1) {
        // integer content must divide our numerator exactly
        QTPoly scaled;
        for (const auto& [k, v] : num_.terms()) {
            mpz_class qv, rv;
            mpz_fdiv_qr(qv.get_mpz_t(), rv.get_mpz_t(), v.get_mpz_t(), mc.get_mpz_t());
            if (rv != 0) throw NotFactorable("divisor content does not divide numerator");
            scaled += QTPoly::monomial(k.first, k.second, qv);
        }
        BiRational r(scaled * o.den_poly(), den_qpow_ + mk.first, den_tpow_ + mk.second, den_);
        for (const auto& f : new_factors) r.normalize_factor(f.a, f.b, f.mult);
        return r.reduced();
    }
    QTPoly nn = num_ * o.den_poly();
    if (mc == -1) nn = -nn;
    BiRational r(std::move(nn), den_qpow_ + mk.first, den_tpow_ + mk.second, den_);
    for (const auto& f : new_factors) r.normalize_factor(f.a, f.b, f.mult);
    return r.reduced();
}

BiRational BiRational::subst_inverse() const {
    BiRational r;
    r.num_ = num_.subst_inverse();
    r.den_qpow_ = -den_qpow_;
    r.den_tpow_ = -den_tpow_;
    for (const auto& f : den_) r.normalize_factor(-f.a, -f.b, f.mult);
    std::sort(r.den_.begin(), r.den_.end(), [](const DenFactor& x, const DenFactor& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    return r;
}

bool BiRational::equals(const BiRational& o) const {
    return num_ * o.den_poly() == o.num_ * den_poly();
}

BiRational BiRational::reduced() const {
    BiRational r = *this;
    if (r.num_.is_zero()) {
        r.den_.clear();
        r.den_qpow_ = r.den_tpow_ = 0;
        return r;
    }
    std::vector<DenFactor> kept;
    for (auto f : r.den_) {
        while (f.mult > 0) {
            auto q = r.num_.divided_by_binomial(f.a, f.b);
            if (!q) break;
            r.num_ = *q;
            --f.mult;
        }
        if (f.mult > 0) kept.push_back(f);
    }
    r.den_ = std::move(kept);
    // cancel monomials: pull the denominator monomial into the numerator shift
    r.num_ = r.num_.shifted(-r.den_qpow_, -r.den_tpow_);
    r.den_qpow_ = r.den_tpow_ = 0;
    return r;
}

mpq_class BiRational::eval(const mpq_class& q0, const mpq_class& t0) const {
    if (q0 == 0 || t0 == 0) throw std::domain_error("BiRational::eval at zero");
    BiRational r = reduced();
    mpq_class den = 1;
    for (auto f : r.den_) {
        mpq_class fv = QTPoly::binomial(f.a, f.b).eval(q0, t0);
        if (fv == 0) {
            // the factor vanishes at the point: it must cancel symbolically
            while (f.mult > 0) {
                auto q = r.num_.divided_by_binomial(f.a, f.b);
                if (!q) throw PoleAtPoint("denominator factor vanishes at the point");
                r.num_ = *q;
                --f.mult;
            }
            continue;
        }
        for (int i = 0; i < f.mult; ++i) den *= fv;
    }
    return r.num_.eval(q0, t0) / den;
}

std::vector<mpq_class> BiRational::expand_coeffs(const mpq_class& q0, long e_max) const {
    BiRational r = reduced();
    // pure-q binomials must cancel for a bona fide Dirichlet expansion
    for (const auto& f : r.den_)
        if (f.b == 0) throw NonExpandable("pure q-binomial left in denominator");
    if (!r.num_.is_zero() && r.num_.min_tdeg() < 0)
        throw NonExpandable("negative t-powers in reduced numerator");

    auto powq = [&](long e) {
        mpq_class v = 1;
        mpq_class b = e >= 0 ? q0 : mpq_class(1) / q0;
        for (long i = 0; i < std::abs(e); ++i) v *= b;
        return v;
    };
    std::vector<mpq_class> c(e_max + 1, mpq_class(0));
    for (const auto& [k, v] : r.num_.terms())
        if (k.second <= e_max) c[k.second] += mpq_class(v) * powq(k.first);
    for (const auto& f : r.den_)
        for (int m = 0; m < f.mult; ++m) {
            // multiply by sum_j q0^{a j} t^{b j}
            std::vector<mpq_class> nc(e_max + 1, mpq_class(0));
            for (long e = 0; e <= e_max; ++e) {
                if (c[e] == 0) continue;
                mpq_class w = 1;
                for (long j = 0; e + f.b * j <= e_max; ++j) {
                    nc[e + f.b * j] += c[e] * w;
                    w *= powq(f.a);
                }
            }
            c = std::move(nc);
        }
    return c;
}

std::map<std::pair<long, long>, mpz_class> BiRational::expand_table(long k_min, long k_max,
                                                                    long e_max) const {
    BiRational r = reduced();
    if (!r.num_.is_zero() && r.num_.min_tdeg() < 0)
        throw NonExpandable("negative t-powers in reduced numerator");
    std::map<std::pair<long, long>, mpz_class> tab;
    for (const auto& [k, v] : r.num_.terms())
        if (k.second <= e_max) tab[{k.first, k.second}] = v;

    // t-graded factors first (these may lower q-exponents); pure q-binomials
    // last, where truncation above k_max is safe because q only increases.
    std::vector<DenFactor> order = r.den_;
    std::stable_sort(order.begin(), order.end(),
                     [](const DenFactor& x, const DenFactor& y) { return (x.b > 0) > (y.b > 0); });
    for (const auto& f : order)
        for (int m = 0; m < f.mult; ++m) {
            std::map<std::pair<long, long>, mpz_class> nt;
            for (const auto& [ke, v] : tab) {
                if (f.b > 0) {
                    for (long j = 0; ke.second + f.b * j <= e_max; ++j)
                        nt[{ke.first + f.a * j, ke.second + f.b * j}] += v;
                } else {  // b == 0, a > 0 by canonical form
                    for (long kk = ke.first; kk <= k_max; kk += f.a) nt[{kk, ke.second}] += v;
                }
            }
            tab = std::move(nt);
        }
    std::map<std::pair<long, long>, mpz_class> win;
    for (const auto& [ke, v] : tab) {
        if (v == 0) continue;
        if (ke.first >= k_min && ke.first <= k_max && ke.second >= 0 && ke.second <= e_max)
            win[ke] = v;
    }
    return win;
}

std::optional<mpq_class> BiRational::abscissa() const {
    BiRational r = reduced();
    std::optional<mpq_class> best;
    for (const auto& f : r.den_) {
        if (f.b < 1) continue;
        mpq_class cand(f.a, f.b);
        cand.canonicalize();
        if (!best || cand > *best) best = cand;
    }
    return best;
}

std::string BiRational::to_json() const {
    nlohmann::ordered_json j;
    auto num = nlohmann::ordered_json::array();
    for (const auto& [k, v] : num_.terms()) num.push_back({k.first, k.second, v.get_str()});
    j["num"] = num;
    j["den_qpow"] = den_qpow_;
    j["den_tpow"] = den_tpow_;
    auto fs = nlohmann::ordered_json::array();
    for (const auto& f : den_) fs.push_back({f.a, f.b, f.mult});
    j["den_factors"] = fs;
    return j.dump();
}

}  // namespace zetarep
