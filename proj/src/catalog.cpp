#include "zetarep/catalog.hpp"

namespace zetarep {

namespace {

// u(q^s) as a Laurent polynomial in t = q^{-s}: X = t^{-1}.
QTPoly eval_u_at_x(const std::vector<std::pair<long, long>>& u_terms, bool invert) {
    // u_terms: (exponent of X, coefficient); X = t^{-1} or t when invert
    QTPoly p;
    for (auto [e, c] : u_terms) p += QTPoly::monomial(0, invert ? e : -e, c);
    return p;
}

const std::vector<std::pair<long, long>> kU_gl3 = {{2, 1}, {1, -2}, {0, 1},
                                                   {-1, -2}, {-2, 1}, {-3, -1}};
const std::vector<std::pair<long, long>> kU_u3 = {{2, 1}, {1, 1}, {-2, 1}};

}  // namespace

BiRational gl3_borel(unsigned long r) {
    if (r < 1) throw ParamError("gl3_borel: r >= 1");
    // q^{3(r-1)} * q t^3 * (q - t) * (u(t^{-1}) - q u(t)) / ((1-t)(1-q t^6))
    QTPoly pre = QTPoly::monomial(3 * static_cast<long>(r) - 3 + 1, 3, 1);
    QTPoly qmt = QTPoly::monomial(1, 0, 1) - QTPoly::monomial(0, 1, 1);
    QTPoly core = eval_u_at_x(kU_gl3, false) - QTPoly::monomial(1, 0, 1) * eval_u_at_x(kU_gl3, true);
    return BiRational(pre * qmt * core, 0, 0, {DenFactor{0, 1, 1}, DenFactor{1, 6, 1}}).reduced();
}

BiRational u3_borel(unsigned long r) {
    if (r < 1) throw ParamError("u3_borel: r >= 1");
    // q^{3(r-1)} * q t^2 * (q - t) * (t u(t^{-1}) + q u(t)) / (1-q t^6)
    QTPoly pre = QTPoly::monomial(3 * static_cast<long>(r) - 3 + 1, 2, 1);
    QTPoly qmt = QTPoly::monomial(1, 0, 1) - QTPoly::monomial(0, 1, 1);
    QTPoly core = QTPoly::monomial(0, 1, 1) * eval_u_at_x(kU_u3, false) +
                  QTPoly::monomial(1, 0, 1) * eval_u_at_x(kU_u3, true);
    return BiRational(pre * qmt * core, 0, 0, {DenFactor{1, 6, 1}}).reduced();
}

BiRational vol_gl(int m) {
    if (m < 0) throw ParamError("vol_gl: negative m");
    QTPoly p = QTPoly::one();
    for (int j = 1; j <= m; ++j) p = p * QTPoly::binomial(-j, 0);
    return BiRational(p);
}

BiRational parabolic_volume(int n, int t, const std::vector<int>& J) {
    for (size_t i = 0; i < J.size(); ++i) {
        if (J[i] < 1 || J[i] > t) throw ParamError("parabolic_volume: J not inside {1..t}");
        if (i > 0 && J[i] <= J[i - 1]) throw ParamError("parabolic_volume: J not increasing");
    }
    if (J.empty()) return BiRational::one();
    int xmax = J.back();
    BiRational v = vol_gl(t) * vol_gl(n - t);
    v = v / (vol_gl(t - xmax) * vol_gl(n - t - xmax));
    int prev = 0;
    for (int x : J) {
        v = v / vol_gl(x - prev);
        prev = x;
    }
    return v.reduced();
}

BiRational max_parabolic(int n, int t, unsigned long r) {
    if (!(1 <= t && t <= n - t)) throw ParamError("max_parabolic: need 1 <= t <= n - t");
    if (r < 1) throw ParamError("max_parabolic: r >= 1");
    BiRational sum;
    // subsets of {1..t}
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
        std::vector<int> J;
        for (int j = 1; j <= t; ++j)
            if (mask & (1u << (j - 1))) J.push_back(j);
        BiRational term = parabolic_volume(n, t, J);
        for (int j : J) {
            long w = static_cast<long>(j) * (n - j);
            term = term * BiRational(QTPoly::monomial(0, w, 1), 0, 0, {DenFactor{0, w, 1}});
        }
        sum = sum.is_zero() ? term : (sum + term);
    }
    BiRational pre = BiRational::monomial(static_cast<long>(r) * t * (n - t), 0, 1);
    return (pre * sum).reduced();
}

BiRational division(int n, int d, unsigned long r) {
    if (n < 1 || d < 1) throw ParamError("division: n, d >= 1");
    if (r < 1) throw ParamError("division: r >= 1");
    long dn = static_cast<long>(d) * n;
    QTPoly num = QTPoly::monomial(static_cast<long>(r) * n * d * d, 0, 1) *
                 QTPoly::binomial(-dn, dn);
    return BiRational(num, 0, 0, {DenFactor{0, dn, 1}}).reduced();
}

BiRational catalog(const std::string& name, int n, int t, int d, unsigned long r) {
    if (name == "gl3_borel") return gl3_borel(r);
    if (name == "u3_borel") return u3_borel(r);
    if (name == "max_parabolic") return max_parabolic(n, t, r);
    if (name == "division") return division(n, d, r);
    throw ParamError("unknown catalog entry: " + name);
}

long lemma_index_formula(int n, int t, const OrbitParam& xi) {
    if (xi.u.size() != xi.gamma.size()) throw ParamError("orbit param: length mismatch");
    long total_u = 0;
    for (size_t i = 0; i < xi.u.size(); ++i) {
        if (xi.u[i] < 1) throw ParamError("orbit param: composition parts positive");
        if (xi.gamma[i] >= 0) throw ParamError("orbit param: gamma negative");
        if (i > 0 && xi.gamma[i] <= xi.gamma[i - 1])
            throw ParamError("orbit param: gamma strictly increasing");
        total_u += xi.u[i];
    }
    if (total_u > t) throw ParamError("orbit param: N(u) > t");
    long e = 0, prefix = 0;
    for (size_t i = 0; i < xi.u.size(); ++i) {
        e += -static_cast<long>(xi.u[i]) * xi.gamma[i] * (n - xi.u[i] - 2 * prefix);
        prefix += xi.u[i];
    }
    return e;
}

namespace {
mpq_class vol_gl_at(int m, const mpq_class& q) {
    mpq_class v = 1, qp = 1;
    for (int j = 1; j <= m; ++j) {
        qp /= q;
        v *= (1 - qp);
    }
    return v;
}
mpq_class q_pow(const mpq_class& q, long e) {
    mpq_class r = 1;
    mpq_class b = e >= 0 ? q : mpq_class(1) / q;
    for (long i = 0; i < std::abs(e); ++i) r *= b;
    return r;
}
}  // namespace

mpq_class lemma_orbit_formula(int n, int t, const OrbitParam& xi, const mpq_class& q) {
    lemma_index_formula(n, t, xi);  // validates the parameter
    int N = 0;
    for (int u : xi.u) N += u;
    mpq_class size = vol_gl_at(t, q) * vol_gl_at(n - t, q) /
                     (vol_gl_at(t - N, q) * vol_gl_at(n - t - N, q));
    for (size_t i = 0; i < xi.u.size(); ++i) {
        long e = -(static_cast<long>(n) - N) * xi.gamma[i] * xi.u[i];
        for (size_t j = 0; j < i; ++j) e += (xi.gamma[i] - xi.gamma[j]) * xi.u[i] * xi.u[j];
        size *= q_pow(q, e) / vol_gl_at(xi.u[i], q);
    }
    return size;
}

FeqResult functional_equation_check(const BiRational& R, long expected_exponent) {
    BiRational lhs = R.subst_inverse();
    BiRational rhs = BiRational::monomial(expected_exponent, 0, 1) * R;
    FeqResult res;
    res.pass = lhs.equals(rhs);
    if (!res.pass) res.residual = (lhs - rhs).reduced();
    return res;
}

mpq_class evaluate_at_minus_one(const BiRational& R, const mpq_class& q_value) {
    if (q_value < 2) throw ParamError("evaluate_at_minus_one: q >= 2");
    return R.eval(q_value, q_value);
}

DirichletTally expand(const BiRational& R, const mpz_class& q0, long e_max) {
    auto coeffs = R.expand_coeffs(mpq_class(q0), e_max);
    DirichletTally tally;
    tally.q = q0;
    tally.exact_up_to = e_max;
    for (long e = 0; e <= e_max; ++e) {
        if (coeffs[e] == 0) continue;
        if (coeffs[e].get_den() != 1)
            throw NonExpandable("non-integral Dirichlet coefficient at t^" + std::to_string(e));
        if (coeffs[e] < 0)
            throw NonExpandable("negative Dirichlet coefficient at t^" + std::to_string(e));
        tally.counts[e] = coeffs[e].get_num();
    }
    return tally;
}

std::vector<mpz_class> GelfandSeries::dimensions(const mpz_class& q, int depth) const {
    // m_1 = (q^{d(n+1)}-1)/(q^d-1), m_k = q^{dn} for k >= 2
    mpz_class qd = pow_int(q, d);
    mpz_class qdn = pow_int(q, static_cast<unsigned long>(d) * n);
    mpz_class m1 = (qdn * qd - 1) / (qd - 1);
    std::vector<mpz_class> dims = {1};
    mpz_class prod = 1;
    for (int k = 1; k <= depth; ++k) {
        mpz_class mk = (k == 1) ? m1 : qdn;
        dims.push_back((mk - 1) * prod);
        prod *= mk;
    }
    return dims;
}

mpq_class GelfandSeries::value_at_minus_one(const mpq_class& q) const {
    mpq_class qd = q_pow(q, d);
    mpq_class qdn = q_pow(q, static_cast<long>(d) * n);
    mpq_class A = (qdn - 1) / (qd - 1);
    mpq_class B = qdn * qd - 1;
    return 1 + A * (qd + B / (1 - qdn));
}

mpq_class GelfandSeries::abscissa() const { return mpq_class(0); }

GelfandSeries gelfand_gl(int n, int d) {
    if (n < 1 || d < 1) throw ParamError("gelfand_gl: n, d >= 1");
    return GelfandSeries{n, d};
}

}  // namespace zetarep
