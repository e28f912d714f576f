#include "zetarep/lie_lattice.hpp"

#include <json.hpp>

#include <array>
#include <numeric>
#include <sstream>

#include "zetarep/smith.hpp"

namespace zetarep {

namespace {

// Row echelon rank over Q.
size_t rank_q(std::vector<std::vector<mpq_class>> a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

// Solve M x = b for the unique solution of a full-column-rank system;
// returns nullopt when inconsistent.
std::optional<std::vector<mpq_class>> solve_q(std::vector<std::vector<mpq_class>> m,
                                              std::vector<mpq_class> b) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        std::swap(b[r], b[piv]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < cols) return std::nullopt;  // not full column rank
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<mpq_class> x(cols, 0);
    for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / m[i][pivot_col[i]];
    return x;
}

}  // namespace

void LieLattice::validate() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                if (c(i, j, k) != -c(j, i, k)) {
                    std::ostringstream os;
                    os << "antisymmetry fails at (" << labels_[i] << "," << labels_[j] << ") coeff "
                       << labels_[k];
                    throw AntisymmetryViolation(os.str());
                }
    // [[Yi,Yj],Yk] + [[Yj,Yk],Yi] + [[Yk,Yi],Yj] = 0
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            for (int k = j + 1; k < n_; ++k)
                for (int l = 0; l < n_; ++l) {
                    mpq_class s = 0;
                    for (int m = 0; m < n_; ++m) {
                        if (c(i, j, m) != 0) s += c(i, j, m) * c(m, k, l);
                        if (c(j, k, m) != 0) s += c(j, k, m) * c(m, i, l);
                        if (c(k, i, m) != 0) s += c(k, i, m) * c(m, j, l);
                    }
                    if (s != 0) {
                        std::ostringstream os;
                        os << "Jacobi fails on (" << labels_[i] << "," << labels_[j] << ","
                           << labels_[k] << ") coeff " << labels_[l];
                        throw JacobiViolation(os.str());
                    }
                }
}

std::vector<std::vector<LinForm>> LieLattice::commutator_matrix() const {
    std::vector<std::vector<LinForm>> m(n_, std::vector<LinForm>(n_, LinForm(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                if (c(i, j, k) != 0) {
                    const mpq_class& v = c(i, j, k);
                    if (v.get_den() != 1)
                        throw ParamError("commutator_matrix: non-integral structure constant");
                    m[i][j].c[k] = v.get_num();
                }
    return m;
}

LieLattice LieLattice::scaled(const mpz_class& p, unsigned long r) const {
    LieLattice s(n_, labels_);
    mpq_class f(pow_int(p, r));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) s.c_[idx(i, j, k)] = c(i, j, k) * f;
    return s;
}

SplitLattice::SplitLattice(LieLattice lat, int m_plus_1, bool check_fab)
    : lat_(std::move(lat)), m1_(m_plus_1) {
    const int n = lat_.rank();
    if (m1_ < 0 || m1_ > n) throw ParamError("SplitLattice: m_plus_1 out of range");
    lat_.validate();
    // h must be closed under the bracket: no complement coordinates on [h,h].
    for (int i = m1_; i < n; ++i)
        for (int j = m1_; j < n; ++j)
            for (int k = 0; k < m1_; ++k)
                if (lat_.c(i, j, k) != 0)
                    throw ParamError("SplitLattice: h is not a Lie sublattice");
    // |g : h + [g,g]| finite iff pr_k([g,g]) has full rank over the fraction field.
    std::vector<std::vector<mpq_class>> proj;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<mpq_class> row(m1_);
            bool nonzero = false;
            for (int k = 0; k < m1_; ++k) {
                row[k] = lat_.c(i, j, k);
                nonzero = nonzero || row[k] != 0;
            }
            if (nonzero) proj.push_back(std::move(row));
        }
    fab_ = (m1_ == 0) || (rank_q(proj) == static_cast<size_t>(m1_));
    if (check_fab && !fab_)
        throw RelativeFAbViolation("|g : h + [g,g]| is infinite for this split");
}

std::vector<std::vector<LinForm>> SplitLattice::reduced_commutator_matrix() const {
    auto full = lat_.commutator_matrix();
    const int n = lat_.rank();
    std::vector<std::vector<LinForm>> red(n, std::vector<LinForm>(n, LinForm(m1_)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < m1_; ++k) red[i][j].c[k] = full[i][j].c[k];
    return red;
}

LieLattice SplitLattice::h_sublattice() const {
    const int n = lat_.rank(), h = n - m1_;
    std::vector<std::string> labels(lat_.labels().begin() + m1_, lat_.labels().end());
    LieLattice sub(h, labels);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            for (int k = 0; k < h; ++k)
                sub.set_c(i, j, k, lat_.c(i + m1_, j + m1_, k + m1_));
    sub.validate();
    return sub;
}

SplitLattice SplitLattice::scaled(const mpz_class& p, unsigned long r) const {
    return SplitLattice(lat_.scaled(p, r), m1_, false);
}

long SplitLattice::f1_content_epsilon(const mpz_class& p) const {
    if (m1_ == 0) return 0;
    if (!fab_) throw RelativeFAbViolation("f1_content_epsilon needs a relatively FAb split");
    const int n = lat_.rank();
    std::vector<std::vector<mpq_class>> proj;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<mpq_class> row(m1_);
            for (int k = 0; k < m1_; ++k) row[k] = lat_.c(i, j, k);
            proj.push_back(std::move(row));
        }
    auto nu = smith_valuations_rect(std::move(proj), p);
    if (nu.size() != static_cast<size_t>(m1_))
        throw RelativeFAbViolation("f1_content_epsilon: projection lost rank");
    long eps = 0;
    for (long v : nu) eps = std::max(eps, v);
    return eps;
}

bool permissible_level(const mpz_class& p, unsigned long r) {
    if (p == 2) return r >= 2;
    return r >= 1;  // ceil(1/(p-2)) = 1 for every odd prime
}

mpz_class default_nonresidue(const mpz_class& p) {
    if (p == 2) throw ParamError("no quadratic non-residue convention for p = 2");
    if (p % 4 == 3) return mpz_class(-1);
    for (mpz_class a = 2;; ++a)
        if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) == -1) return a;
}

namespace {

// ---- gl_n with elementary-matrix bases -------------------------------------

struct Elementary {
    int i, j;  // 1-based
};

// [E_{i1,j1}, E_{i2,j2}] = delta_{j1,i2} E_{i1,j2} - delta_{i1,j2} E_{i2,j1}
void set_gl_constants(LieLattice& lat, const std::vector<Elementary>& basis) {
    const int n = static_cast<int>(basis.size());
    auto find = [&](int i, int j) {
        for (int k = 0; k < n; ++k)
            if (basis[k].i == i && basis[k].j == j) return k;
        throw ParamError("gl basis: missing elementary matrix");
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto [i1, j1] = basis[a];
            auto [i2, j2] = basis[b];
            std::vector<std::pair<int, mpq_class>> terms;
            if (j1 == i2) terms.emplace_back(find(i1, j2), 1);
            if (i1 == j2) terms.emplace_back(find(i2, j1), -1);
            for (auto& [k, v] : terms) {
                mpq_class cur = lat.c(a, b, k);
                lat.set_c(a, b, k, cur + v);
            }
        }
}

std::string elabel(int i, int j) {
    return "E" + std::to_string(i) + std::to_string(j);
}

SplitLattice build_gl_borel(int n) {
    if (n < 2) throw ParamError("gl_borel: n >= 2 required");
    std::vector<Elementary> basis;
    // complement: strictly lower triangular, by diagonal depth then row
    for (int depth = n - 1; depth >= 1; --depth)
        for (int i = depth + 1; i <= n; ++i) basis.push_back({i, i - depth});
    const int m1 = static_cast<int>(basis.size());
    // h = Borel: diagonal, then strictly upper by diagonal depth, row descending
    for (int i = 1; i <= n; ++i) basis.push_back({i, i});
    for (int depth = 1; depth <= n - 1; ++depth)
        for (int i = n - depth; i >= 1; --i) basis.push_back({i, i + depth});
    std::vector<std::string> labels;
    for (auto& e : basis) labels.push_back(elabel(e.i, e.j));
    LieLattice lat(static_cast<int>(basis.size()), labels);
    set_gl_constants(lat, basis);
    return SplitLattice(std::move(lat), m1);
}

SplitLattice build_gl_parabolic(int n, int t) {
    if (!(1 <= t && t <= n - t)) throw ParamError("gl_parabolic: need 1 <= t <= n - t");
    std::vector<Elementary> basis;
    for (int i = 1; i <= t; ++i)
        for (int j = t + 1; j <= n; ++j) basis.push_back({i, j});
    const int m1 = static_cast<int>(basis.size());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!(i <= t && j > t)) basis.push_back({i, j});
    std::vector<std::string> labels;
    for (auto& e : basis) labels.push_back(elabel(e.i, e.j));
    LieLattice lat(static_cast<int>(basis.size()), labels);
    set_gl_constants(lat, basis);
    return SplitLattice(std::move(lat), m1);
}

// ---- u3: unitary Lie lattice over o[delta], delta^2 = D --------------------

using EMat = std::array<std::array<mpq_class, 3>, 3>;
struct U3Elem {
    EMat re, im;  // Z = re + delta * im
};

U3Elem u3_mul(const U3Elem& x, const U3Elem& y, const mpq_class& D) {
    U3Elem z;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            mpq_class re = 0, im = 0;
            for (int k = 0; k < 3; ++k) {
                re += x.re[i][k] * y.re[k][j] + D * x.im[i][k] * y.im[k][j];
                im += x.re[i][k] * y.im[k][j] + x.im[i][k] * y.re[k][j];
            }
            z.re[i][j] = re;
            z.im[i][j] = im;
        }
    return z;
}

U3Elem u3_bracket(const U3Elem& x, const U3Elem& y, const mpq_class& D) {
    U3Elem xy = u3_mul(x, y, D), yx = u3_mul(y, x, D);
    U3Elem z;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            z.re[i][j] = xy.re[i][j] - yx.re[i][j];
            z.im[i][j] = xy.im[i][j] - yx.im[i][j];
        }
    return z;
}

std::vector<mpq_class> u3_flat(const U3Elem& x) {
    std::vector<mpq_class> v;
    v.reserve(18);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v.push_back(x.re[i][j]);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v.push_back(x.im[i][j]);
    return v;
}

SplitLattice build_u3(const mpz_class& p, const std::optional<mpz_class>& nonres) {
    if (p == 2) throw ParamError("u3: p must be odd");
    mpz_class D = nonres ? *nonres : default_nonresidue(p);
    if (mpz_legendre(D.get_mpz_t(), p.get_mpz_t()) != -1)
        throw ParamError("u3: delta^2 must be a non-residue unit mod p");
    mpq_class Dq(D);

    auto E = [](int i, int j, bool im, const mpq_class& v) {
        U3Elem z;
        (im ? z.im : z.re)[i - 1][j - 1] = v;
        return z;
    };
    auto add = [](const U3Elem& a, const U3Elem& b) {
        U3Elem z;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                z.re[i][j] = a.re[i][j] + b.re[i][j];
                z.im[i][j] = a.im[i][j] + b.im[i][j];
            }
        return z;
    };

    // complement k: strictly lower triangular part of u3
    std::vector<U3Elem> basis = {
        add(E(2, 1, true, 1), E(3, 2, true, 1)),    // A = delta(E21 + E32)
        add(E(2, 1, false, 1), E(3, 2, false, -1)), // B = E21 - E32
        E(3, 1, true, 1),                           // C = delta E31
        // h = Borel part of u3
        add(E(1, 2, true, 1), E(2, 3, true, 1)),    // delta(E12 + E23)
        add(E(1, 2, false, 1), E(2, 3, false, -1)), // E12 - E23
        E(1, 3, true, 1),                           // delta E13
        add(E(1, 1, false, 1), E(3, 3, false, -1)), // E11 - E33
        add(E(1, 1, true, 1), E(3, 3, true, 1)),    // delta(E11 + E33)
        E(2, 2, true, 1),                           // delta E22
    };
    std::vector<std::string> labels = {"A", "B", "C", "A'", "B'", "C'", "D1", "D2", "D3"};

    // solve the 18x9 coordinate system for each bracket
    std::vector<std::vector<mpq_class>> M(18, std::vector<mpq_class>(9));
    for (int k = 0; k < 9; ++k) {
        auto col = u3_flat(basis[k]);
        for (int r = 0; r < 18; ++r) M[r][k] = col[r];
    }
    LieLattice lat(9, labels);
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b) {
            auto z = u3_flat(u3_bracket(basis[a], basis[b], Dq));
            auto x = solve_q(M, z);
            if (!x) throw ParamError("u3: bracket left the lattice span");
            for (int k = 0; k < 9; ++k)
                if ((*x)[k] != 0) lat.set_c(a, b, k, (*x)[k]);
        }
    return SplitLattice(std::move(lat), 3);
}

// ---- gl_{n+1}(Delta), maximal (1,n)-parabolic ------------------------------

// Scalar basis monomial xi^i Pi^j of Delta; d = 1 gives the base ring, d = 2
// the quadratic model xi^2 = D, sigma(xi) = -xi, Pi^2 = p, Pi xi = -xi Pi.
struct DivScalar {
    int i, j;
};

SplitLattice build_gl_division(int n, int d, int inv, const mpz_class& p,
                               const std::optional<mpz_class>& nonres) {
    if (n < 1) throw ParamError("gl_division: n >= 1 required");
    if (d != 1 && d != 2)
        throw ParamError(
            "gl_division: exact integer structure constants are only modelled for d <= 2");
    if (inv < 1 || inv > d || std::gcd(inv, d) != 1)
        throw ParamError("gl_division: invariant must satisfy gcd(inv, d) = 1");
    mpz_class D = 0;
    if (d == 2) {
        if (p == 2) throw ParamError("gl_division: quadratic model needs odd p");
        D = nonres ? *nonres : default_nonresidue(p);
        if (mpz_legendre(D.get_mpz_t(), p.get_mpz_t()) != -1)
            throw ParamError("gl_division: delta^2 must be a non-residue unit mod p");
    }
    const int N = n + 1, dd = d * d;

    // (scalar product) xi^i Pi^j * xi^i' Pi^j' = coeff * xi^i'' Pi^j''
    auto scalar_mul = [&](DivScalar a, DivScalar b) {
        mpq_class coeff = 1;
        if (d == 2 && a.j == 1 && b.i == 1) coeff = -coeff;  // Pi xi = sigma(xi) Pi
        int i2 = a.i + b.i, j2 = a.j + b.j;
        if (i2 >= d) {
            i2 -= d;
            coeff *= mpq_class(D);
        }
        if (j2 >= d) {
            j2 -= d;
            coeff *= mpq_class(p);
        }
        return std::pair<DivScalar, mpq_class>({i2, j2}, coeff);
    };

    // scalar monomials ordered 1, xi, ..., Pi, xi Pi, ... (Pi-major)
    std::vector<DivScalar> scal;
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) scal.push_back({i, j});

    struct BElem {
        int k, l, s;  // E_{kl} times scal[s]
    };
    std::vector<BElem> basis;
    for (int l = 2; l <= N; ++l)
        for (int s = 0; s < dd; ++s) basis.push_back({1, l, s});
    const int m1 = static_cast<int>(basis.size());
    for (int s = 0; s < dd; ++s) basis.push_back({1, 1, s});
    for (int k = 2; k <= N; ++k)
        for (int l = 1; l <= N; ++l)
            for (int s = 0; s < dd; ++s) basis.push_back({k, l, s});

    auto find = [&](int k, int l, DivScalar sc) {
        for (size_t b = 0; b < basis.size(); ++b)
            if (basis[b].k == k && basis[b].l == l && scal[basis[b].s].i == sc.i &&
                scal[basis[b].s].j == sc.j)
                return static_cast<int>(b);
        throw ParamError("gl_division: basis lookup failed");
    };

    std::vector<std::string> labels;
    for (auto& e : basis) {
        std::string s = "E" + std::to_string(e.k) + std::to_string(e.l);
        if (scal[e.s].i) s = "xi" + s;
        if (scal[e.s].j) s = "Pi" + s;
        labels.push_back(s);
    }
    const int nb = static_cast<int>(basis.size());
    LieLattice lat(nb, labels);
    for (int a = 0; a < nb; ++a)
        for (int b = a + 1; b < nb; ++b) {
            const auto& x = basis[a];
            const auto& y = basis[b];
            // [u E_{kl}, v E_{k'l'}] = delta_{lk'} uv E_{kl'} - delta_{l'k} vu E_{k'l}
            if (x.l == y.k) {
                auto [sc, co] = scalar_mul(scal[x.s], scal[y.s]);
                int t = find(x.k, y.l, sc);
                lat.set_c(a, b, t, lat.c(a, b, t) + co);
            }
            if (y.l == x.k) {
                auto [sc, co] = scalar_mul(scal[y.s], scal[x.s]);
                int t = find(y.k, x.l, sc);
                lat.set_c(a, b, t, lat.c(a, b, t) - co);
            }
        }
    (void)inv;  // d <= 2: the only invariant is 1/2 (or trivial), sigma is fixed
    return SplitLattice(std::move(lat), m1);
}

}  // namespace

SplitLattice build_family(const FamilyParams& params, const mpz_class& p) {
    if (!is_prime_small(p)) throw ParamError("build_family: p must be prime");
    if (params.family == "gl_borel") return build_gl_borel(params.n);
    if (params.family == "gl_parabolic") return build_gl_parabolic(params.n, params.t);
    if (params.family == "u3") return build_u3(p, params.nonresidue);
    if (params.family == "gl_division")
        return build_gl_division(params.n, params.d, params.inv, p, params.nonresidue);
    if (params.family == "heisenberg") return heisenberg_x_line();
    throw ParamError("unknown family: " + params.family);
}

LieLattice heisenberg() {
    LieLattice lat(3, {"X", "Y", "Z"});
    lat.set_c(0, 1, 2, 1);
    lat.validate();
    return lat;
}

SplitLattice heisenberg_x_line() {
    LieLattice lat(3, {"Y", "Z", "X"});
    lat.set_c(0, 2, 1, -1);  // [Y, X] = -Z
    return SplitLattice(std::move(lat), 2, false);
}

SplitLattice load_lattice_json(const std::string& text, bool check_fab) {
    auto j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    int m1 = j.at("m_plus_1").get<int>();
    LieLattice lat(n);
    for (const auto& row : j.at("constants")) {
        if (!row.is_array() || row.size() != 5)
            throw ParamError("lattice json: constants entries must be [i,j,k,num,den]");
        int i = row[0].get<int>(), jj = row[1].get<int>(), k = row[2].get<int>();
        if (i < 1 || i > n || jj < 1 || jj > n || k < 1 || k > n)
            throw ParamError("lattice json: index out of range");
        auto as_mpz = [](const nlohmann::json& v) {
            if (v.is_string()) return mpz_class(v.get<std::string>());
            return mpz_class(static_cast<long>(v.get<long long>()));
        };
        mpz_class num = as_mpz(row[3]), den = as_mpz(row[4]);
        if (den == 0) throw ParamError("lattice json: zero denominator");
        mpq_class v(num, den);
        v.canonicalize();
        lat.set_c(i - 1, jj - 1, k - 1, v);
    }
    return SplitLattice(std::move(lat), m1, check_fab);
}

}  // namespace zetarep
