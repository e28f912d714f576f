#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetarep/lin_poly.hpp"

namespace zetarep {

struct AntisymmetryViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct JacobiViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RelativeFAbViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Free o-Lie lattice of rank n given by structure constants
// [Y_i, Y_j] = sum_k c[i][j][k] Y_k  (0-based indices internally).
class LieLattice {
   public:
    LieLattice(int n, std::vector<std::string> labels = {})
        : n_(n), labels_(std::move(labels)), c_(static_cast<size_t>(n) * n * n, 0) {
        if (n < 0) throw ParamError("LieLattice: negative rank");
        if (labels_.empty())
            for (int i = 0; i < n; ++i) labels_.push_back("Y" + std::to_string(i + 1));
    }

    int rank() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const mpq_class& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }
    void set_c(int i, int j, int k, const mpq_class& v) {
        c_[idx(i, j, k)] = v;
        c_[idx(j, i, k)] = -v;
    }

    // Coordinates of [Y_i, Y_j].
    std::vector<mpq_class> bracket_basis(int i, int j) const {
        std::vector<mpq_class> r(n_);
        for (int k = 0; k < n_; ++k) r[k] = c(i, j, k);
        return r;
    }

    // Antisymmetry and the Jacobi identity, exactly on all triples.
    // Throws AntisymmetryViolation / JacobiViolation with a witness.
    void validate() const;

    // Alternating matrix of linear forms R(T)_{ij} = sum_k c_{ijk} T_k.
    std::vector<std::vector<LinForm>> commutator_matrix() const;

    // Structure constants multiplied by p^r.
    LieLattice scaled(const mpz_class& p, unsigned long r) const;

   private:
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(i) * n_ + j) * n_ + k;
    }
    int n_;
    std::vector<std::string> labels_;
    std::vector<mpq_class> c_;
};

// Lattice with a designated complement/subalgebra split: the first m+1 basis
// vectors span the complement k, the rest span the Lie sublattice h.
class SplitLattice {
   public:
    // check_fab: reject splits with |g : h + [g,g]| infinite.
    SplitLattice(LieLattice lat, int m_plus_1, bool check_fab = true);

    const LieLattice& lattice() const { return lat_; }
    int rank() const { return lat_.rank(); }
    int m_plus_1() const { return m1_; }
    int h_rank() const { return lat_.rank() - m1_; }
    bool relatively_fab() const { return fab_; }

    // Commutator matrix with the h-variables set to zero; entries are forms
    // in T_1..T_{m+1} only.
    std::vector<std::vector<LinForm>> reduced_commutator_matrix() const;

    // Structure constants of h with respect to its own basis.
    LieLattice h_sublattice() const;

    SplitLattice scaled(const mpz_class& p, unsigned long r) const;

    // Largest elementary-divisor exponent of pr_k([g,g]) at p; the content
    // bound epsilon with p^eps * k  contained in pr_k([g,g]). Requires FAb.
    long f1_content_epsilon(const mpz_class& p) const;

   private:
    LieLattice lat_;
    int m1_;
    bool fab_;
};

// ---- catalog families ------------------------------------------------------

struct FamilyParams {
    std::string family;  // gl_borel | gl_parabolic | u3 | gl_division | heisenberg
    int n = 0;           // gl_borel/gl_parabolic: matrix size; gl_division: GL_{n+1}
    int t = 0;           // gl_parabolic block type (t, n-t)
    int d = 1;           // gl_division: algebra index
    int inv = 1;         // gl_division: invariant h, gcd(h, d) = 1
    std::optional<mpz_class> nonresidue;  // u3/gl_division d=2: delta^2
};

// Permissibility bound for the congruence level: r >= 2 when p = 2,
// r >= ceil(1/(p-2)) when p > 2.
bool permissible_level(const mpz_class& p, unsigned long r);

// Default non-residue: -1 when p = 3 (mod 4), else the smallest positive one.
mpz_class default_nonresidue(const mpz_class& p);

SplitLattice build_family(const FamilyParams& params, const mpz_class& p);

// Heisenberg lattice [X,Y] = Z with basis ordered (Y, Z, X), h = span(X).
// Not relatively FAb; used for orbit-method consistency checks.
SplitLattice heisenberg_x_line();
// Same lattice, h = 0 i.e. the full dual (basis order X, Y, Z).
LieLattice heisenberg();

// Custom-lattice ingestion, JSON with fields n, m_plus_1 and constants as
// flat triples [i, j, k, num, den] (1-based). Runs validate and split checks.
SplitLattice load_lattice_json(const std::string& text, bool check_fab = true);

}  // namespace zetarep
