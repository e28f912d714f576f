#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "zetarep/cyclic_algebra.hpp"

namespace zetarep {

struct NoWitness : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EnumerationBudget : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Spherically homogeneous rooted tree given by a finite branching prefix.
struct TreeSpec {
    std::vector<long> branching;  // m_1, ..., m_D with m_i >= 2
    int depth() const { return static_cast<int>(branching.size()); }
};

// (dimension, multiplicity) pairs of the boundary representation restricted
// to depth D: the trivial constituent plus one of dimension
// (m_i - 1) prod_{j<i} m_j per level.
std::vector<std::pair<mpz_class, mpz_class>> tree_zeta(const TreeSpec& spec);

// Finite-depth automorphism: a permutation per vertex.
struct AutomorphismPortrait {
    std::vector<int> perm;  // child relabelling at this vertex
    std::vector<std::unique_ptr<AutomorphismPortrait>> child;  // indexed pre-permutation

    std::vector<int> apply(const std::vector<int>& word) const;
};

// Orbits of the stabilizer of the base vertex (0,...,0) on layer n, counted
// by constructing an explicit witness automorphism for every equidistant pair.
int orbit_count_layer(const TreeSpec& spec, int n);

// Witness mapping v to w while fixing the base vertex; both at layer n with
// the same common-prefix length against the base.
AutomorphismPortrait tree_witness(const TreeSpec& spec, const std::vector<int>& v,
                                  const std::vector<int>& w);

// ---- projective tree over Delta ----------------------------------------------

struct ProjectiveTreeSpec {
    mpz_class p;
    int n = 1;      // projective dimension: P^n
    int d = 1;      // algebra index; d = 1 means the base ring o
    int inv = 1;    // invariant, gcd(inv, d) = 1
    int k_max = 1;  // deepest layer
    uint64_t budget = 4'000'000;
};

// A point of P^n(Delta/Pi^K) in canonical homogeneous coordinates: the first
// unit coordinate is normalized to 1.
struct ProjPoint {
    std::vector<CycElem> x;
    long level = 0;  // K
};

class ProjectiveTree {
   public:
    explicit ProjectiveTree(const ProjectiveTreeSpec& spec);

    const CyclicAlgebra& algebra() const { return alg_; }
    const ProjectiveTreeSpec& spec() const { return spec_; }

    ProjPoint normalize(std::vector<CycElem> coords, long K) const;
    ProjPoint base_point(long K) const;  // (1 : 0 : ... : 0)
    bool equal(const ProjPoint& a, const ProjPoint& b) const;
    ProjPoint reduce(const ProjPoint& a, long K) const;

    // all points of layer K (canonical representatives), by enumeration
    std::vector<ProjPoint> layer(long K) const;

    // largest j <= level with a == base mod Pi^j
    long sphere_level(const ProjPoint& a) const;

    // g in P_0 with a.g = b; requires equal sphere levels
    std::vector<std::vector<CycElem>> witness(const ProjPoint& a, const ProjPoint& b) const;
    ProjPoint act(const ProjPoint& a, const std::vector<std::vector<CycElem>>& g) const;

   private:
    ProjectiveTreeSpec spec_;
    CyclicAlgebra alg_;
};

// Branching sequence m_1..m_{k_max} computed by enumeration and verified
// against m_1 = (q^{d(n+1)}-1)/(q^d-1), m_k = q^{dn}.
std::vector<mpz_class> projective_layers(const ProjectiveTreeSpec& spec);

}  // namespace zetarep
