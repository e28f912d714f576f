#pragma once

#include <map>
#include <string>
#include <vector>

#include "zetarep/birational.hpp"

namespace zetarep {

struct AssumptionViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Xi_{N,eps,delta}(Q,t) = sum over (l, n) in Z x (Z_{>=N})^u of
//   Q^{-min_j (lambda_j(l,n) + eps_j)} t^{-min_j (beta_j(l,n) + delta_j)}.
//
// Assumptions: lambda_0 strictly negative on the positive orthant, beta_0 = 0,
// delta_0 = 0, and some beta_{j0}(l,n) = a l with a >= 1.
struct XiSpec {
    int u = 1;
    int d = 1;
    std::vector<std::vector<long>> lambda;  // d+1 rows, each 1+u coefficients (l first)
    std::vector<std::vector<long>> beta;
    std::vector<long> eps;    // d+1 shifts
    std::vector<long> delta;  // d+1 shifts, delta[0] = 0
    long N = 0;

    static XiSpec from_json(const std::string& text);
    std::string to_json() const;
};

// Certifies the assumptions (negativity checked on the u+1 unit vectors).
void validate_spec(const XiSpec& spec);

// Exact number of lattice points with Q-exponent k and t-exponent e.
mpz_class xi_coefficient(const XiSpec& spec, long k, long e);

// All coefficients with k_min <= k <= k_max, 0 <= e <= e_max.
std::map<std::pair<long, long>, mpz_class> xi_truncate(const XiSpec& spec, long k_min, long k_max,
                                                       long e_max);

// Closed rational form via region decomposition into simplicial cones.
// Guarded at u <= 2.
BiRational xi_rational(const XiSpec& spec);

struct InversionResult {
    bool pass = false;
    int sign = 0;  // (-1)^{u+1}
};

// Xi_{1,0,0}(1/Q, 1/t) = (-1)^{u+1} Xi_{0,0,0}(Q, t); shifts must be zero.
InversionResult inversion_check(const XiSpec& spec);

// Number of decomposition regions containing a lattice point of Z x N_0^u;
// the tie-broken regions partition the domain, so this is 1 everywhere.
// Consistency probe for the N = 0 region systems used by xi_rational.
int xi_region_cover_count(const XiSpec& spec, const std::vector<long>& point);

}  // namespace zetarep
