#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace zetarep {

// Exact map e -> r_{q^e}; entries with e <= exact_up_to are final.
struct DirichletTally {
    mpz_class q;
    unsigned long r = 0;
    unsigned long L = 0;
    long exact_up_to = -1;
    std::map<long, mpz_class> counts;

    bool agrees_with(const DirichletTally& other, long e_max) const {
        for (long e = 0; e <= e_max; ++e) {
            mpz_class a = count(e), b = other.count(e);
            if (a != b) return false;
        }
        return true;
    }
    mpz_class count(long e) const {
        auto it = counts.find(e);
        return it == counts.end() ? mpz_class(0) : it->second;
    }

    std::string to_json() const;
    std::string to_csv() const;
};

}  // namespace zetarep
