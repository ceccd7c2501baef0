#ifndef QB_POLY_HPP
#define QB_POLY_HPP

#include <vector>

#include "qb/rational.hpp"

namespace qb {

// Homogeneous polynomial in x0, x1 with exact rational coefficients.
// coeffs[s] multiplies x0^(n-s) x1^s where n = coeffs.size() - 1.
// The zero polynomial is the empty vector (any required degree).
using Poly = std::vector<Rat>;

inline bool poly_is_zero(const Poly& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

// Product of homogeneous polynomials; degrees add. Zero in, zero out.
Poly poly_mul(const Poly& a, const Poly& b);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);

}  // namespace qb

#endif
