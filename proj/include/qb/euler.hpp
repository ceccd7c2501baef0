#ifndef QB_EULER_HPP
#define QB_EULER_HPP

#include "qb/quiver.hpp"

namespace qb {

// chi with its per-vertex / per-arrow breakdown:
// chi = sum(vertex_contributions) - sum(arrow_contributions).
struct EulerSummary {
    long long chi = 0;
    std::vector<long long> vertex_contributions;
    std::vector<long long> arrow_contributions;
};

// chi(E, F) = (1-g) rk(E) rk(F) + rk(E) deg(F) - rk(F) deg(E) on a genus-g curve.
long long riemann_roch_chi(long long r, long long d, long long r2, long long d2,
                           const GenusContext& g);

// chi(E., E'.) = sum_i chi(E_i, E'_i) - sum_a chi(E_at, E'_ah), from types alone.
EulerSummary euler_form(const Quiver& q, const TypeVector& t, const TypeVector& t2,
                        const GenusContext& g);

// Expected moduli dimension at a smooth point: 1 - chi(E., E.).
long long expected_dimension(const Quiver& q, const TypeVector& t, const GenusContext& g);

// chi(t'+t'', t'+t'') == chi(t',t') + chi(t'',t'') + chi(t'',t') + chi(t',t'')
// holds identically by bilinearity; this evaluates both sides.
bool extension_additivity_check(const Quiver& q, const TypeVector& t1, const TypeVector& t2,
                                const GenusContext& g);

}  // namespace qb

#endif
