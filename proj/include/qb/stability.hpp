#ifndef QB_STABILITY_HPP
#define QB_STABILITY_HPP

#include <map>
#include <optional>
#include <string>

#include "qb/quiver.hpp"

namespace qb {

// Locus {alpha : sum_i normal_i alpha_i + offset = 0} where the witness
// subtype's slope ties the ambient type's slope. Integer-cleared canonical
// form: content 1, first nonzero normal coefficient positive. A zero normal
// makes the wall degenerate: the tie holds everywhere (offset 0) or nowhere.
struct Wall {
    enum class Kind { Regular, Everywhere, Nowhere };

    std::vector<long long> normal;
    long long offset = 0;
    TypeVector witness_subtype;
    Kind kind = Kind::Regular;

    bool contains(const StabilityParameter& alpha) const;
    friend bool operator==(const Wall& a, const Wall& b) {
        return a.normal == b.normal && a.offset == b.offset && a.kind == b.kind;
    }
};

// Wall through mu_alpha(sub) = mu_alpha(t): normal_i = R r'_i - R' r_i,
// offset = R D' - R' D with R, D (R', D') the total rank and degree of t (sub).
Wall wall_from_subtype(const TypeVector& t, const TypeVector& sub);

struct WallSet {
    std::vector<Wall> walls;       // non-degenerate, deduplicated, sorted
    std::vector<Wall> degenerate;  // everywhere / nowhere ties, kept separately
};

WallSet enumerate_walls(const TypeVector& t, const DegreeWindow& window);

// Indices (into walls) of the walls alpha lies on; empty means chamber interior.
std::vector<std::size_t> classify_parameter(const StabilityParameter& alpha,
                                            const std::vector<Wall>& walls);

struct ArrowGap {
    std::string arrow_id;
    Rat gap;            // alpha_at - alpha_ah
    bool satisfied;     // gap >= 2g - 2
    bool boundary;      // gap == 2g - 2
};

struct SmoothnessReport {
    bool smooth = true;
    std::vector<ArrowGap> arrows;
};

// Arrow-wise predicate alpha_at - alpha_ah >= 2g - 2 (equality counts).
SmoothnessReport smoothness_region_check(const Quiver& q, const StabilityParameter& alpha,
                                         const GenusContext& g);

// Hypothesis selector for the H^2-vanishing cases.
struct VanishingHypothesis {
    enum class Case {
        MixedDEpsilon = 1,     // subset D of arrows with per-arrow epsilon >= 0
        StrictGapAll = 2,      // alpha_at - alpha_ah > 2g - 2 for all arrows
        WeakGapWithStable = 3, // >= with one of the pair alpha-stable
        MapsInjOrGenSurj = 4,  // per-arrow map certificates
    };
    Case which = Case::StrictGapAll;
    std::vector<std::string> D;          // case 1 only
    std::map<std::string, Rat> epsilon;  // case 1 only, keyed by arrow id
};

// Caller-supplied stability and map facts the parameter arithmetic cannot
// decide by itself (e.g. produced by the rank-one decider or the oracle).
struct StabilityFacts {
    std::optional<bool> both_semistable_equal_slope;
    std::optional<bool> one_stable;
    // case 1: for a in D, one of the pair is (alpha - eps_a u_at)-stable
    std::map<std::string, bool> perturbed_stable;
    // case 4: phi_a injective or phi'_a generically surjective
    std::map<std::string, bool> arrow_certificate;
};

struct VanishingCheck {
    enum class Status { Satisfied, Violated, NotCheckable };
    Status status = Status::NotCheckable;
    std::string justification;
};

VanishingCheck h2_vanishing_hypotheses(const Quiver& q, const StabilityParameter& alpha,
                                       const GenusContext& g, const VanishingHypothesis& hyp,
                                       const StabilityFacts& facts = {});

struct DestabilizerCandidates {
    std::vector<std::pair<TypeVector, Rat>> strict;  // mu(sub) > mu(t), with excess
    std::vector<TypeVector> ties;                    // mu(sub) == mu(t)
};

// Numerical candidates only: no claim an actual sub-Q-bundle of that type exists.
DestabilizerCandidates potential_destabilizers(const TypeVector& t,
                                               const StabilityParameter& alpha,
                                               const DegreeWindow& window);

}  // namespace qb

#endif
