#ifndef QB_P1_HPP
#define QB_P1_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "qb/linalg.hpp"
#include "qb/poly.hpp"
#include "qb/quiver.hpp"

namespace qb {

// Direct sum of line bundles on the genus-0 curve, recorded by summand
// degrees. Stored sorted descending.
struct SplitBundle {
    std::vector<long long> degrees;

    explicit SplitBundle(std::vector<long long> d = {});

    long long rank() const { return static_cast<long long>(degrees.size()); }
    long long degree() const;
};

// Matrix of a bundle map between split bundles: entry (j, k) is a homogeneous
// polynomial of degree tgt_degrees[j] - src_degrees[k] mapping the k-th source
// summand into the j-th target summand; identically zero when that degree is
// negative.
struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Poly> entries;  // row-major

    PolyMatrix() = default;
    PolyMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Poly& at(std::size_t j, std::size_t k) { return entries[j * cols + k]; }
    const Poly& at(std::size_t j, std::size_t k) const { return entries[j * cols + k]; }

    bool is_zero() const;
};

struct QuiverBundleP1 {
    Quiver quiver;
    std::vector<SplitBundle> bundles;  // per vertex
    std::vector<PolyMatrix> maps;      // per arrow, shape rank(E_ah) x rank(E_at)

    TypeVector type() const;

    // Throws on shape or homogeneity violations.
    void validate() const;
};

// The six cohomology dimensions of the two-term complex F0 -> F1 together
// with the hypercohomology dimensions and their alternating sum.
struct HypercohProfile {
    long long h0F0 = 0, h0F1 = 0, h1F0 = 0, h1F1 = 0;
    long long H0 = 0, H1 = 0, H2 = 0;
    long long chi = 0;
};

// dim Hom(O(a), O(b)) = max(b - a + 1, 0).
long long hom_dim(long long a, long long b);

// dim Ext^1(O(a), O(b)) = h1(O(b - a)) = max(a - b - 1, 0).
long long ext1_dim(long long a, long long b);

// Matrix of H^0(F0) -> H^0(F1) on monomial bases; psi |-> per arrow
// psi_ah . phi_a - phi'_a . psi_at. Kernel = Hom(E., E'.).
RatMatrix build_d0(const QuiverBundleP1& E, const QuiverBundleP1& Ep);

// Matrix of H^1(F0) -> H^1(F1) on the two-chart Cech basis: H^1 of a degree-c
// twist has basis the Laurent monomials x0^i x1^j with i, j <= -1, i + j = c;
// composition multiplies and truncates to strictly negative bidegrees.
RatMatrix build_d1(const QuiverBundleP1& E, const QuiverBundleP1& Ep);

HypercohProfile hypercoh_profile(const QuiverBundleP1& E, const QuiverBundleP1& Ep);

// Dimension and basis of the space of quiver-bundle morphisms E. -> E'.,
// obtained by solving the intertwining system phi'_a . f_at = f_ah . phi_a
// coefficient-wise. Deliberately does not go through build_d0.
struct HomSpace {
    long long dimension = 0;
    std::vector<std::vector<PolyMatrix>> basis;  // basis element -> per-vertex f_i
};
HomSpace hom_intertwiners(const QuiverBundleP1& E, const QuiverBundleP1& Ep);

// For one arrow: (dim ker P_a, dim coker d1_a) where
// P_a(xi) = ((phi_a (x) id_K) . xi, xi . phi'_a) with K = O(-2).
// Serre duality makes the two coordinates equal.
std::pair<long long, long long> serre_dual_Pa(const QuiverBundleP1& E, const QuiverBundleP1& Ep,
                                              std::size_t arrow);

enum class Verdict { Stable, StrictlySemistable, Unstable };

struct RankOneResult {
    Verdict verdict = Verdict::Stable;
    // Extremal proper arrow-closed vertex subset (empty for the single-vertex
    // case with no proper subobjects).
    std::vector<std::size_t> witness;
    std::optional<Rat> witness_slope;
};

// Exact stability decision when every vertex has rank 1: sub-Q-bundles are
// exactly the vertex subsets closed under arrows with nonzero map.
RankOneResult rank_one_stability(const QuiverBundleP1& E, const StabilityParameter& alpha);

struct SplitDestabilizer {
    std::vector<std::vector<std::size_t>> summands;  // chosen summand indices per vertex
    TypeVector type;
    Rat slope;
    Rat ambient_slope;
};

// Searches sub-Q-bundles spanned by summand subsets whose complementary arrow
// blocks vanish. A null result does NOT certify stability.
std::optional<SplitDestabilizer> split_destabilizer_search(const QuiverBundleP1& E,
                                                           const StabilityParameter& alpha);

// Certificates used for the H^2-vanishing hypothesis: some maximal minor of
// the polynomial matrix is a nonzero polynomial.
bool generically_injective(const PolyMatrix& m);
bool generically_surjective(const PolyMatrix& m);

struct InstanceLimits {
    int max_vertices = 3;
    int max_rank = 3;
    int max_abs_degree = 4;
};

enum class MapConstraint { None, Injective, GenericallySurjective };

// Deterministic pseudo-random instance pair (E, E') over a common quiver.
// Under a constraint, every arrow map of both members carries the requested
// certificate; bounded resampling, then throws.
std::pair<QuiverBundleP1, QuiverBundleP1> random_instance(std::uint64_t seed,
                                                          const InstanceLimits& limits,
                                                          MapConstraint constraint =
                                                              MapConstraint::None);

}  // namespace qb

#endif
