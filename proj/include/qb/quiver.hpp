#ifndef QB_QUIVER_HPP
#define QB_QUIVER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qb/rational.hpp"

namespace qb {

struct Arrow {
    std::string id;
    std::string tail;
    std::string head;
};

// Finite directed graph. At most one arrow per ordered vertex pair; a loop at
// a vertex counts as the pair (v, v) and is allowed.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t num_vertices() const { return vertices.size(); }
    std::size_t num_arrows() const { return arrows.size(); }

    // Index of a vertex id in declaration order; throws if unknown.
    std::size_t vertex_index(const std::string& id) const;
    bool has_vertex(const std::string& id) const;

    std::size_t tail_index(std::size_t arrow) const { return vertex_index(arrows[arrow].tail); }
    std::size_t head_index(std::size_t arrow) const { return vertex_index(arrows[arrow].head); }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> errors;
    std::vector<std::string> notes;  // e.g. "loop present"
};

ValidationReport validate_quiver(const Quiver& q);

// Throws std::invalid_argument when the quiver is invalid.
void require_valid_quiver(const Quiver& q);

// Per-vertex (rank, degree), aligned with the quiver's vertex order.
struct VertexType {
    long long rank = 0;
    long long degree = 0;

    friend bool operator==(const VertexType&, const VertexType&) = default;
    friend auto operator<=>(const VertexType& a, const VertexType& b) {
        if (auto c = a.rank <=> b.rank; c != 0) return c;
        return a.degree <=> b.degree;
    }
};

struct TypeVector {
    std::vector<VertexType> entries;

    long long total_rank() const;
    long long total_degree() const;
    bool is_zero() const;

    TypeVector operator+(const TypeVector& other) const;

    friend bool operator==(const TypeVector&, const TypeVector&) = default;
    friend auto operator<=>(const TypeVector& a, const TypeVector& b) {
        return a.entries <=> b.entries;
    }
};

// Per-vertex rational weights alpha_i, aligned with vertex order.
struct StabilityParameter {
    std::vector<Rat> weights;
};

struct GenusContext {
    long long genus = 0;

    explicit GenusContext(long long g) : genus(g) {
        if (g < 0) throw std::invalid_argument("genus must be non-negative");
    }
};

// deg_alpha(t) = sum_i (alpha_i r_i + d_i)
Rat alpha_degree(const TypeVector& t, const StabilityParameter& alpha);

// mu_alpha(t) = deg_alpha(t) / total rank; throws on total rank 0.
Rat alpha_slope(const TypeVector& t, const StabilityParameter& alpha);

// Per-vertex closed integer interval for candidate subtype degrees.
struct DegreeWindow {
    std::vector<std::pair<long long, long long>> bounds;  // [lo, hi] per vertex
};

// All t' with 0 <= r'_i <= r_i, d'_i in the window when r'_i > 0 and d'_i = 0
// when r'_i = 0, excluding the zero type and t itself. Sorted ascending in the
// lexicographic order on per-vertex (rank, degree) tuples.
std::vector<TypeVector> enumerate_subtypes(const TypeVector& t, const DegreeWindow& window);

}  // namespace qb

#endif
