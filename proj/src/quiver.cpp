#include "qb/quiver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qb {

std::size_t Quiver::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == id) return i;
    throw std::invalid_argument("unknown vertex id: '" + id + "'");
}

bool Quiver::has_vertex(const std::string& id) const {
    return std::find(vertices.begin(), vertices.end(), id) != vertices.end();
}

ValidationReport validate_quiver(const Quiver& q) {
    ValidationReport rep;

    std::set<std::string> seen_vertices;
    for (const auto& v : q.vertices) {
        if (!seen_vertices.insert(v).second) {
            rep.ok = false;
            rep.errors.push_back("duplicate vertex id '" + v + "'");
        }
    }

    std::set<std::string> seen_arrow_ids;
    std::set<std::pair<std::string, std::string>> seen_pairs;
    for (const auto& a : q.arrows) {
        if (!seen_arrow_ids.insert(a.id).second) {
            rep.ok = false;
            rep.errors.push_back("duplicate arrow id '" + a.id + "'");
        }
        bool endpoints_ok = true;
        if (!q.has_vertex(a.tail)) {
            rep.ok = false;
            endpoints_ok = false;
            rep.errors.push_back("arrow '" + a.id + "' has dangling tail '" + a.tail + "'");
        }
        if (!q.has_vertex(a.head)) {
            rep.ok = false;
            endpoints_ok = false;
            rep.errors.push_back("arrow '" + a.id + "' has dangling head '" + a.head + "'");
        }
        if (endpoints_ok) {
            if (!seen_pairs.insert({a.tail, a.head}).second) {
                rep.ok = false;
                rep.errors.push_back("parallel arrows violate paper hypothesis: duplicate pair (" +
                                     a.tail + ", " + a.head + ")");
            }
            if (a.tail == a.head)
                rep.notes.push_back("loop present at vertex '" + a.tail + "'");
        }
    }
    return rep;
}

void require_valid_quiver(const Quiver& q) {
    ValidationReport rep = validate_quiver(q);
    if (!rep.ok) {
        std::string msg = "invalid quiver:";
        for (const auto& e : rep.errors) msg += " " + e + ";";
        throw std::invalid_argument(msg);
    }
}

long long TypeVector::total_rank() const {
    long long s = 0;
    for (const auto& e : entries) s += e.rank;
    return s;
}

long long TypeVector::total_degree() const {
    long long s = 0;
    for (const auto& e : entries) s += e.degree;
    return s;
}

bool TypeVector::is_zero() const {
    for (const auto& e : entries)
        if (e.rank != 0 || e.degree != 0) return false;
    return true;
}

TypeVector TypeVector::operator+(const TypeVector& other) const {
    if (entries.size() != other.entries.size())
        throw std::invalid_argument("type vectors over different vertex sets");
    TypeVector sum;
    sum.entries.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        sum.entries.push_back({entries[i].rank + other.entries[i].rank,
                               entries[i].degree + other.entries[i].degree});
    return sum;
}

static void check_sizes(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string("vertex-set mismatch in ") + what);
}

Rat alpha_degree(const TypeVector& t, const StabilityParameter& alpha) {
    check_sizes(t.entries.size(), alpha.weights.size(), "alpha_degree");
    Rat sum = 0;
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        sum += alpha.weights[i] * static_cast<long>(t.entries[i].rank) +
               static_cast<long>(t.entries[i].degree);
    return sum;
}

Rat alpha_slope(const TypeVector& t, const StabilityParameter& alpha) {
    check_sizes(t.entries.size(), alpha.weights.size(), "alpha_slope");
    long long rk = t.total_rank();
    if (rk == 0)
        throw std::invalid_argument("alpha_slope undefined for total rank 0");
    return alpha_degree(t, alpha) / Rat(static_cast<long>(rk));
}

std::vector<TypeVector> enumerate_subtypes(const TypeVector& t, const DegreeWindow& window) {
    check_sizes(t.entries.size(), window.bounds.size(), "enumerate_subtypes");
    const std::size_t n = t.entries.size();
    if (n == 0) return {};

    // Per-vertex candidate components: the zero component plus every
    // (rank, degree) with 1 <= rank <= r_i and degree inside the window.
    std::vector<std::vector<VertexType>> choices(n);
    for (std::size_t i = 0; i < n; ++i) {
        choices[i].push_back({0, 0});
        auto [lo, hi] = window.bounds[i];
        for (long long r = 1; r <= t.entries[i].rank; ++r)
            for (long long d = lo; d <= hi; ++d)
                choices[i].push_back({r, d});
    }

    std::vector<TypeVector> out;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        TypeVector cand;
        cand.entries.reserve(n);
        for (std::size_t i = 0; i < n; ++i) cand.entries.push_back(choices[i][pick[i]]);
        if (!cand.is_zero() && cand != t) out.push_back(std::move(cand));

        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
            if (i == 0) {
                std::sort(out.begin(), out.end());
                out.erase(std::unique(out.begin(), out.end()), out.end());
                return out;
            }
        }
    }
}

}  // namespace qb
