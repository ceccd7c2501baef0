#ifndef QB_PROBLEM_HPP
#define QB_PROBLEM_HPP

#include <optional>
#include <string>

#include "qb/p1.hpp"
#include "qb/quiver.hpp"

namespace qb {

// Parsed problem document. Rationals travel as "p/q" strings; polynomial
// entries as coefficient lists ["c0", ..., "cn"] for sum c_i x0^(n-i) x1^i.
// Arrow matrices index summands in the stored (descending-degree) order.
struct Problem {
    Quiver quiver;
    long long genus = 0;
    StabilityParameter alpha;
    std::optional<TypeVector> type;
    std::optional<QuiverBundleP1> bundle;

    // The declared type when present, otherwise the bundle's type.
    TypeVector effective_type() const;
};

// Throws std::invalid_argument with a located message on any schema or
// validation failure (including "bundle section requires genus 0").
Problem parse_problem(const std::string& json_text);

Problem read_problem_file(const std::string& path);

}  // namespace qb

#endif
