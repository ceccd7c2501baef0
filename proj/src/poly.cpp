#include "qb/poly.hpp"

#include <stdexcept>

namespace qb {

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

static Poly poly_combine(const Poly& a, const Poly& b, int sign) {
    if (a.empty() && b.empty()) return {};
    if (a.empty()) {
        Poly out = b;
        if (sign < 0)
            for (auto& c : out) c = -c;
        return out;
    }
    if (b.empty()) return a;
    if (a.size() != b.size())
        throw std::invalid_argument("homogeneous degree mismatch in polynomial sum");
    Poly out = a;
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += sign < 0 ? Rat(-b[i]) : b[i];
    return out;
}

Poly poly_add(const Poly& a, const Poly& b) { return poly_combine(a, b, +1); }
Poly poly_sub(const Poly& a, const Poly& b) { return poly_combine(a, b, -1); }

}  // namespace qb
