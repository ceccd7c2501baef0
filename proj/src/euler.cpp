#include "qb/euler.hpp"

#include <stdexcept>

namespace qb {

long long riemann_roch_chi(long long r, long long d, long long r2, long long d2,
                           const GenusContext& g) {
    if (r < 0 || r2 < 0)
        throw std::invalid_argument("riemann_roch_chi: ranks must be non-negative");
    return (1 - g.genus) * r * r2 + r * d2 - r2 * d;
}

EulerSummary euler_form(const Quiver& q, const TypeVector& t, const TypeVector& t2,
                        const GenusContext& g) {
    if (t.entries.size() != q.num_vertices() || t2.entries.size() != q.num_vertices())
        throw std::invalid_argument("euler_form: vertex-set mismatch");

    EulerSummary s;
    for (std::size_t i = 0; i < q.num_vertices(); ++i) {
        long long c = riemann_roch_chi(t.entries[i].rank, t.entries[i].degree,
                                       t2.entries[i].rank, t2.entries[i].degree, g);
        s.vertex_contributions.push_back(c);
        s.chi += c;
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& tt = t.entries[q.tail_index(a)];
        const auto& th = t2.entries[q.head_index(a)];
        long long c = riemann_roch_chi(tt.rank, tt.degree, th.rank, th.degree, g);
        s.arrow_contributions.push_back(c);
        s.chi -= c;
    }
    return s;
}

long long expected_dimension(const Quiver& q, const TypeVector& t, const GenusContext& g) {
    if (t.total_rank() == 0)
        throw std::invalid_argument("expected_dimension undefined for total rank 0");
    return 1 - euler_form(q, t, t, g).chi;
}

bool extension_additivity_check(const Quiver& q, const TypeVector& t1, const TypeVector& t2,
                                const GenusContext& g) {
    TypeVector sum = t1 + t2;
    long long lhs = euler_form(q, sum, sum, g).chi;
    long long rhs = euler_form(q, t1, t1, g).chi + euler_form(q, t2, t2, g).chi +
                    euler_form(q, t2, t1, g).chi + euler_form(q, t1, t2, g).chi;
    return lhs == rhs;
}

}  // namespace qb
