#ifndef QB_RATIONAL_HPP
#define QB_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qb {

// Exact rational scalar used throughout. Stability parameters, wall data and
// all linear algebra stay in Q so slope ties and ranks are decided exactly.
using Rat = mpq_class;
using Int = mpz_class;

// gmpxx has no long long constructor; all our integer data fits in long.
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

// The two-argument mpq_class constructor does not reduce the fraction, which
// breaks exact equality tests; this one does.
inline Rat make_rat(long long num, long long den) {
    Rat q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Rejects q = 0.
inline Rat parse_rational(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

// Lowest terms, denominator positive, "p" when integral.
inline std::string format_rational(const Rat& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace qb

#endif
