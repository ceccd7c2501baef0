#include "qb/stability.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qb {

bool Wall::contains(const StabilityParameter& alpha) const {
    if (alpha.weights.size() != normal.size())
        throw std::invalid_argument("vertex-set mismatch in Wall::contains");
    Rat v = to_rat(offset);
    for (std::size_t i = 0; i < normal.size(); ++i) v += to_rat(normal[i]) * alpha.weights[i];
    return v == 0;
}

static void canonicalize(Wall& w) {
    long long content = std::abs(w.offset);
    for (auto n : w.normal) content = std::gcd(content, std::abs(n));
    if (content > 1) {
        for (auto& n : w.normal) n /= content;
        w.offset /= content;
    }
    long long lead = 0;
    for (auto n : w.normal)
        if (n != 0) {
            lead = n;
            break;
        }
    if (lead == 0) {
        w.kind = w.offset == 0 ? Wall::Kind::Everywhere : Wall::Kind::Nowhere;
        if (w.offset != 0) w.offset = 1;  // canonical degenerate form
        return;
    }
    w.kind = Wall::Kind::Regular;
    if (lead < 0) {
        for (auto& n : w.normal) n = -n;
        w.offset = -w.offset;
    }
}

Wall wall_from_subtype(const TypeVector& t, const TypeVector& sub) {
    if (t.entries.size() != sub.entries.size())
        throw std::invalid_argument("vertex-set mismatch in wall_from_subtype");
    if (sub.total_rank() == 0)
        throw std::invalid_argument("wall_from_subtype: subtype has zero total rank");

    long long R = t.total_rank(), Rp = sub.total_rank();
    long long D = t.total_degree(), Dp = sub.total_degree();

    Wall w;
    w.witness_subtype = sub;
    w.normal.reserve(t.entries.size());
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        w.normal.push_back(R * sub.entries[i].rank - Rp * t.entries[i].rank);
    w.offset = R * Dp - Rp * D;
    canonicalize(w);
    return w;
}

WallSet enumerate_walls(const TypeVector& t, const DegreeWindow& window) {
    WallSet out;
    auto cmp = [](const Wall& a, const Wall& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    };
    for (const TypeVector& sub : enumerate_subtypes(t, window)) {
        if (sub.total_rank() == 0) continue;
        Wall w = wall_from_subtype(t, sub);
        auto& dest = w.kind == Wall::Kind::Regular ? out.walls : out.degenerate;
        dest.push_back(std::move(w));
    }
    for (auto* list : {&out.walls, &out.degenerate}) {
        std::sort(list->begin(), list->end(), cmp);
        list->erase(std::unique(list->begin(), list->end()), list->end());
    }
    return out;
}

std::vector<std::size_t> classify_parameter(const StabilityParameter& alpha,
                                            const std::vector<Wall>& walls) {
    std::vector<std::size_t> hit;
    for (std::size_t i = 0; i < walls.size(); ++i)
        if (walls[i].contains(alpha)) hit.push_back(i);
    return hit;
}

SmoothnessReport smoothness_region_check(const Quiver& q, const StabilityParameter& alpha,
                                         const GenusContext& g) {
    if (alpha.weights.size() != q.num_vertices())
        throw std::invalid_argument("vertex-set mismatch in smoothness_region_check");
    Rat bound = to_rat(2 * g.genus - 2);
    SmoothnessReport rep;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        Rat gap = alpha.weights[q.tail_index(a)] - alpha.weights[q.head_index(a)];
        bool ok = gap >= bound;
        rep.arrows.push_back({q.arrows[a].id, gap, ok, gap == bound});
        if (!ok) rep.smooth = false;
    }
    return rep;
}

namespace {

bool gaps_hold(const Quiver& q, const StabilityParameter& alpha, const GenusContext& g,
               bool strict, const std::vector<std::string>* skip, std::string& failed_arrow) {
    Rat bound = to_rat(2 * g.genus - 2);
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        if (skip && std::find(skip->begin(), skip->end(), q.arrows[a].id) != skip->end())
            continue;
        Rat gap = alpha.weights[q.tail_index(a)] - alpha.weights[q.head_index(a)];
        bool ok = strict ? gap > bound : gap >= bound;
        if (!ok) {
            failed_arrow = q.arrows[a].id;
            return false;
        }
    }
    return true;
}

}  // namespace

VanishingCheck h2_vanishing_hypotheses(const Quiver& q, const StabilityParameter& alpha,
                                       const GenusContext& g, const VanishingHypothesis& hyp,
                                       const StabilityFacts& facts) {
    if (alpha.weights.size() != q.num_vertices())
        throw std::invalid_argument("vertex-set mismatch in h2_vanishing_hypotheses");
    using Status = VanishingCheck::Status;
    std::string arrow;

    switch (hyp.which) {
        case VanishingHypothesis::Case::StrictGapAll: {
            if (facts.both_semistable_equal_slope == false)
                return {Status::Violated, "pair not semistable with equal slope"};
            if (!gaps_hold(q, alpha, g, /*strict=*/true, nullptr, arrow))
                return {Status::Violated,
                        "strict gap alpha_at - alpha_ah > 2g-2 fails at arrow '" + arrow + "'"};
            std::string note = facts.both_semistable_equal_slope
                                   ? "semistability supplied by caller"
                                   : "semistability assumed by caller";
            return {Status::Satisfied, "strict gap holds at every arrow; " + note};
        }
        case VanishingHypothesis::Case::WeakGapWithStable: {
            if (!facts.one_stable || !facts.both_semistable_equal_slope)
                return {Status::NotCheckable,
                        "case 3 needs caller-supplied stability facts (one stable, pair "
                        "semistable with equal slope)"};
            if (!*facts.one_stable)
                return {Status::Violated, "neither member supplied as alpha-stable"};
            if (!*facts.both_semistable_equal_slope)
                return {Status::Violated, "pair not semistable with equal slope"};
            if (!gaps_hold(q, alpha, g, /*strict=*/false, nullptr, arrow))
                return {Status::Violated,
                        "gap alpha_at - alpha_ah >= 2g-2 fails at arrow '" + arrow + "'"};
            return {Status::Satisfied, "weak gap holds and one member is alpha-stable"};
        }
        case VanishingHypothesis::Case::MapsInjOrGenSurj: {
            for (std::size_t a = 0; a < q.num_arrows(); ++a) {
                auto it = facts.arrow_certificate.find(q.arrows[a].id);
                if (it == facts.arrow_certificate.end())
                    return {Status::NotCheckable,
                            "case 4 needs a map certificate for arrow '" + q.arrows[a].id + "'"};
                if (!it->second)
                    return {Status::Violated,
                            "arrow '" + q.arrows[a].id + "' has no injective/generically "
                            "surjective certificate"};
            }
            return {Status::Satisfied, "every arrow map certified injective or generically "
                                       "surjective"};
        }
        case VanishingHypothesis::Case::MixedDEpsilon: {
            for (const auto& [id, eps] : hyp.epsilon)
                if (eps < 0)
                    return {Status::Violated, "epsilon_a < 0 at arrow '" + id + "'"};
            if (!facts.both_semistable_equal_slope)
                return {Status::NotCheckable,
                        "case 1 needs caller-supplied semistability facts"};
            if (!*facts.both_semistable_equal_slope)
                return {Status::Violated, "pair not semistable with equal slope"};
            if (!gaps_hold(q, alpha, g, /*strict=*/true, &hyp.D, arrow))
                return {Status::Violated,
                        "strict gap fails at arrow '" + arrow + "' outside D"};
            for (const auto& id : hyp.D) {
                auto it = facts.perturbed_stable.find(id);
                if (it == facts.perturbed_stable.end())
                    return {Status::NotCheckable,
                            "case 1 needs a perturbed-stability fact for arrow '" + id + "'"};
                if (!it->second)
                    return {Status::Violated,
                            "no member is (alpha - eps u)-stable for arrow '" + id + "'"};
                // weak gap on D
                std::size_t a = 0;
                while (a < q.num_arrows() && q.arrows[a].id != id) ++a;
                if (a == q.num_arrows())
                    return {Status::Violated, "D names unknown arrow '" + id + "'"};
                Rat gap = alpha.weights[q.tail_index(a)] - alpha.weights[q.head_index(a)];
                if (gap < to_rat(2 * g.genus - 2))
                    return {Status::Violated,
                            "gap >= 2g-2 fails at arrow '" + id + "' in D"};
            }
            return {Status::Satisfied, "mixed D/epsilon hypothesis satisfied"};
        }
    }
    return {Status::NotCheckable, "unknown case"};
}

DestabilizerCandidates potential_destabilizers(const TypeVector& t,
                                               const StabilityParameter& alpha,
                                               const DegreeWindow& window) {
    if (t.total_rank() == 0)
        throw std::invalid_argument("potential_destabilizers: ambient type has zero total rank");
    Rat mu = alpha_slope(t, alpha);
    DestabilizerCandidates out;
    for (const TypeVector& sub : enumerate_subtypes(t, window)) {
        if (sub.total_rank() == 0) continue;
        Rat s = alpha_slope(sub, alpha);
        if (s > mu)
            out.strict.emplace_back(sub, s - mu);
        else if (s == mu)
            out.ties.push_back(sub);
    }
    return out;
}

}  // namespace qb
