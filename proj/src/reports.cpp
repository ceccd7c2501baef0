#include "qb/reports.hpp"

#include <sstream>

#include "qb/euler.hpp"
#include "qb/stability.hpp"

namespace qb {

using nlohmann::json;

namespace {

std::string type_to_string(const TypeVector& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(t.entries[i].rank) + "," +
             std::to_string(t.entries[i].degree) + ")";
    }
    return s + ")";
}

json type_to_json(const Quiver& q, const TypeVector& t) {
    json j = json::object();
    for (std::size_t i = 0; i < q.num_vertices(); ++i)
        j[q.vertices[i]] = {{"rank", t.entries[i].rank}, {"degree", t.entries[i].degree}};
    return j;
}

std::string wall_equation(const Quiver& q, const Wall& w) {
    std::string lhs;
    for (std::size_t i = 0; i < w.normal.size(); ++i) {
        long long c = w.normal[i];
        if (c == 0) continue;
        std::string term = "alpha_" + q.vertices[i];
        if (c == 1)
            lhs += lhs.empty() ? term : " + " + term;
        else if (c == -1)
            lhs += lhs.empty() ? "-" + term : " - " + term;
        else if (c > 0)
            lhs += (lhs.empty() ? "" : " + ") + std::to_string(c) + "*" + term;
        else
            lhs += (lhs.empty() ? "-" : " - ") + std::to_string(-c) + "*" + term;
    }
    return lhs + " = " + std::to_string(-w.offset);
}

}  // namespace

OracleChecks run_oracle_battery(const QuiverBundleP1& E, const QuiverBundleP1& Ep) {
    OracleChecks c;
    c.profile = hypercoh_profile(E, Ep);
    const HypercohProfile& pr = c.profile;

    long long rr = euler_form(E.quiver, E.type(), Ep.type(), GenusContext(0)).chi;
    c.chi_agrees = pr.chi == rr;

    c.alternating_sum =
        pr.H0 - pr.h0F0 + pr.h0F1 - pr.H1 + pr.h1F0 - pr.h1F1 + pr.H2 == 0;

    c.hom_agrees = hom_intertwiners(E, Ep).dimension == pr.H0;

    c.serre_duality = true;
    for (std::size_t a = 0; a < E.quiver.num_arrows(); ++a) {
        auto [ker, coker] = serre_dual_Pa(E, Ep, a);
        if (ker != coker) c.serre_duality = false;
    }

    // The certificate criterion only covers arrows between distinct vertices:
    // on a loop the differential is a commutator and can degenerate even for
    // injective maps.
    c.vanishing_applicable = true;
    for (std::size_t a = 0; a < E.quiver.num_arrows(); ++a) {
        if (E.quiver.arrows[a].tail == E.quiver.arrows[a].head)
            c.vanishing_applicable = false;
        else if (!generically_injective(E.maps[a]) && !generically_surjective(Ep.maps[a]))
            c.vanishing_applicable = false;
    }
    if (c.vanishing_applicable) c.vanishing_holds = pr.H2 == 0;

    c.ext1_applicable = pr.H2 == 0;
    if (c.ext1_applicable) c.ext1_holds = pr.H1 == pr.H0 - pr.chi;

    c.pass = c.chi_agrees && c.alternating_sum && c.hom_agrees && c.serre_duality &&
             (!c.vanishing_applicable || c.vanishing_holds) &&
             (!c.ext1_applicable || c.ext1_holds);
    return c;
}

json report_euler(const Problem& p) {
    TypeVector t = p.effective_type();
    EulerSummary s = euler_form(p.quiver, t, t, GenusContext(p.genus));
    json vc = json::object(), ac = json::object();
    for (std::size_t i = 0; i < p.quiver.num_vertices(); ++i)
        vc[p.quiver.vertices[i]] = s.vertex_contributions[i];
    for (std::size_t a = 0; a < p.quiver.num_arrows(); ++a)
        ac[p.quiver.arrows[a].id] = s.arrow_contributions[a];
    return {{"command", "euler"},
            {"chi", s.chi},
            {"vertex_contributions", vc},
            {"arrow_contributions", ac}};
}

json report_dim(const Problem& p) {
    TypeVector t = p.effective_type();
    long long chi = euler_form(p.quiver, t, t, GenusContext(p.genus)).chi;
    long long dim = expected_dimension(p.quiver, t, GenusContext(p.genus));
    return {{"command", "dim"}, {"chi", chi}, {"dimension", dim}};
}

json report_smooth(const Problem& p) {
    SmoothnessReport rep = smoothness_region_check(p.quiver, p.alpha, GenusContext(p.genus));
    json arrows = json::array();
    for (const auto& a : rep.arrows)
        arrows.push_back({{"id", a.arrow_id},
                          {"gap", format_rational(a.gap)},
                          {"satisfied", a.satisfied},
                          {"boundary", a.boundary}});
    return {{"command", "smooth"},
            {"bound", 2 * p.genus - 2},
            {"smooth", rep.smooth},
            {"arrows", arrows}};
}

json report_walls(const Problem& p, long long lo, long long hi) {
    TypeVector t = p.effective_type();
    DegreeWindow win;
    win.bounds.assign(p.quiver.num_vertices(), {lo, hi});
    WallSet ws = enumerate_walls(t, win);

    json walls = json::array();
    for (const auto& w : ws.walls) {
        json normal = json::object();
        for (std::size_t i = 0; i < w.normal.size(); ++i)
            normal[p.quiver.vertices[i]] = w.normal[i];
        walls.push_back({{"equation", wall_equation(p.quiver, w)},
                         {"normal", normal},
                         {"offset", w.offset},
                         {"witness", type_to_string(w.witness_subtype)},
                         {"on_wall", w.contains(p.alpha)}});
    }
    std::size_t everywhere = 0, nowhere = 0;
    for (const auto& w : ws.degenerate)
        (w.kind == Wall::Kind::Everywhere ? everywhere : nowhere)++;

    auto hits = classify_parameter(p.alpha, ws.walls);
    return {{"command", "walls"},
            {"window", {lo, hi}},
            {"walls", walls},
            {"degenerate", {{"everywhere", everywhere}, {"nowhere", nowhere}}},
            {"alpha_classification", hits.empty() ? "chamber-interior" : "on-wall"},
            {"walls_hit", hits}};
}

json report_stability(const Problem& p) {
    if (!p.bundle)
        throw std::invalid_argument("stability requires a bundle section");
    const QuiverBundleP1& E = *p.bundle;

    bool rank_one = true;
    for (const auto& b : E.bundles)
        if (b.rank() != 1) rank_one = false;

    if (rank_one) {
        RankOneResult r = rank_one_stability(E, p.alpha);
        std::string verdict = r.verdict == Verdict::Stable ? "STABLE"
                              : r.verdict == Verdict::StrictlySemistable
                                  ? "STRICTLY SEMISTABLE"
                                  : "UNSTABLE";
        json witness = json::array();
        for (auto i : r.witness) witness.push_back(E.quiver.vertices[i]);
        json j = {{"command", "stability"},
                  {"mode", "rank-one"},
                  {"verdict", verdict},
                  {"witness", witness}};
        if (r.witness_slope) j["witness_slope"] = format_rational(*r.witness_slope);
        return j;
    }

    auto d = split_destabilizer_search(E, p.alpha);
    json j = {{"command", "stability"}, {"mode", "split-search"}};
    if (d) {
        j["verdict"] = "UNSTABLE (split destabilizer)";
        j["witness_type"] = type_to_string(d->type);
        j["witness_slope"] = format_rational(d->slope);
        j["ambient_slope"] = format_rational(d->ambient_slope);
    } else {
        j["verdict"] = "NO SPLIT DESTABILIZER (inconclusive)";
    }
    return j;
}

namespace {

json checks_to_json(const OracleChecks& c) {
    const auto& pr = c.profile;
    return {{"H", {pr.H0, pr.H1, pr.H2}},
            {"chi", pr.chi},
            {"terms", {{"h0F0", pr.h0F0}, {"h0F1", pr.h0F1}, {"h1F0", pr.h1F0},
                       {"h1F1", pr.h1F1}}},
            {"chi_agrees", c.chi_agrees},
            {"alternating_sum", c.alternating_sum},
            {"hom_agrees", c.hom_agrees},
            {"serre_duality", c.serre_duality},
            {"vanishing_applicable", c.vanishing_applicable},
            {"vanishing_holds", c.vanishing_holds},
            {"ext1_applicable", c.ext1_applicable},
            {"ext1_holds", c.ext1_holds},
            {"pass", c.pass}};
}

}  // namespace

json report_oracle_verify(const Problem& p) {
    if (p.genus != 0)
        throw std::invalid_argument("oracle requires genus 0");
    if (!p.bundle)
        throw std::invalid_argument("oracle-verify requires a bundle section");
    OracleChecks c = run_oracle_battery(*p.bundle, *p.bundle);
    json j = checks_to_json(c);
    j["command"] = "oracle-verify";
    j["mode"] = "file";
    return j;
}

json report_oracle_random(std::uint64_t seed, int count, const InstanceLimits& limits) {
    if (count < 1) throw std::invalid_argument("instance count must be positive");
    int passed = 0;
    json failures = json::array();
    for (int i = 0; i < count; ++i) {
        auto [E, Ep] = random_instance(seed + static_cast<std::uint64_t>(i), limits);
        OracleChecks c = run_oracle_battery(E, Ep);
        if (c.pass) {
            ++passed;
        } else {
            json f = checks_to_json(c);
            f["instance_seed"] = seed + static_cast<std::uint64_t>(i);
            failures.push_back(std::move(f));
        }
    }
    return {{"command", "oracle-verify"},
            {"mode", "random"},
            {"seed", seed},
            {"count", count},
            {"passed", passed},
            {"failed", count - passed},
            {"failures", failures},
            {"pass", passed == count}};
}

std::string render_text(const std::string& command, const json& r) {
    std::ostringstream out;
    if (command == "euler") {
        out << "chi = " << r["chi"].get<long long>() << "\n";
        for (const auto& [k, v] : r["vertex_contributions"].items())
            out << "  vertex " << k << ": chi = " << v.get<long long>() << "\n";
        for (const auto& [k, v] : r["arrow_contributions"].items())
            out << "  arrow " << k << ": chi = " << v.get<long long>() << "\n";
    } else if (command == "dim") {
        out << "expected dimension = " << r["dimension"].get<long long>()
            << " (chi = " << r["chi"].get<long long>() << ")\n";
    } else if (command == "smooth") {
        out << "SMOOTH REGION: " << (r["smooth"].get<bool>() ? "yes" : "no");
        bool boundary = false;
        for (const auto& a : r["arrows"])
            if (a["boundary"].get<bool>()) boundary = true;
        if (r["smooth"].get<bool>() && boundary) out << " (boundary)";
        out << "\n";
        for (const auto& a : r["arrows"])
            out << "  arrow " << a["id"].get<std::string>() << ": gap "
                << a["gap"].get<std::string>() << " >= " << r["bound"].get<long long>() << " : "
                << (a["satisfied"].get<bool>() ? (a["boundary"].get<bool>() ? "yes (boundary)"
                                                                            : "yes")
                                               : "NO")
                << "\n";
    } else if (command == "walls") {
        const auto& walls = r["walls"];
        if (walls.empty()) {
            out << "no non-degenerate walls";
        } else {
            for (const auto& w : walls)
                out << w["equation"].get<std::string>() << " [witness "
                    << w["witness"].get<std::string>() << "]"
                    << (w["on_wall"].get<bool>() ? " (alpha on wall)" : "") << "\n";
        }
        auto ndeg = r["degenerate"]["everywhere"].get<long long>() +
                    r["degenerate"]["nowhere"].get<long long>();
        if (walls.empty())
            out << "; " << ndeg << " degenerate\n";
        else
            out << "degenerate walls: " << ndeg << "\n";
        out << "alpha: " << r["alpha_classification"].get<std::string>() << "\n";
    } else if (command == "stability") {
        out << r["verdict"].get<std::string>();
        if (r["verdict"] != "STABLE" && r.contains("witness") && !r["witness"].empty()) {
            out << " (witness S={";
            bool first = true;
            for (const auto& v : r["witness"]) {
                if (!first) out << ",";
                out << v.get<std::string>();
                first = false;
            }
            out << "})";
        }
        if (r.contains("witness_type"))
            out << " (witness type " << r["witness_type"].get<std::string>() << ")";
        out << "\n";
    } else if (command == "oracle-verify") {
        if (r["mode"] == "random") {
            out << r["passed"].get<int>() << "/" << r["count"].get<int>() << " pass\n";
            for (const auto& f : r["failures"])
                out << "  FAIL instance seed " << f["instance_seed"].get<std::uint64_t>() << "\n";
        } else {
            const auto& H = r["H"];
            out << "H=(" << H[0].get<long long>() << "," << H[1].get<long long>() << ","
                << H[2].get<long long>() << ") chi=" << r["chi"].get<long long>() << " "
                << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
        }
    } else {
        throw std::invalid_argument("unknown command '" + command + "'");
    }
    return out.str();
}

}  // namespace qb
