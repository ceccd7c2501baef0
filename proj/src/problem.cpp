#include "qb/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qb {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument("problem file: " + where + ": " + what);
}

const json& field(const json& j, const char* name, const std::string& where) {
    auto it = j.find(name);
    if (it == j.end()) fail(where, std::string("missing field '") + name + "'");
    return *it;
}

long long as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<long long>();
}

Rat as_rational(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return to_rat(j.get<long long>());
        if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
    fail(where, "expected a rational as \"p/q\" string or integer");
}

Quiver parse_quiver(const json& j) {
    Quiver q;
    const json& verts = field(j, "vertices", "quiver");
    if (!verts.is_array()) fail("quiver.vertices", "expected an array");
    for (const auto& v : verts) {
        if (!v.is_string()) fail("quiver.vertices", "vertex ids must be strings");
        q.vertices.push_back(v.get<std::string>());
    }
    const json& arrows = field(j, "arrows", "quiver");
    if (!arrows.is_array()) fail("quiver.arrows", "expected an array");
    for (const auto& a : arrows) {
        std::string where = "quiver.arrows[" + std::to_string(q.arrows.size()) + "]";
        q.arrows.push_back({field(a, "id", where).get<std::string>(),
                            field(a, "tail", where).get<std::string>(),
                            field(a, "head", where).get<std::string>()});
    }
    ValidationReport rep = validate_quiver(q);
    if (!rep.ok) fail("quiver", rep.errors.front());
    return q;
}

Poly parse_poly(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a coefficient list");
    Poly p;
    for (const auto& c : j) p.push_back(as_rational(c, where));
    if (poly_is_zero(p)) return {};
    return p;
}

QuiverBundleP1 parse_bundle(const json& j, const Quiver& q) {
    QuiverBundleP1 b;
    b.quiver = q;
    const json& vb = field(j, "vertex_bundles", "bundle");
    for (const auto& v : q.vertices) {
        auto it = vb.find(v);
        if (it == vb.end()) fail("bundle.vertex_bundles", "missing vertex '" + v + "'");
        if (!it->is_array()) fail("bundle.vertex_bundles." + v, "expected a degree list");
        std::vector<long long> degs;
        for (const auto& d : *it) degs.push_back(as_int(d, "bundle.vertex_bundles." + v));
        b.bundles.emplace_back(std::move(degs));
    }
    const json& am = field(j, "arrow_maps", "bundle");
    for (const auto& a : q.arrows) {
        std::string where = "bundle.arrow_maps." + a.id;
        auto it = am.find(a.id);
        if (it == am.end()) fail("bundle.arrow_maps", "missing arrow '" + a.id + "'");
        if (!it->is_array()) fail(where, "expected a matrix (array of rows)");
        const SplitBundle& src = b.bundles[q.vertex_index(a.tail)];
        const SplitBundle& tgt = b.bundles[q.vertex_index(a.head)];
        PolyMatrix m(static_cast<std::size_t>(tgt.rank()), static_cast<std::size_t>(src.rank()));
        if (it->size() != m.rows) fail(where, "wrong number of rows");
        for (std::size_t r = 0; r < m.rows; ++r) {
            const json& row = (*it)[r];
            if (!row.is_array() || row.size() != m.cols)
                fail(where + "[" + std::to_string(r) + "]", "wrong number of columns");
            for (std::size_t c = 0; c < m.cols; ++c)
                m.at(r, c) = parse_poly(row[c], where + "[" + std::to_string(r) + "][" +
                                                    std::to_string(c) + "]");
        }
        b.maps.push_back(std::move(m));
    }
    b.validate();
    return b;
}

}  // namespace

TypeVector Problem::effective_type() const {
    if (type) return *type;
    if (bundle) return bundle->type();
    throw std::invalid_argument("problem file has neither a type nor a bundle section");
}

Problem parse_problem(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("problem file: invalid JSON: ") + e.what());
    }

    Problem p;
    p.quiver = parse_quiver(field(j, "quiver", "document"));
    p.genus = as_int(field(j, "genus", "document"), "genus");
    if (p.genus < 0) fail("genus", "must be non-negative");

    const json& alpha = field(j, "alpha", "document");
    for (const auto& v : p.quiver.vertices) {
        auto it = alpha.find(v);
        if (it == alpha.end()) fail("alpha", "missing vertex '" + v + "'");
        p.alpha.weights.push_back(as_rational(*it, "alpha." + v));
    }

    if (auto it = j.find("type"); it != j.end()) {
        TypeVector t;
        for (const auto& v : p.quiver.vertices) {
            auto e = it->find(v);
            if (e == it->end()) fail("type", "missing vertex '" + v + "'");
            std::string where = "type." + v;
            long long r = as_int(field(*e, "rank", where), where + ".rank");
            long long d = as_int(field(*e, "degree", where), where + ".degree");
            if (r < 0) fail(where + ".rank", "must be non-negative");
            t.entries.push_back({r, d});
        }
        if (t.total_rank() == 0 && t.total_degree() != 0)
            fail("type", "a type of total rank 0 must have all degrees 0");
        p.type = std::move(t);
    }

    if (auto it = j.find("bundle"); it != j.end()) {
        if (p.genus != 0) fail("bundle", "bundle section requires genus 0");
        p.bundle = parse_bundle(*it, p.quiver);
        if (p.type && *p.type != p.bundle->type())
            fail("bundle", "declared type disagrees with the bundle's ranks/degrees");
    }
    return p;
}

Problem read_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open problem file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

}  // namespace qb
