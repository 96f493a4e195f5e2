#include "minimalnets/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "minimalnets/hn_builder.hpp"
#include "minimalnets/minimality.hpp"

namespace minimalnets {

namespace {

using nlohmann::json;

json position_json(const Position& p) {
    if (const auto* h = std::get_if<HexCoord>(&p)) return json::array({h->m, h->n});
    const auto& v = std::get<Vec2>(p);
    return json::array({v.x, v.y});
}

json graph_json(const PlaneGraph& g) {
    json vertices = json::array();
    for (const auto& v : g.vertices()) {
        vertices.push_back({{"id", v.id}, {"kind", to_string(v.kind)}, {"pos", position_json(v.pos)}});
    }
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
    return {{"mode", to_string(g.mode())}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json cycle_json(const CycleInfo& c) {
    return {{"vertices", c.vertices},
            {"ingoing", c.ingoing},
            {"outgoing", c.outgoing},
            {"interior_area", c.interior_area}};
}

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return obj.at(key);
}

int int_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

Vec2 float_pair(const json& p) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        throw InputError("position must be a pair of numbers");
    }
    return {p[0].get<double>(), p[1].get<double>()};
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

PlaneGraph graph_from(const json& doc) {
    const json& mode_j = field(doc, "mode");
    if (!mode_j.is_string()) throw InputError("field \"mode\" must be a string");
    const std::string mode_s = mode_j.get<std::string>();
    if (mode_s != "exact" && mode_s != "float") throw InputError("mode must be \"exact\" or \"float\"");
    const CoordinateMode mode = mode_s == "exact" ? CoordinateMode::Exact : CoordinateMode::Float;

    const json& vs = field(doc, "vertices");
    const json& es = field(doc, "edges");
    if (!vs.is_array() || !es.is_array()) throw InputError("\"vertices\" and \"edges\" must be arrays");

    std::vector<Vertex> vertices;
    for (const auto& v : vs) {
        Vertex out;
        out.id = int_field(v, "id");
        const json& kind = field(v, "kind");
        if (kind == "attaching") {
            out.kind = VertexKind::Attaching;
        } else if (kind == "internal") {
            out.kind = VertexKind::Internal;
        } else {
            throw InputError("vertex " + std::to_string(out.id) + ": kind must be \"attaching\" or \"internal\"");
        }
        const json& p = field(v, "pos");
        if (mode == CoordinateMode::Exact) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
                throw InputError("vertex " + std::to_string(out.id) + ": exact position must be two integers");
            }
            out.pos = HexCoord{p[0].get<std::int64_t>(), p[1].get<std::int64_t>()};
        } else {
            out.pos = float_pair(p);
        }
        vertices.push_back(out);
    }
    std::vector<Edge> edges;
    for (const auto& e : es) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw InputError("edge must be a pair of vertex ids");
        }
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return PlaneGraph::build(std::move(vertices), std::move(edges), mode);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
    return buf;
}

}  // namespace

std::string graph_to_json(const PlaneGraph& g) { return graph_json(g).dump(2) + "\n"; }

PlaneGraph graph_from_json(std::string_view text) { return graph_from(parse(text)); }

PinnedTopology pinned_topology_from_json(std::string_view text) {
    const json doc = parse(text);
    PinnedTopology t{graph_from(doc), {}};
    if (doc.contains("pinned")) {
        const json& pins = doc.at("pinned");
        if (!pins.is_array()) throw InputError("\"pinned\" must be an array");
        for (const auto& p : pins) {
            const int id = int_field(p, "id");
            if (!t.pinned.emplace(id, float_pair(field(p, "pos"))).second) {
                throw InputError("vertex " + std::to_string(id) + " pinned twice");
            }
        }
    }
    return t;
}

std::string validation_report_json(const PlaneGraph& g, double tol) {
    json report;
    const auto emb = check_embedding(g);
    json conflicts = json::array();
    for (const auto& c : emb.conflicts) {
        conflicts.push_back({{"first", {c.first.u, c.first.v}}, {"second", {c.second.u, c.second.v}},
                             {"kind", to_string(c.kind)}});
    }
    json zero = json::array();
    for (const auto& e : emb.zero_length_edges) zero.push_back({e.u, e.v});
    json coincident = json::array();
    for (const auto& [a, b] : emb.coincident_vertices) coincident.push_back({a, b});
    report["embedding"] = {{"ok", emb.ok}, {"conflicts", conflicts}, {"zero_length_edges", zero},
                           {"coincident_vertices", coincident}};

    json degrees = json::object();
    for (const auto& [d, count] : degree_profile(g)) degrees[std::to_string(d)] = count;
    report["degree_profile"] = degrees;
    report["vertex_count"] = g.vertex_count();
    report["attaching_count"] = g.attaching_count();

    bool minimal_ok = false;
    if (emb.zero_length_edges.empty()) {
        const auto m = check_minimality(g, tol);
        json residuals = json::array();
        for (const auto& r : m.residuals) {
            residuals.push_back({{"id", r.id}, {"residual", r.residual}, {"exact", r.exact}});
        }
        report["minimality"] = {{"ok", m.ok},
                                {"worst_residual", m.worst_residual},
                                {"tolerance", tol},
                                {"violations", m.violations},
                                {"residuals", residuals}};
        minimal_ok = m.ok;
    } else {
        report["minimality"] = {{"ok", false}, {"violations", {"zero-length edge"}}};
    }

    // Cycle structure needs a proper embedding.
    if (emb.ok) {
        json cycles = json::array();
        for (const auto& c : find_cycles(g)) cycles.push_back(cycle_json(c));
        const auto s = classify_structure(g);
        json maximal = json::array();
        for (const auto& c : s.maximal) maximal.push_back(cycle_json(c));
        report["cycles"] = cycles;
        report["structure"] = to_string(s.kind);
        report["maximal_cycles"] = maximal;
        if (minimal_ok) {
            const auto simple = is_simple(g);
            report["simple"] = {{"simple", simple.simple},
                                {"violation", to_string(simple.violation)},
                                {"witness", simple.witness}};
        }
    }
    report["ok"] = emb.ok && minimal_ok;
    return report.dump(2) + "\n";
}

std::string relax_result_json(const RelaxResult& r) {
    json positions = json::array();
    for (const auto& [id, p] : r.positions) positions.push_back({{"id", id}, {"pos", {p.x, p.y}}});
    json out = {{"status", to_string(r.status)},
                {"iterations", r.iterations},
                {"total_length", r.total_length},
                {"residual", r.residual},
                {"merges", r.merges},
                {"positions", positions},
                {"embedding_ok", r.embedding_ok}};
    out["graph"] = r.graph ? graph_json(*r.graph) : json(nullptr);
    return out.dump(2) + "\n";
}

std::string census_text(const Census& c) {
    std::ostringstream os;
    os << "n\t" << c.n << "\n"
       << "maps\t" << c.maps << "\n"
       << "unlabelable\t" << c.unlabelable << "\n"
       << "topologies\t" << c.entries.size() << "\n"
       << "embedded\t" << c.embedded << "\n"
       << "unresolved\t" << c.unresolved << "\n"
       << "max_vertices\t" << c.max_vertices << "\n";
    for (auto i : c.witnesses) os << "witness\t" << code_string(c.entries[i].topology.code) << "\n";
    return os.str();
}

std::string graph_to_svg(const PlaneGraph& g) {
    constexpr double unit = 40.0;
    constexpr double margin = 20.0;
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
    double hi_x = -lo_x, hi_y = -lo_x;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const Vec2 p = g.euclid(v);
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    if (g.vertex_count() == 0) lo_x = hi_x = lo_y = hi_y = 0.0;
    const double width = (hi_x - lo_x) * unit + 2 * margin;
    const double height = (hi_y - lo_y) * unit + 2 * margin;
    auto sx = [&](Vec2 p) { return fmt((p.x - lo_x) * unit + margin); };
    auto sy = [&](Vec2 p) { return fmt((hi_y - p.y) * unit + margin); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
       << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    os << "<g stroke=\"black\" stroke-width=\"2\">\n";
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto [a, b] = g.edge_indices(e);
        const Vec2 p = g.euclid(a), q = g.euclid(b);
        os << "<line x1=\"" << sx(p) << "\" y1=\"" << sy(p) << "\" x2=\"" << sx(q) << "\" y2=\"" << sy(q) << "\"/>\n";
    }
    os << "</g>\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const Vec2 p = g.euclid(v);
        os << "<circle class=\"" << to_string(g.vertex(v).kind) << "\" cx=\"" << sx(p) << "\" cy=\"" << sy(p)
           << "\" r=\"4\" fill=\"" << (g.is_attaching(v) ? "white" : "black") << "\" stroke=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace minimalnets
