#include "minimalnets/minimality.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace minimalnets {

namespace {

int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }
int sign_of(double v) { return (v > 0) - (v < 0); }

std::int64_t cross_mn(HexCoord a, HexCoord b) { return a.m * b.n - a.n * b.m; }

// Strictly inside the counter-clockwise sweep from a to b.
template <typename V, typename Cross>
bool in_ccw_sector(V a, V b, V x, Cross cr) {
    const int ab = cr(a, b);
    if (ab > 0) return cr(a, x) > 0 && cr(x, b) > 0;
    if (ab < 0) return !(cr(b, x) >= 0 && cr(x, a) >= 0);
    return cr(a, x) > 0;
}

bool third_edge_inside(const PlaneGraph& g, std::size_t prev, std::size_t v, std::size_t next, std::size_t w) {
    if (g.exact()) {
        const HexCoord c = g.hex(v);
        auto cr = [](HexCoord a, HexCoord b) { return sign_of(cross_mn(a, b)); };
        return in_ccw_sector(g.hex(next) - c, g.hex(prev) - c, g.hex(w) - c, cr);
    }
    const Vec2 c = g.euclid(v);
    auto cr = [](Vec2 a, Vec2 b) { return sign_of(cross(a, b)); };
    return in_ccw_sector(g.euclid(next) - c, g.euclid(prev) - c, g.euclid(w) - c, cr);
}

// Sign of the signed area, exact in exact mode.
int area_sign(const PlaneGraph& g, const std::vector<std::size_t>& cycle) {
    const std::size_t k = cycle.size();
    if (g.exact()) {
        std::int64_t twice = 0;
        for (std::size_t i = 0; i < k; ++i) twice += cross_mn(g.hex(cycle[i]), g.hex(cycle[(i + 1) % k]));
        return sign_of(twice);
    }
    double twice = 0.0;
    for (std::size_t i = 0; i < k; ++i) twice += cross(g.euclid(cycle[i]), g.euclid(cycle[(i + 1) % k]));
    return sign_of(twice);
}

double signed_area(const PlaneGraph& g, const std::vector<std::size_t>& cycle) {
    const std::size_t k = cycle.size();
    if (g.exact()) {
        std::int64_t twice = 0;
        for (std::size_t i = 0; i < k; ++i) twice += cross_mn(g.hex(cycle[i]), g.hex(cycle[(i + 1) % k]));
        return static_cast<double>(twice) * std::numbers::sqrt3 / 8.0;
    }
    double twice = 0.0;
    for (std::size_t i = 0; i < k; ++i) twice += cross(g.euclid(cycle[i]), g.euclid(cycle[(i + 1) % k]));
    return twice / 2.0;
}

struct BlockFaces {
    std::vector<std::vector<std::size_t>> bounded;
    std::vector<std::size_t> outer;  // already counter-clockwise
};

std::vector<BlockFaces> block_faces(const PlaneGraph& g) {
    const auto rot = rotation_system(g);
    std::vector<BlockFaces> out;
    std::vector<bool> in_block(g.edge_count(), false);

    for (const auto& block : biconnected_blocks(g)) {
        if (block.size() < 2) continue;
        for (auto e : block) in_block[e] = true;

        std::map<std::size_t, std::vector<std::size_t>> frot;
        for (auto e : block) {
            const auto [a, b] = g.edge_indices(e);
            frot.try_emplace(a);
            frot.try_emplace(b);
        }
        for (auto& [v, list] : frot) {
            for (auto w : rot[v]) {
                if (in_block[edge_index(g, v, w)]) list.push_back(w);
            }
        }

        std::set<std::pair<std::size_t, std::size_t>> visited;
        BlockFaces faces;
        bool have_outer = false;
        for (const auto& [v0, list0] : frot) {
            for (std::size_t k0 = 0; k0 < list0.size(); ++k0) {
                if (visited.contains({v0, k0})) continue;
                std::vector<std::size_t> face;
                std::size_t v = v0, k = k0;
                do {
                    visited.insert({v, k});
                    face.push_back(v);
                    const std::size_t w = frot[v][k];
                    const auto& wl = frot[w];
                    const auto p = static_cast<std::size_t>(std::find(wl.begin(), wl.end(), v) - wl.begin());
                    k = (p + wl.size() - 1) % wl.size();
                    v = w;
                } while (!(v == v0 && k == k0));

                const int s = area_sign(g, face);
                if (s == 0) throw std::logic_error("face boundary with zero area");
                if (s < 0) {
                    if (have_outer) throw std::logic_error("block with two outer faces");
                    std::reverse(face.begin(), face.end());
                    faces.outer = std::move(face);
                    have_outer = true;
                } else {
                    faces.bounded.push_back(std::move(face));
                }
            }
        }
        for (auto e : block) in_block[e] = false;
        if (!have_outer) throw std::logic_error("block without an outer face");
        out.push_back(std::move(faces));
    }
    return out;
}

template <typename P, typename Orient>
int locate_point(const std::vector<P>& poly, P q, Orient orient, auto y_of, auto on_segment) {
    int winding = 0;
    const std::size_t k = poly.size();
    for (std::size_t i = 0; i < k; ++i) {
        const P a = poly[i];
        const P b = poly[(i + 1) % k];
        if (on_segment(a, b, q)) return 0;
        if (y_of(a) <= y_of(q)) {
            if (y_of(b) > y_of(q) && orient(a, b, q) > 0) ++winding;
        } else if (y_of(b) <= y_of(q) && orient(a, b, q) < 0) {
            --winding;
        }
    }
    return winding != 0 ? 1 : -1;
}

// Locates the point (scaled by 2 in exact mode) relative to the cycle.
int locate_exact(const PlaneGraph& g, const CycleInfo& c, HexCoord q2) {
    std::vector<HexCoord> poly;
    for (int id : c.vertices) poly.push_back(g.hex(g.index_of(id)) * 2);
    auto orient = [](HexCoord a, HexCoord b, HexCoord p) { return orientation(a, b, p); };
    auto y_of = [](HexCoord p) { return p.n; };
    auto on_seg = [](HexCoord a, HexCoord b, HexCoord p) {
        if (orientation(a, b, p) != 0) return false;
        return p.m >= std::min(a.m, b.m) && p.m <= std::max(a.m, b.m) && p.n >= std::min(a.n, b.n) &&
               p.n <= std::max(a.n, b.n);
    };
    return locate_point(poly, q2, orient, y_of, on_seg);
}

int locate_float(const PlaneGraph& g, const CycleInfo& c, Vec2 q) {
    std::vector<Vec2> poly;
    for (int id : c.vertices) poly.push_back(g.euclid(g.index_of(id)));
    constexpr double eps = 1e-12;
    auto orient = [](Vec2 a, Vec2 b, Vec2 p) { return sign_of(cross(b - a, p - a)); };
    auto y_of = [](Vec2 p) { return p.y; };
    auto on_seg = [](Vec2 a, Vec2 b, Vec2 p) {
        const Vec2 d = b - a;
        const double len = d.norm();
        if (std::abs(cross(d, p - a)) / len > eps) return false;
        const double t = dot(p - a, d) / (len * len);
        return t >= -eps && t <= 1.0 + eps;
    };
    return locate_point(poly, q, orient, y_of, on_seg);
}

std::vector<CycleInfo> normalize_and_sort(std::vector<CycleInfo> cycles) {
    std::sort(cycles.begin(), cycles.end(),
              [](const CycleInfo& a, const CycleInfo& b) { return a.vertices < b.vertices; });
    cycles.erase(std::unique(cycles.begin(), cycles.end(),
                             [](const CycleInfo& a, const CycleInfo& b) { return a.vertices == b.vertices; }),
                 cycles.end());
    return cycles;
}

}  // namespace

Vec2 unit_vector_sum(const PlaneGraph& g, std::size_t index) {
    Vec2 sum{};
    const Vec2 p = g.euclid(index);
    for (auto w : g.neighbors(index)) {
        const Vec2 d = g.euclid(w) - p;
        const double len = d.norm();
        if (len == 0.0) {
            throw ZeroLengthEdgeError("zero-length edge (" + std::to_string(g.id_of(index)) + "," +
                                      std::to_string(g.id_of(w)) + ")");
        }
        sum += d / len;
    }
    return sum;
}

MinimalityReport check_minimality(const PlaneGraph& g, double tol) {
    MinimalityReport report;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.is_attaching(v)) continue;
        if (g.degree(v) < 2) {
            report.violations.push_back("internal vertex " + std::to_string(g.id_of(v)) + " has degree " +
                                        std::to_string(g.degree(v)));
        }

        VertexResidual r{g.id_of(v), 0.0, false};
        if (g.exact()) {
            HexCoord sum{0, 0};
            bool lattice = true;
            for (auto w : g.neighbors(v)) {
                const HexCoord d = g.hex(w) - g.hex(v);
                if (d == HexCoord{0, 0}) {
                    throw ZeroLengthEdgeError("zero-length edge (" + std::to_string(g.id_of(v)) + "," +
                                              std::to_string(g.id_of(w)) + ")");
                }
                const auto ray = lattice_ray(d);
                if (!ray) {
                    lattice = false;
                    break;
                }
                sum = sum + ray->direction.step();
            }
            if (lattice) {
                r.exact = true;
                r.residual = sum == HexCoord{0, 0} ? 0.0 : hex_to_euclid(sum).norm();
            }
        }
        if (!r.exact) r.residual = unit_vector_sum(g, v).norm();

        const bool balanced = r.exact ? r.residual == 0.0 : r.residual <= tol;
        if (!balanced) {
            std::ostringstream os;
            os << "vertex " << r.id << " unbalanced, residual " << r.residual;
            report.violations.push_back(os.str());
        }
        report.worst_residual = std::max(report.worst_residual, r.residual);
        report.residuals.push_back(r);
    }
    report.ok = report.violations.empty();
    return report;
}

CycleInfo make_cycle_info(const PlaneGraph& g, std::vector<std::size_t> cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("a cycle needs at least three vertices");
    const int s = area_sign(g, cycle);
    if (s == 0) throw std::logic_error("cycle with zero enclosed area");
    if (s < 0) std::reverse(cycle.begin(), cycle.end());
    const auto first = std::min_element(cycle.begin(), cycle.end(),
                                        [&](std::size_t a, std::size_t b) { return g.id_of(a) < g.id_of(b); });
    std::rotate(cycle.begin(), first, cycle.end());

    CycleInfo info;
    info.interior_area = signed_area(g, cycle);
    const std::size_t k = cycle.size();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t v = cycle[i];
        info.vertices.push_back(g.id_of(v));
        if (g.degree(v) != 3) continue;
        const std::size_t prev = cycle[(i + k - 1) % k];
        const std::size_t next = cycle[(i + 1) % k];
        std::size_t third = v;
        for (auto w : g.neighbors(v)) {
            if (w != prev && w != next) third = w;
        }
        if (third == v) throw std::logic_error("degree-3 cycle vertex without a third edge");
        (third_edge_inside(g, prev, v, next, third) ? info.ingoing : info.outgoing).push_back(g.id_of(v));
    }
    std::sort(info.ingoing.begin(), info.ingoing.end());
    std::sort(info.outgoing.begin(), info.outgoing.end());
    return info;
}

std::vector<CycleInfo> find_cycles(const PlaneGraph& g) {
    std::vector<CycleInfo> cycles;
    for (auto& faces : block_faces(g)) {
        for (auto& f : faces.bounded) cycles.push_back(make_cycle_info(g, std::move(f)));
        cycles.push_back(make_cycle_info(g, std::move(faces.outer)));
    }
    return normalize_and_sort(std::move(cycles));
}

std::vector<CycleInfo> enumerate_all_cycles(const PlaneGraph& g, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    const auto bridge = bridge_edges(g);
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (bridge[e]) continue;
        const auto [a, b] = g.edge_indices(e);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::vector<std::vector<std::size_t>> found;
    std::vector<bool> on_path(n, false);
    std::vector<std::size_t> path;

    for (std::size_t s = 0; s < n; ++s) {
        if (adj[s].size() < 2) continue;
        // Iterative DFS over simple paths starting at s through vertices > s.
        std::vector<std::size_t> cursor;
        path.assign(1, s);
        cursor.assign(1, 0);
        on_path[s] = true;
        while (!path.empty()) {
            const std::size_t v = path.back();
            std::size_t& c = cursor.back();
            if (c == adj[v].size()) {
                on_path[v] = false;
                path.pop_back();
                cursor.pop_back();
                continue;
            }
            const std::size_t w = adj[v][c++];
            if (w == s && path.size() >= 3 && path[1] < path.back()) {
                found.push_back(path);
                if (found.size() > cap) {
                    throw CycleLimitExceeded("more than " + std::to_string(cap) + " cycles");
                }
            } else if (w > s && !on_path[w]) {
                on_path[w] = true;
                path.push_back(w);
                cursor.push_back(0);
            }
        }
    }

    std::vector<CycleInfo> cycles;
    cycles.reserve(found.size());
    for (auto& p : found) cycles.push_back(make_cycle_info(g, std::move(p)));
    return normalize_and_sort(std::move(cycles));
}

int locate_in_cycle(const PlaneGraph& g, const CycleInfo& cycle, std::size_t vertex_index) {
    if (g.exact()) return locate_exact(g, cycle, g.hex(vertex_index) * 2);
    return locate_float(g, cycle, g.euclid(vertex_index));
}

bool interior_contained(const PlaneGraph& g, const CycleInfo& inner, const CycleInfo& outer) {
    std::set<int> on_outer(outer.vertices.begin(), outer.vertices.end());
    std::set<std::pair<int, int>> outer_edges;
    const std::size_t ko = outer.vertices.size();
    for (std::size_t i = 0; i < ko; ++i) {
        const int a = outer.vertices[i], b = outer.vertices[(i + 1) % ko];
        outer_edges.insert({std::min(a, b), std::max(a, b)});
    }
    for (int id : inner.vertices) {
        if (on_outer.contains(id)) continue;
        if (locate_in_cycle(g, outer, g.index_of(id)) < 0) return false;
    }
    const std::size_t ki = inner.vertices.size();
    for (std::size_t i = 0; i < ki; ++i) {
        const int a = inner.vertices[i], b = inner.vertices[(i + 1) % ki];
        if (outer_edges.contains({std::min(a, b), std::max(a, b)})) continue;
        const std::size_t ia = g.index_of(a), ib = g.index_of(b);
        const int where = g.exact() ? locate_exact(g, outer, g.hex(ia) + g.hex(ib))
                                    : locate_float(g, outer, (g.euclid(ia) + g.euclid(ib)) * 0.5);
        if (where < 0) return false;
    }
    return true;
}

std::vector<CycleInfo> maximal_cycles(const PlaneGraph& g) {
    std::vector<CycleInfo> outers;
    for (auto& faces : block_faces(g)) outers.push_back(make_cycle_info(g, std::move(faces.outer)));

    std::vector<CycleInfo> result;
    for (std::size_t i = 0; i < outers.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < outers.size() && maximal; ++j) {
            if (i != j && interior_contained(g, outers[i], outers[j])) maximal = false;
        }
        if (maximal) result.push_back(outers[i]);
    }

    // An outgoing edge of a maximal cycle is a bridge.
    const auto bridge = bridge_edges(g);
    for (const auto& c : result) {
        const std::set<int> on_cycle(c.vertices.begin(), c.vertices.end());
        for (int id : c.outgoing) {
            const std::size_t v = g.index_of(id);
            for (std::size_t k = 0; k < g.degree(v); ++k) {
                const std::size_t w = g.neighbors(v)[k];
                if (on_cycle.contains(g.id_of(w))) continue;
                if (!bridge[g.incident_edges(v)[k]]) {
                    throw std::logic_error("outgoing edge at vertex " + std::to_string(id) +
                                           " of a maximal cycle lies on a cycle");
                }
            }
        }
    }
    return normalize_and_sort(std::move(result));
}

std::vector<double> exterior_turns(const PlaneGraph& g, const CycleInfo& cycle) {
    std::vector<double> turns;
    const std::size_t k = cycle.vertices.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Vec2 p = g.euclid(g.index_of(cycle.vertices[(i + k - 1) % k]));
        const Vec2 v = g.euclid(g.index_of(cycle.vertices[i]));
        const Vec2 q = g.euclid(g.index_of(cycle.vertices[(i + 1) % k]));
        const Vec2 din = v - p, dout = q - v;
        turns.push_back(std::atan2(cross(din, dout), dot(din, dout)) * 180.0 / std::numbers::pi);
    }
    return turns;
}

std::string to_string(StructureClass::Kind k) {
    switch (k) {
        case StructureClass::Kind::Tree:
            return "tree";
        case StructureClass::Kind::OneMaxCycle:
            return "one_max_cycle";
        case StructureClass::Kind::MultiMaxCycle:
            return "multi_max_cycle";
    }
    return "unknown";
}

StructureClass classify_structure(const PlaneGraph& g) {
    StructureClass s;
    const auto bridge = bridge_edges(g);
    if (std::all_of(bridge.begin(), bridge.end(), [](bool b) { return b; })) return s;
    s.maximal = maximal_cycles(g);
    s.kind = s.maximal.size() == 1 ? StructureClass::Kind::OneMaxCycle : StructureClass::Kind::MultiMaxCycle;
    return s;
}

}  // namespace minimalnets
