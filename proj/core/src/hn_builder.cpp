#include "minimalnets/hn_builder.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "minimalnets/minimality.hpp"

namespace minimalnets {

namespace {

int floor_mod(int a, int b) { return ((a % b) + b) % b; }

struct Builder {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int add(HexCoord p, VertexKind kind) {
        const int id = static_cast<int>(vertices.size());
        vertices.push_back({id, p, kind});
        return id;
    }
    void edge(int a, int b) { edges.push_back({a, b}); }
    HexCoord pos(int id) const { return std::get<HexCoord>(vertices[static_cast<std::size_t>(id)].pos); }
    PlaneGraph build() const { return PlaneGraph::build(vertices, edges, CoordinateMode::Exact); }
};

// Adds a leg along every legal direction at `id` that does not hit `avoid`.
void add_legs(Builder& b, int id, const std::set<HexCoord>& avoid) {
    const HexCoord p = b.pos(id);
    for (auto d : legal_directions(*sublattice_of(p))) {
        const HexCoord q = lattice_step(p, d);
        if (!avoid.contains(q)) b.edge(id, b.add(q, VertexKind::Attaching));
    }
}

Builder hexagon_base() {
    Builder b;
    const std::vector<HexCoord> ring = {{0, 0}, {1, -1}, {2, 0}, {2, 2}, {1, 3}, {0, 2}};
    for (auto p : ring) b.add(p, VertexKind::Internal);
    for (int i = 0; i < 6; ++i) b.edge(i, (i + 1) % 6);
    const std::set<HexCoord> avoid(ring.begin(), ring.end());
    for (int i = 0; i < 6; ++i) add_legs(b, i, avoid);
    return b;
}

// Direction from an attaching vertex to its only neighbour.
Direction6 leg_direction(const PlaneGraph& g, std::size_t a) {
    if (g.degree(a) != 1) throw std::invalid_argument("attaching vertex without a single edge");
    const auto d = direction_of_step(g.hex(g.neighbors(a)[0]) - g.hex(a));
    if (!d) {
        throw std::invalid_argument("attaching edge at vertex " + std::to_string(g.id_of(a)) +
                                    " is not a unit lattice step");
    }
    return *d;
}

int max_id(const PlaneGraph& g) {
    int m = -1;
    for (const auto& v : g.vertices()) m = std::max(m, v.id);
    return m;
}

bool all_same_turn(const std::vector<int>& turns) {
    if (turns.empty() || turns[0] == 0) return false;
    return std::all_of(turns.begin(), turns.end(), [&](int t) { return t == turns[0]; });
}

int turn_sign(const PlaneGraph& g, std::size_t a, std::size_t b, std::size_t c) {
    if (g.exact()) return orientation(g.hex(a), g.hex(b), g.hex(c));
    const double x = cross(g.euclid(b) - g.euclid(a), g.euclid(c) - g.euclid(b));
    return (x > 0) - (x < 0);
}

// Depth-first over paths of exactly `edges` edges in a tree.
bool find_turning_path(const PlaneGraph& g, std::vector<std::size_t>& path, std::size_t edges) {
    if (path.size() == edges + 1) {
        std::vector<int> turns;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) turns.push_back(turn_sign(g, path[i - 1], path[i], path[i + 1]));
        return all_same_turn(turns);
    }
    const std::size_t v = path.back();
    for (auto w : g.neighbors(v)) {
        if (path.size() >= 2 && w == path[path.size() - 2]) continue;
        path.push_back(w);
        if (find_turning_path(g, path, edges)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::string to_string(SimplicityReport::Violation v) {
    switch (v) {
        case SimplicityReport::Violation::None:
            return "none";
        case SimplicityReport::Violation::FiveTurnPath:
            return "five_edge_turning_path";
        case SimplicityReport::Violation::ConsecutiveIngoing:
            return "consecutive_ingoing";
        case SimplicityReport::Violation::MultipleMaxCycles:
            return "multiple_max_cycles";
        case SimplicityReport::Violation::CycleNotSurrounding:
            return "cycle_not_surrounding";
    }
    return "unknown";
}

SimplicityReport is_simple(const PlaneGraph& g) {
    SimplicityReport r;
    const auto structure = classify_structure(g);

    if (structure.kind == StructureClass::Kind::Tree) {
        for (std::size_t s = 0; s < g.vertex_count(); ++s) {
            std::vector<std::size_t> path{s};
            if (find_turning_path(g, path, 5)) {
                r.simple = false;
                r.violation = SimplicityReport::Violation::FiveTurnPath;
                for (auto v : path) r.witness.push_back(g.id_of(v));
                return r;
            }
        }
        return r;
    }

    if (structure.kind == StructureClass::Kind::MultiMaxCycle) {
        r.simple = false;
        r.violation = SimplicityReport::Violation::MultipleMaxCycles;
        for (const auto& c : structure.maximal) r.witness.push_back(c.vertices.front());
        return r;
    }

    const CycleInfo& c = structure.maximal.front();
    const std::set<int> on_cycle(c.vertices.begin(), c.vertices.end());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.is_attaching(v) || on_cycle.contains(g.id_of(v))) continue;
        if (locate_in_cycle(g, c, v) > 0) continue;
        // A split leg (one internal vertex carrying two legs) may sit outside.
        std::size_t attached = 0, rooted = 0;
        for (auto w : g.neighbors(v)) {
            if (g.is_attaching(w)) ++attached;
            else if (on_cycle.contains(g.id_of(w))) ++rooted;
        }
        if (rooted != 1 || attached + 1 != g.degree(v)) {
            r.simple = false;
            r.violation = SimplicityReport::Violation::CycleNotSurrounding;
            r.witness = {g.id_of(v)};
            return r;
        }
    }

    const std::set<int> in(c.ingoing.begin(), c.ingoing.end());
    const std::size_t k = c.vertices.size();
    for (std::size_t i = 0; i < k; ++i) {
        const int a = c.vertices[i], b = c.vertices[(i + 1) % k];
        if (in.contains(a) && in.contains(b)) {
            r.simple = false;
            r.violation = SimplicityReport::Violation::ConsecutiveIngoing;
            r.witness = {a, b};
            return r;
        }
    }
    return r;
}

std::vector<std::size_t> circular_attaching_order(const PlaneGraph& g) {
    if (!g.exact()) throw std::invalid_argument("circular order needs exact coordinates");
    auto att = g.attaching_indices();
    const auto k = static_cast<std::int64_t>(att.size());
    HexCoord sum{0, 0};
    for (auto a : att) sum = sum + g.hex(a);

    // Offsets scaled by k so the centroid is integral.
    auto offset = [&](std::size_t a) { return g.hex(a) * k - sum; };
    auto half = [](HexCoord v) { return (v.n > 0 || (v.n == 0 && v.m > 0)) ? 0 : 1; };
    for (auto a : att) {
        if (offset(a) == HexCoord{0, 0}) throw std::invalid_argument("attaching point at the centroid");
    }
    auto before = [&](std::size_t a, std::size_t b) {
        const HexCoord u = offset(a), v = offset(b);
        if (half(u) != half(v)) return half(u) < half(v);
        return u.m * v.n - u.n * v.m > 0;
    };
    std::sort(att.begin(), att.end(), before);
    for (std::size_t i = 0; i + 1 < att.size(); ++i) {
        if (!before(att[i], att[i + 1])) throw std::invalid_argument("two attaching points at the same angle");
    }
    return att;
}

PaddingResult pad_with_report(const PlaneGraph& g) {
    if (!g.exact()) throw std::invalid_argument("padding needs exact coordinates");
    const auto simple = is_simple(g);
    if (!simple.simple) throw NotSimpleError("graph is not simple: " + to_string(simple.violation));

    const auto order = circular_attaching_order(g);
    const std::size_t n = order.size();

    std::vector<Vertex> vertices = g.vertices();
    std::vector<Edge> edges = g.edges();
    std::unordered_map<HexCoord, int> occupied;
    for (auto& v : vertices) {
        occupied.emplace(std::get<HexCoord>(v.pos), v.id);
        v.kind = VertexKind::Internal;
    }
    int next_id = max_id(g) + 1;
    auto add = [&](HexCoord p, VertexKind kind) {
        if (occupied.contains(p)) {
            throw AngleCaseUnmatched("padding vertex collides at (" + std::to_string(p.m) + "," +
                                     std::to_string(p.n) + ")");
        }
        const int id = next_id++;
        vertices.push_back({id, p, kind});
        occupied.emplace(p, id);
        return id;
    };

    std::vector<GapCase> gaps;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t a = order[i], b = order[(i + 1) % n];
        const int ua = leg_direction(g, a).k();
        const int ub = leg_direction(g, b).k();
        const int j = floor_mod(ub - ua + 1, 6);
        if (j < 1 || j > 4) {
            throw AngleCaseUnmatched("gap " + std::to_string(g.id_of(a)) + "-" + std::to_string(g.id_of(b)) +
                                     " has no matching angle case");
        }
        if (j == 4 && g.vertex_count() != 2) {
            throw AngleCaseUnmatched("pi/3 gap outside the one-edge graph");
        }

        const int d = ua - 2;
        int cur = g.id_of(a);
        HexCoord p = g.hex(a);
        for (int t = 0; t < j; ++t) {
            const HexCoord q = lattice_step(p, Direction6(d + t));
            const int nv = add(q, VertexKind::Internal);
            edges.push_back({cur, nv});
            const int leg = add(lattice_step(q, Direction6(d + t - 1)), VertexKind::Attaching);
            edges.push_back({nv, leg});
            cur = nv;
            p = q;
        }
        if (lattice_step(p, Direction6(d + j)) != g.hex(b)) {
            throw AngleCaseUnmatched("padding walk misses attaching point " + std::to_string(g.id_of(b)));
        }
        edges.push_back({cur, g.id_of(b)});
        gaps.push_back({g.id_of(a), g.id_of(b), j - 3, j});
    }

    return {PlaneGraph::build(std::move(vertices), std::move(edges), CoordinateMode::Exact), std::move(gaps)};
}

PlaneGraph pad(const PlaneGraph& g) { return pad_with_report(g).graph; }

PlaneGraph base_h(int n) {
    Builder b;
    switch (n) {
        case 2:
            b.edge(b.add({0, 0}, VertexKind::Attaching), b.add({0, 2}, VertexKind::Attaching));
            return b.build();
        case 3:
            add_legs(b, b.add({0, 0}, VertexKind::Internal), {});
            return b.build();
        case 4: {
            const int r = b.add({0, 0}, VertexKind::Internal);
            const int v = b.add({0, 2}, VertexKind::Internal);
            b.edge(r, v);
            add_legs(b, r, {{0, 2}});
            add_legs(b, v, {{0, 0}});
            return b.build();
        }
        case 5: {
            const int r = b.add({0, 0}, VertexKind::Internal);
            const int v1 = b.add({0, 2}, VertexKind::Internal);
            const int v3 = b.add({1, -1}, VertexKind::Internal);
            b.edge(r, v1);
            b.edge(r, v3);
            add_legs(b, r, {{0, 2}, {1, -1}});
            add_legs(b, v1, {{0, 0}});
            add_legs(b, v3, {{0, 0}});
            return b.build();
        }
        case 6:
            return hexagon_base().build();
        case 7: {
            Builder h = hexagon_base();
            // Leg of the smallest hexagon vertex, (0,0), becomes a 3-edge tree.
            auto leg = std::find_if(h.vertices.begin(), h.vertices.end(), [](const Vertex& v) {
                return std::get<HexCoord>(v.pos) == HexCoord{-1, -1};
            });
            leg->kind = VertexKind::Internal;
            add_legs(h, leg->id, {{0, 0}});
            return h.build();
        }
        default:
            throw std::out_of_range("base case needs 2 <= n <= 7, got " + std::to_string(n));
    }
}

PlaneGraph build_hn(int n) {
    if (n < 2) throw std::out_of_range("H_n needs n >= 2, got " + std::to_string(n));
    if (n <= 7) return base_h(n);
    return pad(build_hn(n - 6));
}

std::int64_t hn_vertex_count(int n) {
    if (n < 2) throw std::out_of_range("H_n needs n >= 2, got " + std::to_string(n));
    static constexpr std::int64_t eps[6] = {0, 0, 2, 4, 6, 8};
    const std::int64_t k = n / 6, i = n % 6;
    return 6 * k * k + 6 * k + 2 * i * k + eps[i];
}

PlaneGraph attach_extension(const PlaneGraph& g, int attaching_id) {
    if (!g.exact()) throw std::invalid_argument("attach extension needs exact coordinates");
    const std::size_t a = g.index_of(attaching_id);
    if (!g.is_attaching(a)) throw std::invalid_argument("vertex " + std::to_string(attaching_id) + " is not attaching");
    const Direction6 in = leg_direction(g, a);

    std::vector<Vertex> vertices = g.vertices();
    std::vector<Edge> edges = g.edges();
    std::set<HexCoord> used;
    for (const auto& v : vertices) used.insert(std::get<HexCoord>(v.pos));
    vertices[a].kind = VertexKind::Internal;

    int next_id = max_id(g) + 1;
    for (auto d : {in.rotated(2), in.rotated(4)}) {
        const HexCoord q = lattice_step(g.hex(a), d);
        if (used.contains(q)) throw std::invalid_argument("extension leg lands on an existing vertex");
        vertices.push_back({next_id, q, VertexKind::Attaching});
        edges.push_back({attaching_id, next_id});
        ++next_id;
    }
    return PlaneGraph::build(std::move(vertices), std::move(edges), CoordinateMode::Exact);
}

PlaneGraph lattice_graph(const std::vector<std::pair<HexCoord, HexCoord>>& edges, bool add_legs_at_degree2) {
    std::map<HexCoord, std::vector<HexCoord>> adj;
    std::set<std::pair<HexCoord, HexCoord>> seen;
    for (auto [p, q] : edges) {
        if (!is_lattice_vertex(p) || !is_lattice_vertex(q)) throw LatticeError("edge endpoint off the lattice");
        if (!direction_of_step(q - p)) throw LatticeError("edge is not a unit lattice step");
        if (!seen.insert(std::minmax(p, q)).second) continue;
        adj[p].push_back(q);
        adj[q].push_back(p);
    }

    if (add_legs_at_degree2) {
        std::vector<std::pair<HexCoord, HexCoord>> legs;
        for (const auto& [p, list] : adj) {
            if (list.size() != 2) continue;
            for (auto d : legal_directions(*sublattice_of(p))) {
                const HexCoord q = p + d.step();
                if (std::find(list.begin(), list.end(), q) == list.end()) legs.emplace_back(p, q);
            }
        }
        for (auto [p, q] : legs) {
            if (adj.contains(q)) throw std::invalid_argument("leg lands on an existing vertex");
            adj[p].push_back(q);
            adj[q].push_back(p);
        }
    }

    std::map<HexCoord, int> ids;
    std::vector<Vertex> vertices;
    for (const auto& [p, list] : adj) {
        const int id = static_cast<int>(ids.size());
        ids[p] = id;
        vertices.push_back({id, p, list.size() == 1 ? VertexKind::Attaching : VertexKind::Internal});
    }
    std::vector<Edge> out;
    for (const auto& [p, list] : adj) {
        for (auto q : list) {
            if (p < q) out.push_back({ids[p], ids[q]});
        }
    }
    return PlaneGraph::build(std::move(vertices), std::move(out), CoordinateMode::Exact);
}

std::vector<std::pair<HexCoord, HexCoord>> hexagon_cells(const std::vector<HexCoord>& centres) {
    static constexpr HexCoord ring[6] = {{-1, -1}, {0, -2}, {1, -1}, {1, 1}, {0, 2}, {-1, 1}};
    std::set<std::pair<HexCoord, HexCoord>> out;
    for (auto c : centres) {
        if (((c.m - c.n) % 2 + 2) % 2 != 0 || ((c.n % 3) + 3) % 3 != 1) {
            throw LatticeError("(" + std::to_string(c.m) + "," + std::to_string(c.n) + ") is not a hexagon centre");
        }
        for (int i = 0; i < 6; ++i) out.insert(std::minmax(c + ring[i], c + ring[(i + 1) % 6]));
    }
    return {out.begin(), out.end()};
}

}  // namespace minimalnets
