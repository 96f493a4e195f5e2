#include "minimalnets/graph.hpp"

#include <algorithm>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace minimalnets {

std::string to_string(VertexKind k) { return k == VertexKind::Attaching ? "attaching" : "internal"; }

std::string to_string(CoordinateMode m) { return m == CoordinateMode::Exact ? "exact" : "float"; }

std::string to_string(GraphIssueKind k) {
    switch (k) {
        case GraphIssueKind::DuplicateId:
            return "DuplicateId";
        case GraphIssueKind::DanglingEdge:
            return "DanglingEdge";
        case GraphIssueKind::SelfLoop:
            return "SelfLoop";
        case GraphIssueKind::DuplicateEdge:
            return "DuplicateEdge";
        case GraphIssueKind::AttachingDegreeViolation:
            return "AttachingDegreeViolation";
        case GraphIssueKind::Disconnected:
            return "Disconnected";
        case GraphIssueKind::PositionModeMismatch:
            return "PositionModeMismatch";
        case GraphIssueKind::NonFinitePosition:
            return "NonFinitePosition";
    }
    return "Unknown";
}

namespace {

std::string summarize(const std::vector<GraphIssue>& issues) {
    std::ostringstream os;
    os << "invalid graph:";
    for (const auto& issue : issues) os << " [" << to_string(issue.kind) << ": " << issue.detail << "]";
    return os.str();
}

}  // namespace

GraphValidationError::GraphValidationError(std::vector<GraphIssue> issues)
    : std::invalid_argument(summarize(issues)), issues_(std::move(issues)) {}

bool GraphValidationError::has(GraphIssueKind k) const {
    return std::any_of(issues_.begin(), issues_.end(), [k](const GraphIssue& i) { return i.kind == k; });
}

PlaneGraph PlaneGraph::build(std::vector<Vertex> vertices, std::vector<Edge> edges, CoordinateMode mode,
                             BuildOptions options) {
    std::vector<GraphIssue> issues;

    std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i].id == vertices[i - 1].id) {
            issues.push_back({GraphIssueKind::DuplicateId, "id " + std::to_string(vertices[i].id)});
        }
    }
    for (const auto& v : vertices) {
        const bool is_hex = std::holds_alternative<HexCoord>(v.pos);
        if (is_hex != (mode == CoordinateMode::Exact)) {
            issues.push_back({GraphIssueKind::PositionModeMismatch,
                              "vertex " + std::to_string(v.id) + " position does not match " + to_string(mode) + " mode"});
        } else if (!is_hex && !std::get<Vec2>(v.pos).finite()) {
            issues.push_back({GraphIssueKind::NonFinitePosition, "vertex " + std::to_string(v.id)});
        }
    }
    vertices.erase(std::unique(vertices.begin(), vertices.end(),
                               [](const Vertex& a, const Vertex& b) { return a.id == b.id; }),
                   vertices.end());

    std::unordered_map<int, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i].id, i);

    std::vector<Edge> kept;
    for (auto e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) {
            issues.push_back({GraphIssueKind::SelfLoop, "vertex " + std::to_string(e.u)});
            continue;
        }
        if (!index.contains(e.u) || !index.contains(e.v)) {
            issues.push_back({GraphIssueKind::DanglingEdge,
                              "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"});
            continue;
        }
        kept.push_back(e);
    }
    std::sort(kept.begin(), kept.end());
    for (std::size_t i = 1; i < kept.size(); ++i) {
        if (kept[i] == kept[i - 1]) {
            issues.push_back({GraphIssueKind::DuplicateEdge,
                              "edge (" + std::to_string(kept[i].u) + "," + std::to_string(kept[i].v) + ")"});
        }
    }
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

    PlaneGraph g;
    g.mode_ = mode;
    g.forest_ = options.forest;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(kept);
    g.adjacency_.assign(g.vertices_.size(), {});
    g.incident_.assign(g.vertices_.size(), {});
    for (std::size_t e = 0; e < g.edges_.size(); ++e) {
        const std::size_t a = index.at(g.edges_[e].u);
        const std::size_t b = index.at(g.edges_[e].v);
        g.edge_index_.emplace_back(a, b);
        g.adjacency_[a].push_back(b);
        g.adjacency_[b].push_back(a);
        g.incident_[a].push_back(e);
        g.incident_[b].push_back(e);
    }

    for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
        if (g.vertices_[i].kind == VertexKind::Attaching && g.adjacency_[i].size() != 1) {
            issues.push_back({GraphIssueKind::AttachingDegreeViolation,
                              "attaching vertex " + std::to_string(g.vertices_[i].id) + " has degree " +
                                  std::to_string(g.adjacency_[i].size())});
        }
    }

    if (!options.forest && !g.vertices_.empty()) {
        std::vector<bool> seen(g.vertices_.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto w : g.adjacency_[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != g.vertices_.size()) {
            issues.push_back({GraphIssueKind::Disconnected, std::to_string(g.vertices_.size() - reached) +
                                                                " vertices unreachable from vertex " +
                                                                std::to_string(g.vertices_[0].id)});
        }
    }

    if (!issues.empty()) throw GraphValidationError(std::move(issues));
    return g;
}

std::optional<std::size_t> PlaneGraph::find(int id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                               [](const Vertex& v, int key) { return v.id < key; });
    if (it == vertices_.end() || it->id != id) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t PlaneGraph::index_of(int id) const {
    auto i = find(id);
    if (!i) throw std::out_of_range("no vertex with id " + std::to_string(id));
    return *i;
}

std::size_t PlaneGraph::attaching_count() const {
    return static_cast<std::size_t>(std::count_if(vertices_.begin(), vertices_.end(), [](const Vertex& v) {
        return v.kind == VertexKind::Attaching;
    }));
}

std::vector<std::size_t> PlaneGraph::attaching_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (is_attaching(i)) out.push_back(i);
    }
    return out;
}

Vec2 PlaneGraph::euclid(std::size_t index) const {
    const auto& pos = vertices_[index].pos;
    if (const auto* h = std::get_if<HexCoord>(&pos)) return hex_to_euclid(*h);
    return std::get<Vec2>(pos);
}

HexCoord PlaneGraph::hex(std::size_t index) const { return std::get<HexCoord>(vertices_[index].pos); }

PlaneGraph PlaneGraph::to_float() const {
    PlaneGraph g = *this;
    g.mode_ = CoordinateMode::Float;
    for (std::size_t i = 0; i < g.vertices_.size(); ++i) g.vertices_[i].pos = euclid(i);
    return g;
}

DegreeProfile degree_profile(const PlaneGraph& g) {
    DegreeProfile p;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) ++p[g.degree(i)];
    return p;
}

std::size_t edge_index(const PlaneGraph& g, std::size_t a, std::size_t b) {
    const auto& nb = g.neighbors(a);
    for (std::size_t k = 0; k < nb.size(); ++k) {
        if (nb[k] == b) return g.incident_edges(a)[k];
    }
    throw std::out_of_range("vertices are not adjacent");
}

EmbeddingReport check_embedding(const PlaneGraph& g, double tol) {
    EmbeddingReport report;
    const std::size_t n = g.vertex_count();

    if (g.exact()) {
        std::map<HexCoord, std::size_t> seen;
        for (std::size_t i = 0; i < n; ++i) {
            auto [it, inserted] = seen.emplace(g.hex(i), i);
            if (!inserted) report.coincident_vertices.emplace_back(g.id_of(it->second), g.id_of(i));
        }
    } else {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return g.euclid(a).x < g.euclid(b).x; });
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                const Vec2 pa = g.euclid(order[a]);
                const Vec2 pb = g.euclid(order[b]);
                if (pb.x - pa.x > tol) break;
                if ((pa - pb).norm() <= tol) {
                    report.coincident_vertices.emplace_back(std::min(g.id_of(order[a]), g.id_of(order[b])),
                                                            std::max(g.id_of(order[a]), g.id_of(order[b])));
                }
            }
        }
    }

    const std::size_t m = g.edge_count();
    std::vector<bool> degenerate(m, false);
    for (std::size_t e = 0; e < m; ++e) {
        const auto [a, b] = g.edge_indices(e);
        const bool zero = g.exact() ? g.hex(a) == g.hex(b) : (g.euclid(a) - g.euclid(b)).norm() <= tol;
        if (zero) {
            degenerate[e] = true;
            report.zero_length_edges.push_back(g.edges()[e]);
        }
    }

    for (std::size_t e = 0; e < m; ++e) {
        if (degenerate[e]) continue;
        const auto [a0, a1] = g.edge_indices(e);
        for (std::size_t f = e + 1; f < m; ++f) {
            if (degenerate[f]) continue;
            const auto [b0, b1] = g.edge_indices(f);
            const bool share = a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1;
            IntersectionKind kind;
            if (g.exact()) {
                kind = segment_relation_exact(g.hex(a0), g.hex(a1), g.hex(b0), g.hex(b1));
            } else {
                kind = segment_relation({g.euclid(a0), g.euclid(a1)}, {g.euclid(b0), g.euclid(b1)}, tol).kind;
            }
            const bool legal = share ? kind == IntersectionKind::SharedEndpoint : kind == IntersectionKind::Disjoint;
            if (!legal) report.conflicts.push_back({g.edges()[e], g.edges()[f], kind});
        }
    }

    report.ok = report.conflicts.empty() && report.zero_length_edges.empty() && report.coincident_vertices.empty();
    return report;
}

namespace {

// Counter-clockwise angular order of direction vectors, starting at +x.
template <typename V, typename Cross>
bool angle_less(V a, V b, bool a_upper, bool b_upper, Cross cross_sign) {
    if (a_upper != b_upper) return a_upper;
    return cross_sign(a, b) > 0;
}

}  // namespace

std::vector<std::vector<std::size_t>> rotation_system(const PlaneGraph& g) {
    std::vector<std::vector<std::size_t>> rot(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        rot[v] = g.neighbors(v);
        if (g.exact()) {
            const HexCoord c = g.hex(v);
            auto upper = [](HexCoord d) { return d.n > 0 || (d.n == 0 && d.m > 0); };
            auto cr = [](HexCoord a, HexCoord b) {
                const auto x = a.m * b.n - a.n * b.m;
                return (x > 0) - (x < 0);
            };
            std::sort(rot[v].begin(), rot[v].end(), [&](std::size_t a, std::size_t b) {
                const HexCoord da = g.hex(a) - c;
                const HexCoord db = g.hex(b) - c;
                return angle_less(da, db, upper(da), upper(db), cr);
            });
        } else {
            const Vec2 c = g.euclid(v);
            std::sort(rot[v].begin(), rot[v].end(), [&](std::size_t a, std::size_t b) {
                const Vec2 da = g.euclid(a) - c;
                const Vec2 db = g.euclid(b) - c;
                double ta = std::atan2(da.y, da.x);
                double tb = std::atan2(db.y, db.x);
                if (ta < 0) ta += 2.0 * std::numbers::pi;
                if (tb < 0) tb += 2.0 * std::numbers::pi;
                return ta < tb;
            });
        }
    }
    return rot;
}

std::vector<std::vector<std::size_t>> biconnected_blocks(const PlaneGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::size_t> edge_stack;
    std::vector<std::vector<std::size_t>> blocks;
    int timer = 0;

    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent_edge) {
        disc[v] = low[v] = timer++;
        const auto& nb = g.neighbors(v);
        const auto& inc = g.incident_edges(v);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const std::size_t w = nb[k];
            const std::size_t e = inc[k];
            if (e == parent_edge) continue;
            if (disc[w] == -1) {
                edge_stack.push_back(e);
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<std::size_t> block;
                    while (true) {
                        const std::size_t top = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(top);
                        if (top == e) break;
                    }
                    std::sort(block.begin(), block.end());
                    blocks.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };

    const auto none = static_cast<std::size_t>(-1);
    for (std::size_t v = 0; v < n; ++v) {
        if (disc[v] == -1) dfs(v, none);
    }
    return blocks;
}

std::vector<bool> bridge_edges(const PlaneGraph& g) {
    std::vector<bool> bridge(g.edge_count(), false);
    for (const auto& block : biconnected_blocks(g)) {
        if (block.size() == 1) bridge[block.front()] = true;
    }
    return bridge;
}

}  // namespace minimalnets
