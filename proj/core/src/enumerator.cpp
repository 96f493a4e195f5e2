#include "minimalnets/enumerator.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace minimalnets {

namespace {

int pos_in(const std::vector<int>& list, int x) {
    return static_cast<int>(std::find(list.begin(), list.end(), x) - list.begin());
}

CanonicalCode code_from(const PlaneMap& m, int v0, int i0, bool mirror) {
    const std::size_t n = m.vertex_count();
    std::vector<int> num(n, -1), entry(n, 0), order;
    order.reserve(n);
    num[static_cast<std::size_t>(v0)] = 0;
    entry[static_cast<std::size_t>(v0)] = i0;
    order.push_back(v0);
    CanonicalCode code;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const int v = order[k];
        const auto& r = m.rot[static_cast<std::size_t>(v)];
        const int d = static_cast<int>(r.size());
        code.push_back(d);
        for (int t = 0; t < d; ++t) {
            const int idx = mirror ? (entry[static_cast<std::size_t>(v)] - t + d) % d : (entry[static_cast<std::size_t>(v)] + t) % d;
            const int w = r[static_cast<std::size_t>(idx)];
            auto& nw = num[static_cast<std::size_t>(w)];
            if (nw < 0) {
                nw = static_cast<int>(order.size());
                order.push_back(w);
                entry[static_cast<std::size_t>(w)] = pos_in(m.rot[static_cast<std::size_t>(w)], v);
            }
            code.push_back(nw);
        }
    }
    return code;
}

// Subdivides edge u-v with a new vertex carrying a new leaf on one side.
PlaneMap grow(const PlaneMap& m, int u, int v, bool side) {
    PlaneMap out = m;
    const int w = static_cast<int>(out.rot.size());
    const int x = w + 1;
    auto& ru = out.rot[static_cast<std::size_t>(u)];
    auto& rv = out.rot[static_cast<std::size_t>(v)];
    ru[static_cast<std::size_t>(pos_in(ru, v))] = w;
    rv[static_cast<std::size_t>(pos_in(rv, u))] = w;
    out.rot.push_back(side ? std::vector<int>{u, x, v} : std::vector<int>{u, v, x});
    out.rot.push_back({w});
    return out;
}

using MapSet = std::map<CanonicalCode, PlaneMap>;

MapSet next_level(const MapSet& level) {
    MapSet out;
    for (const auto& [code, m] : level) {
        for (std::size_t u = 0; u < m.vertex_count(); ++u) {
            for (int v : m.rot[u]) {
                if (static_cast<int>(u) > v) continue;
                for (bool side : {false, true}) {
                    PlaneMap g = grow(m, static_cast<int>(u), v, side);
                    out.try_emplace(canonical_code(g), std::move(g));
                }
            }
        }
    }
    return out;
}

MapSet triangle_bases() {
    MapSet out;
    for (int mask = 0; mask < 8; ++mask) {
        PlaneMap m;
        m.rot.resize(6);
        for (int i = 0; i < 3; ++i) {
            const int next = (i + 1) % 3, prev = (i + 2) % 3, leg = i + 3;
            m.rot[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? std::vector<int>{next, leg, prev}
                                                                  : std::vector<int>{next, prev, leg};
            m.rot[static_cast<std::size_t>(leg)] = {i};
        }
        out.try_emplace(canonical_code(m), m);
    }
    return out;
}

// Cycle of a unicyclic map in walking order; empty for trees.
std::vector<int> cycle_of(const PlaneMap& m) {
    const std::size_t n = m.vertex_count();
    std::vector<int> deg(n);
    std::vector<bool> gone(n, false);
    std::queue<int> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(m.rot[v].size());
        if (deg[v] == 1) leaves.push(static_cast<int>(v));
    }
    while (!leaves.empty()) {
        const int v = leaves.front();
        leaves.pop();
        gone[static_cast<std::size_t>(v)] = true;
        for (int w : m.rot[static_cast<std::size_t>(v)]) {
            if (!gone[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] == 1) leaves.push(w);
        }
    }
    std::vector<int> cyc;
    for (std::size_t v = 0; v < n && cyc.empty(); ++v) {
        if (!gone[v]) cyc.push_back(static_cast<int>(v));
    }
    if (cyc.empty()) return cyc;
    for (;;) {
        const int v = cyc.back();
        int next = -1;
        for (int w : m.rot[static_cast<std::size_t>(v)]) {
            if (gone[static_cast<std::size_t>(w)] || w == cyc.front()) continue;
            if (cyc.size() >= 2 && w == cyc[cyc.size() - 2]) continue;
            if (std::find(cyc.begin(), cyc.end(), w) != cyc.end()) continue;
            next = w;
            break;
        }
        if (next < 0) break;
        cyc.push_back(next);
    }
    return cyc;
}

std::int64_t pow4(int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= 4;
    return r;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

class Realizer {
public:
    explicit Realizer(const DirectedTopology& t) : t_(t), m_(t.map) {
        for (std::size_t v = 0; v < m_.vertex_count(); ++v) {
            for (int w : m_.rot[v]) {
                if (static_cast<int>(v) < w) edges_.push_back({static_cast<int>(v), w});
            }
        }
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t e = 0; e < edges_.size(); ++e) index_[edges_[e]] = e;
        cycle_ = cycle_of(m_);
    }

    RealizationWitness run(std::uint64_t max_trials);

private:
    int label(int v, int w) const {
        const auto& r = m_.rot[static_cast<std::size_t>(v)];
        return t_.labels[static_cast<std::size_t>(v)][static_cast<std::size_t>(pos_in(r, w))];
    }
    std::size_t edge_of(int v, int w) const { return index_.at({std::min(v, w), std::max(v, w)}); }

    // Coordinates from edge lengths; nothing if a cycle fails to close.
    std::optional<PlaneGraph> place(const std::vector<std::int64_t>& len) const;
    static bool embedded(const PlaneGraph& g) { return check_embedding(g).ok; }

    // Edge depth from a root set, for geometric length decay.
    std::vector<std::int64_t> decayed(const std::vector<int>& roots, std::int64_t cycle_scale,
                                      const std::vector<std::int64_t>& cycle_len) const;

    const DirectedTopology& t_;
    const PlaneMap& m_;
    std::vector<std::pair<int, int>> edges_;
    std::map<std::pair<int, int>, std::size_t> index_;
    std::vector<int> cycle_;
};

std::optional<PlaneGraph> Realizer::place(const std::vector<std::int64_t>& len) const {
    const std::size_t n = m_.vertex_count();
    std::vector<std::optional<HexCoord>> pos(n);
    pos[0] = HexCoord{0, 0};
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : m_.rot[static_cast<std::size_t>(v)]) {
            const HexCoord p = *pos[static_cast<std::size_t>(v)] +
                               Direction6(label(v, w)).step() * len[edge_of(v, w)];
            auto& pw = pos[static_cast<std::size_t>(w)];
            if (!pw) {
                pw = p;
                q.push(w);
            } else if (*pw != p) {
                return std::nullopt;
            }
        }
    }
    std::vector<Vertex> vertices;
    for (std::size_t v = 0; v < n; ++v) {
        vertices.push_back({static_cast<int>(v), *pos[v],
                            m_.rot[v].size() == 1 ? VertexKind::Attaching : VertexKind::Internal});
    }
    std::vector<Edge> edges;
    for (auto [a, b] : edges_) edges.push_back({a, b});
    return PlaneGraph::build(std::move(vertices), std::move(edges), CoordinateMode::Exact);
}

std::vector<std::int64_t> Realizer::decayed(const std::vector<int>& roots, std::int64_t cycle_scale,
                                            const std::vector<std::int64_t>& cycle_len) const {
    const std::size_t n = m_.vertex_count();
    std::vector<int> depth(n, -1);
    std::queue<int> q;
    for (int r : roots) {
        depth[static_cast<std::size_t>(r)] = 0;
        q.push(r);
    }
    int deepest = 0;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : m_.rot[static_cast<std::size_t>(v)]) {
            if (depth[static_cast<std::size_t>(w)] >= 0) continue;
            depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
            deepest = std::max(deepest, depth[static_cast<std::size_t>(w)]);
            q.push(w);
        }
    }
    std::vector<std::int64_t> len(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto [a, b] = edges_[e];
        const int d = std::max(depth[static_cast<std::size_t>(a)], depth[static_cast<std::size_t>(b)]);
        len[e] = d == 0 ? cycle_len[e] * cycle_scale : pow4(deepest - d);
    }
    return len;
}

RealizationWitness Realizer::run(std::uint64_t max_trials) {
    RealizationWitness w;
    const std::size_t ne = edges_.size();
    std::vector<std::int64_t> base(ne, 1);

    if (!cycle_.empty()) {
        // Closure along the cycle with every length at least one.
        const std::size_t k = cycle_.size();
        std::vector<std::vector<Rational>> a(2, std::vector<Rational>(k));
        std::vector<Rational> b(2);
        std::vector<int> dirs(k);
        for (std::size_t i = 0; i < k; ++i) {
            dirs[i] = label(cycle_[i], cycle_[(i + 1) % k]);
            const HexCoord s = Direction6(dirs[i]).step();
            a[0][i] = Rational(s.m);
            a[1][i] = Rational(s.n);
            b[0] -= Rational(s.m);
            b[1] -= Rational(s.n);
        }
        const auto x = feasible_point(a, b);
        if (!x) return w;

        std::int64_t denom = 1;
        for (const auto& xi : *x) denom = lcm64(denom, xi.denominator());
        for (std::size_t i = 0; i < k; ++i) {
            const Rational li = (Rational(1) + (*x)[i]) * Rational(denom);
            base[edge_of(cycle_[i], cycle_[(i + 1) % k])] = li.numerator();
        }

        int turning = 0;
        for (std::size_t i = 0; i < k; ++i) turning += ((dirs[i] - dirs[(i + k - 1) % k] + 6) % 6) == 1 ? 1 : -1;
        if (turning != 6 && turning != -6) {
            w.status = RealizationStatus::RealizedSelfCrossing;
            w.crossing_proven = true;
            w.lengths = base;
            w.graph = place(base);
            return w;
        }
    }

    auto attempt = [&](const std::vector<std::int64_t>& len) {
        ++w.trials;
        auto g = place(len);
        if (!g || !embedded(*g)) return false;
        w.status = RealizationStatus::RealizedEmbedded;
        w.lengths = len;
        w.graph = std::move(g);
        return true;
    };

    if (attempt(base)) return w;
    if (cycle_.empty()) {
        for (std::int64_t s = 2; s <= 5; ++s) {
            auto len = base;
            for (std::size_t e = 0; e < ne; ++e) {
                const auto [a, b] = edges_[e];
                if (m_.rot[static_cast<std::size_t>(a)].size() == 3 && m_.rot[static_cast<std::size_t>(b)].size() == 3) len[e] = s;
            }
            if (attempt(len)) return w;
        }
        for (std::size_t r = 0; r < m_.vertex_count(); ++r) {
            if (m_.rot[r].size() == 3 && attempt(decayed({static_cast<int>(r)}, 1, base))) return w;
        }
    } else {
        std::int64_t deepest = static_cast<std::int64_t>(m_.vertex_count());
        if (attempt(decayed(cycle_, pow4(static_cast<int>(std::min<std::int64_t>(deepest, 12))), base))) return w;
    }

    // Odometer over {1..5}^edges.
    std::vector<std::int64_t> len(ne, 1);
    while (w.trials < max_trials) {
        if (attempt(len)) return w;
        std::size_t i = 0;
        while (i < ne && len[i] == 5) len[i++] = 1;
        if (i == ne) break;
        ++len[i];
    }

    w.status = RealizationStatus::RealizedSelfCrossing;
    w.lengths = base;
    w.graph = place(base);
    return w;
}

}  // namespace

std::size_t PlaneMap::edge_count() const {
    std::size_t d = 0;
    for (const auto& r : rot) d += r.size();
    return d / 2;
}

std::size_t PlaneMap::leaf_count() const {
    return static_cast<std::size_t>(std::count_if(rot.begin(), rot.end(), [](const auto& r) { return r.size() == 1; }));
}

CanonicalCode canonical_code(const PlaneMap& m) {
    CanonicalCode best;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
        for (std::size_t i = 0; i < m.rot[v].size(); ++i) {
            for (bool mirror : {false, true}) {
                auto c = code_from(m, static_cast<int>(v), static_cast<int>(i), mirror);
                if (best.empty() || c < best) best = std::move(c);
            }
        }
    }
    return best;
}

std::string code_string(const CanonicalCode& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "." : "") << c[i];
    return os.str();
}

PlaneMap plane_map_from_graph(const PlaneGraph& g) {
    PlaneMap m;
    for (const auto& list : rotation_system(g)) {
        std::vector<int> r;
        for (auto w : list) r.push_back(static_cast<int>(w));
        m.rot.push_back(std::move(r));
    }
    return m;
}

std::optional<DirectionLabels> direction_labels(const PlaneMap& m) {
    const std::size_t n = m.vertex_count();
    DirectionLabels labels(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (m.rot[v].size() != 1 && m.rot[v].size() != 3) return std::nullopt;
        labels[v].assign(m.rot[v].size(), -1);
    }
    if (n == 0) return labels;

    // Sets the dart v -> rot[v][i] and the rest of v's star.
    std::queue<int> q;
    auto fix = [&](int v, int i, int d) {
        auto& lv = labels[static_cast<std::size_t>(v)];
        const int deg = static_cast<int>(lv.size());
        bool fresh = false;
        for (int t = 0; t < deg; ++t) {
            const int want = (d + 2 * t) % 6;
            auto& slot = lv[static_cast<std::size_t>((i + t) % deg)];
            if (slot < 0) {
                slot = want;
                fresh = true;
            } else if (slot != want) {
                return false;
            }
        }
        if (fresh) q.push(v);
        return true;
    };
    fix(0, 0, 0);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        const auto& r = m.rot[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < r.size(); ++i) {
            const int w = r[i];
            const int back = (labels[static_cast<std::size_t>(v)][i] + 3) % 6;
            if (!fix(w, pos_in(m.rot[static_cast<std::size_t>(w)], v), back)) return std::nullopt;
        }
    }
    return labels;
}

std::vector<PlaneMap> enumerate_plane_maps(int n, EnumerateOptions options) {
    if (n < 2 || n > kMaxEnumerationLegs) {
        throw std::out_of_range("enumeration supports 2 <= n <= " + std::to_string(kMaxEnumerationLegs));
    }
    MapSet all;
    MapSet trees;
    trees.try_emplace(canonical_code(PlaneMap{{{1}, {0}}}), PlaneMap{{{1}, {0}}});
    for (int k = 2; k < n; ++k) trees = next_level(trees);
    all.insert(trees.begin(), trees.end());

    if (n >= 3) {
        MapSet cyclic = triangle_bases();
        for (int k = 3; k < n; ++k) cyclic = next_level(cyclic);
        all.insert(cyclic.begin(), cyclic.end());
    }

    const auto bound = static_cast<std::size_t>(floor_of(f3_upper(n)));
    std::vector<PlaneMap> out;
    for (auto& [code, m] : all) {
        if (options.ignore_vertex_bound || m.vertex_count() <= bound) out.push_back(std::move(m));
    }
    return out;
}

std::vector<DirectedTopology> enumerate_topologies(int n, EnumerateOptions options) {
    std::vector<DirectedTopology> out;
    for (auto& m : enumerate_plane_maps(n, options)) {
        auto labels = direction_labels(m);
        if (!labels) continue;
        auto code = canonical_code(m);
        out.push_back({std::move(m), std::move(*labels), std::move(code)});
    }
    return out;
}

std::string to_string(RealizationStatus s) {
    switch (s) {
        case RealizationStatus::RealizedEmbedded:
            return "embedded";
        case RealizationStatus::RealizedSelfCrossing:
            return "self_crossing";
        case RealizationStatus::Infeasible:
            return "infeasible";
    }
    return "unknown";
}

RealizationWitness realize(const DirectedTopology& t, std::uint64_t max_trials) {
    if (t.map.cyclomatic() > 1) throw std::invalid_argument("realize handles at most one cycle");
    return Realizer(t).run(max_trials);
}

std::optional<std::vector<Rational>> feasible_point(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    // Tableau [A | I | b] with artificial basis.
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + rows + 1));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const Rational s = b[i] < Rational(0) ? Rational(-1) : Rational(1);
        for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j] * s;
        t[i][cols + i] = Rational(1);
        t[i][cols + rows] = b[i] * s;
        basis[i] = cols + i;
    }

    for (;;) {
        // Bland's rule: lowest column with negative reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols && enter == cols; ++j) {
            if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
            Rational r(0);
            for (std::size_t i = 0; i < rows; ++i) {
                if (basis[i] >= cols) r += t[i][j];
            }
            if (r > Rational(0)) enter = j;
        }
        if (enter == cols) break;

        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= Rational(0)) continue;
            const Rational ratio = t[i][cols + rows] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded direction; phase one objective is bounded below

        const Rational p = t[leave][enter];
        for (auto& x : t[leave]) x /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == Rational(0)) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < t[i].size(); ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] >= cols) {
            if (t[i][cols + rows] != Rational(0)) return std::nullopt;
        } else {
            x[basis[i]] = t[i][cols + rows];
        }
    }
    return x;
}

Census run_census(int n, EnumerateOptions options) {
    Census c;
    c.n = n;
    const auto maps = enumerate_plane_maps(n, options);
    c.maps = maps.size();
    const auto topologies = enumerate_topologies(n, options);
    c.unlabelable = c.maps - topologies.size();
    for (const auto& t : topologies) {
        CensusEntry e{t, realize(t)};
        if (e.witness.status == RealizationStatus::RealizedEmbedded) {
            ++c.embedded;
            c.max_vertices = std::max(c.max_vertices, t.map.vertex_count());
        } else if (e.witness.status == RealizationStatus::RealizedSelfCrossing && !e.witness.crossing_proven) {
            ++c.unresolved;
        }
        c.entries.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        const auto& e = c.entries[i];
        if (e.witness.status == RealizationStatus::RealizedEmbedded && e.topology.map.vertex_count() == c.max_vertices) {
            c.witnesses.push_back(i);
        }
    }
    return c;
}

BruteForceResult max_vertices_bruteforce(int n) {
    auto census = run_census(n);
    BruteForceResult r;
    r.max_vertices = census.max_vertices;
    for (auto i : census.witnesses) r.witnesses.push_back(census.entries[i]);
    return r;
}

}  // namespace minimalnets
