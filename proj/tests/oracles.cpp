#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace oracle {

std::int64_t ring_recursion_count(int n) {
    static constexpr std::int64_t base[] = {2, 4, 6, 8, 12, 14};
    if (n < 2) throw std::out_of_range("n < 2");
    if (n <= 7) return base[n - 2];
    return ring_recursion_count(n - 6) + 2 * n;
}

std::int64_t six_case_count(int n) {
    const std::int64_t k = n / 6;
    switch (n % 6) {
        case 0: return 6 * k * k + 6 * k;
        case 1: return 6 * k * k + 8 * k;
        case 2: return 6 * k * k + 10 * k + 2;
        case 3: return 6 * k * k + 12 * k + 4;
        case 4: return 6 * k * k + 14 * k + 6;
        default: return 6 * k * k + 16 * k + 8;
    }
}

double unit_sum_norm(Vec2 c, const std::vector<Vec2>& towards) {
    double sx = 0.0, sy = 0.0;
    for (const auto& p : towards) {
        const double dx = p.x - c.x, dy = p.y - c.y;
        const double len = std::sqrt(dx * dx + dy * dy);
        sx += dx / len;
        sy += dy / len;
    }
    return std::sqrt(sx * sx + sy * sy);
}

bool inside_polygon(const std::vector<Vec2>& poly, Vec2 p) {
    bool in = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Vec2 a = poly[i], b = poly[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) in = !in;
        }
    }
    return in;
}

std::vector<double> turning_degrees(const std::vector<Vec2>& poly) {
    std::vector<double> out;
    const std::size_t k = poly.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Vec2 prev = poly[(i + k - 1) % k], cur = poly[i], next = poly[(i + 1) % k];
        const double a1 = std::atan2(cur.y - prev.y, cur.x - prev.x);
        const double a2 = std::atan2(next.y - cur.y, next.x - cur.x);
        double d = (a2 - a1) * 180.0 / std::numbers::pi;
        while (d > 180.0) d -= 360.0;
        while (d <= -180.0) d += 360.0;
        out.push_back(d);
    }
    return out;
}

namespace {

int sign_of(long double v) { return (v > 0) - (v < 0); }

int orient(Vec2 a, Vec2 b, Vec2 c) {
    const long double ux = static_cast<long double>(b.x) - a.x, uy = static_cast<long double>(b.y) - a.y;
    const long double vx = static_cast<long double>(c.x) - a.x, vy = static_cast<long double>(c.y) - a.y;
    return sign_of(ux * vy - uy * vx);
}

}  // namespace

std::size_t proper_crossing_pairs(const std::vector<minimalnets::Segment>& segs) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const auto& s = segs[i];
            const auto& t = segs[j];
            const int o1 = orient(s.a, s.b, t.a), o2 = orient(s.a, s.b, t.b);
            const int o3 = orient(t.a, t.b, s.a), o4 = orient(t.a, t.b, s.b);
            if (o1 * o2 < 0 && o3 * o4 < 0) ++count;
        }
    }
    return count;
}

SideCount probe_sides(const minimalnets::PlaneGraph& g, const std::vector<int>& cycle_ids) {
    std::vector<Vec2> poly;
    std::vector<std::size_t> idx;
    for (int id : cycle_ids) {
        idx.push_back(g.index_of(id));
        poly.push_back(g.euclid(idx.back()));
    }
    SideCount sc;
    const std::size_t k = idx.size();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t v = idx[i], prev = idx[(i + k - 1) % k], next = idx[(i + 1) % k];
        if (g.degree(v) != 3) continue;
        for (auto w : g.neighbors(v)) {
            if (w == prev || w == next) continue;
            const Vec2 a = g.euclid(v), b = g.euclid(w);
            const Vec2 probe{a.x + 0.01 * (b.x - a.x), a.y + 0.01 * (b.y - a.y)};
            if (inside_polygon(poly, probe)) {
                ++sc.ingoing;
            } else {
                ++sc.outgoing;
            }
        }
    }
    return sc;
}

std::vector<double> central_difference(const std::function<double(const std::vector<double>&)>& f,
                                       std::vector<double> x, double h) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double keep = x[i];
        x[i] = keep + h;
        const double up = f(x);
        x[i] = keep - h;
        const double down = f(x);
        x[i] = keep;
        g[i] = (up - down) / (2 * h);
    }
    return g;
}

std::vector<std::vector<std::size_t>> face_union_cycles(const minimalnets::PlaneGraph& g,
                                                        const std::vector<minimalnets::CycleInfo>& bounded_faces,
                                                        std::size_t samples, std::mt19937_64& rng) {
    using EdgeKey = std::pair<std::size_t, std::size_t>;
    auto key = [](std::size_t a, std::size_t b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; };

    const std::size_t f = bounded_faces.size();
    std::vector<std::vector<EdgeKey>> face_edges(f);
    std::map<EdgeKey, std::vector<std::size_t>> faces_of;
    for (std::size_t i = 0; i < f; ++i) {
        const auto& vs = bounded_faces[i].vertices;
        for (std::size_t j = 0; j < vs.size(); ++j) {
            const auto e = key(g.index_of(vs[j]), g.index_of(vs[(j + 1) % vs.size()]));
            face_edges[i].push_back(e);
            faces_of[e].push_back(i);
        }
    }

    std::vector<std::vector<std::size_t>> out;
    if (f == 0) return out;
    for (std::size_t s = 0; s < samples * 4 && out.size() < samples; ++s) {
        // Grow a random face set through shared edges.
        std::set<std::size_t> chosen{static_cast<std::size_t>(rng() % f)};
        const std::size_t target = 1 + rng() % f;
        while (chosen.size() < target) {
            std::vector<std::size_t> frontier;
            for (auto c : chosen) {
                for (const auto& e : face_edges[c]) {
                    for (auto o : faces_of[e]) {
                        if (!chosen.count(o)) frontier.push_back(o);
                    }
                }
            }
            if (frontier.empty()) break;
            chosen.insert(frontier[rng() % frontier.size()]);
        }

        std::map<EdgeKey, int> parity;
        for (auto c : chosen) {
            for (const auto& e : face_edges[c]) parity[e] ^= 1;
        }
        std::map<std::size_t, std::vector<std::size_t>> adj;
        std::size_t edges = 0;
        for (const auto& [e, p] : parity) {
            if (!p) continue;
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
            ++edges;
        }
        bool two_regular = !adj.empty();
        for (const auto& [v, ns] : adj) two_regular = two_regular && ns.size() == 2;
        if (!two_regular) continue;

        std::vector<std::size_t> walk{adj.begin()->first};
        std::size_t prev = walk[0], cur = adj.begin()->second[0];
        while (cur != walk[0]) {
            walk.push_back(cur);
            const auto& ns = adj[cur];
            const std::size_t nxt = ns[0] == prev ? ns[1] : ns[0];
            prev = cur;
            cur = nxt;
        }
        if (walk.size() != edges) continue;  // several components
        out.push_back(std::move(walk));
    }
    return out;
}

}  // namespace oracle
