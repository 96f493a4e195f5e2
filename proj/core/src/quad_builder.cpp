#include "minimalnets/quad_builder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace minimalnets {

namespace {

// Uniform in [0, 1) from the top 53 bits; std::uniform_real_distribution
// is not bit-reproducible across standard libraries.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Vec2 on_circle(double angle) { return {std::cos(angle), std::sin(angle)}; }

double distance_to_segment(const Segment& s, Vec2 p) {
    const Vec2 d = s.b - s.a;
    const double t = std::clamp(dot(p - s.a, d) / d.norm2(), 0.0, 1.0);
    return (s.a + d * t - p).norm();
}

// Special points closer than clearance/m^2 make sub-edges so short that
// rounding in the crossing coordinates shows up in the balance residual.
constexpr double kClearance = 0.1;

// Intersection of the two supporting lines, in extended precision.
Vec2 line_intersection(const Segment& s, const Segment& t) {
    using L = long double;
    const L dx = L(s.b.x) - s.a.x, dy = L(s.b.y) - s.a.y;
    const L ex = L(t.b.x) - t.a.x, ey = L(t.b.y) - t.a.y;
    const L fx = L(t.a.x) - s.a.x, fy = L(t.a.y) - s.a.y;
    const L u = (fx * ey - fy * ex) / (dx * ey - dy * ex);
    return {static_cast<double>(s.a.x + u * dx), static_cast<double>(s.a.y + u * dy)};
}

// Tries to append `cand`; fails if it misses a segment or comes within
// `clearance` of an existing special point.
bool try_add(Arrangement& arr, const Segment& cand, double tol, double clearance) {
    std::vector<Crossing> added;
    for (std::size_t i = 0; i < arr.segments.size(); ++i) {
        const auto rel = segment_relation(arr.segments[i], cand, tol);
        if (rel.kind != IntersectionKind::ProperCrossing) return false;
        added.push_back({i, arr.segments.size(), line_intersection(arr.segments[i], cand)});
    }
    for (const auto& c : arr.crossings) {
        if (distance_to_segment(cand, c.point) <= clearance) return false;
    }
    for (std::size_t a = 0; a < added.size(); ++a) {
        for (std::size_t b = a + 1; b < added.size(); ++b) {
            if ((added[a].point - added[b].point).norm() <= clearance) return false;
        }
        for (Vec2 e : {cand.a, cand.b}) {
            if ((added[a].point - e).norm() <= clearance) return false;
        }
        const Segment& old = arr.segments[added[a].first];
        for (Vec2 e : {old.a, old.b}) {
            if ((added[a].point - e).norm() <= clearance) return false;
        }
    }
    arr.segments.push_back(cand);
    arr.crossings.insert(arr.crossings.end(), added.begin(), added.end());
    return true;
}

}  // namespace

Arrangement build_arrangement(int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("arrangement needs m >= 1");
    std::mt19937_64 rng(seed);
    const double pi = std::numbers::pi;
    const double spread = 0.35 * pi / m;
    const double clearance = kClearance / (static_cast<double>(m) * m);

    Arrangement arr;
    for (int i = 0; i < m; ++i) {
        const double theta = i * pi / m;
        bool placed = false;
        for (int attempt = 0; attempt < kQuadAttempts && !placed; ++attempt) {
            const double delta = (2.0 * unit_draw(rng) - 1.0) * spread;
            // Relax the clearance as attempts run out.
            const double c = std::max(kDefaultSegmentTol, clearance * (1.0 - static_cast<double>(attempt) / kQuadAttempts));
            placed = try_add(arr, {on_circle(theta), on_circle(theta + pi + delta)}, kDefaultSegmentTol, c);
        }
        if (!placed) throw std::logic_error("could not place segment " + std::to_string(i));
    }
    std::sort(arr.crossings.begin(), arr.crossings.end(), [](const Crossing& x, const Crossing& y) {
        return std::pair(x.first, x.second) < std::pair(y.first, y.second);
    });
    return arr;
}

std::vector<std::string> arrangement_issues(const Arrangement& arr, double tol) {
    std::vector<std::string> issues;
    const std::size_t m = arr.segments.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (segment_relation(arr.segments[i], arr.segments[j], tol).kind != IntersectionKind::ProperCrossing) {
                issues.push_back("segments " + std::to_string(i) + " and " + std::to_string(j) + " do not cross");
            }
        }
    }
    for (const auto& c : arr.crossings) {
        for (std::size_t k = 0; k < m; ++k) {
            if (k == c.first || k == c.second) continue;
            if (distance_to_segment(arr.segments[k], c.point) <= tol) {
                issues.push_back("three segments through crossing " + std::to_string(c.first) + "/" +
                                 std::to_string(c.second));
            }
        }
        for (std::size_t s : {c.first, c.second}) {
            const auto& seg = arr.segments[s];
            if ((seg.a - c.point).norm() <= tol || (seg.b - c.point).norm() <= tol) {
                issues.push_back("crossing on an endpoint of segment " + std::to_string(s));
            }
        }
    }
    if (arr.crossings.size() != m * (m - 1) / 2) issues.push_back("crossing count mismatch");
    return issues;
}

PlaneGraph arrangement_to_graph(const Arrangement& arr) {
    if (const auto issues = arrangement_issues(arr); !issues.empty()) {
        throw std::logic_error("degenerate arrangement: " + issues.front());
    }
    const std::size_t m = arr.segments.size();
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < m; ++i) {
        vertices.push_back({static_cast<int>(2 * i), arr.segments[i].a, VertexKind::Attaching});
        vertices.push_back({static_cast<int>(2 * i + 1), arr.segments[i].b, VertexKind::Attaching});
    }

    // (parameter along the segment, vertex id) per segment.
    std::vector<std::vector<std::pair<double, int>>> along(m);
    for (std::size_t i = 0; i < m; ++i) {
        along[i].push_back({0.0, static_cast<int>(2 * i)});
        along[i].push_back({1.0, static_cast<int>(2 * i + 1)});
    }
    for (std::size_t c = 0; c < arr.crossings.size(); ++c) {
        const auto& x = arr.crossings[c];
        const int id = static_cast<int>(2 * m + c);
        vertices.push_back({id, x.point, VertexKind::Internal});
        for (std::size_t s : {x.first, x.second}) {
            const Segment& seg = arr.segments[s];
            const Vec2 d = seg.b - seg.a;
            along[s].push_back({dot(x.point - seg.a, d) / d.norm2(), id});
        }
    }

    std::vector<Edge> edges;
    for (auto& list : along) {
        std::sort(list.begin(), list.end());
        for (std::size_t k = 0; k + 1 < list.size(); ++k) edges.push_back({list[k].second, list[k + 1].second});
    }
    return PlaneGraph::build(std::move(vertices), std::move(edges), CoordinateMode::Float);
}

PlaneGraph build_quad(int n, std::uint64_t seed) {
    if (n % 2 != 0) {
        throw ParityError("no 4-regular minimal graph on an odd number of attaching points (n=" + std::to_string(n) +
                          ")");
    }
    if (n < 2) throw std::invalid_argument("quad needs n >= 2");
    return arrangement_to_graph(build_arrangement(n / 2, seed));
}

}  // namespace minimalnets
