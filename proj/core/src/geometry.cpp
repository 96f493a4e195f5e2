#include "minimalnets/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

namespace minimalnets {

namespace {

constexpr std::array<HexCoord, 6> kSteps = {{
    {1, 1},
    {0, 2},
    {-1, 1},
    {-1, -1},
    {0, -2},
    {1, -1},
}};

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
    const auto r = a % b;
    return r < 0 ? r + b : r;
}

std::int64_t cross_mn(HexCoord a, HexCoord b) { return a.m * b.n - a.n * b.m; }

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

HexCoord HexCoord::lattice(std::int64_t m, std::int64_t n) {
    const HexCoord c{m, n};
    if (!is_lattice_vertex(c)) {
        std::ostringstream os;
        os << "(" << m << "," << n << ") is not a honeycomb vertex";
        throw LatticeError(os.str());
    }
    return c;
}

std::optional<Sublattice> sublattice_of(HexCoord c) {
    if (floor_mod(c.m - c.n, 2) != 0) return std::nullopt;
    switch (floor_mod(c.n, 3)) {
        case 0:
            return Sublattice::A;
        case 2:
            return Sublattice::B;
        default:
            return std::nullopt;
    }
}

HexCoord Direction6::step() const { return kSteps[static_cast<std::size_t>(k_)]; }

Vec2 Direction6::unit() const { return hex_to_euclid(step()); }

std::optional<Direction6> direction_of_step(HexCoord delta) {
    for (int k = 0; k < 6; ++k) {
        if (kSteps[static_cast<std::size_t>(k)] == delta) return Direction6(k);
    }
    return std::nullopt;
}

std::optional<LatticeRay> lattice_ray(HexCoord delta) {
    for (int k = 0; k < 6; ++k) {
        const HexCoord s = kSteps[static_cast<std::size_t>(k)];
        std::int64_t mult = 0;
        if (s.m != 0) {
            if (delta.m % s.m != 0) continue;
            mult = delta.m / s.m;
        } else {
            if (delta.n % s.n != 0) continue;
            mult = delta.n / s.n;
        }
        if (mult > 0 && s * mult == delta) return LatticeRay{Direction6(k), mult};
    }
    return std::nullopt;
}

std::array<Direction6, 3> legal_directions(Sublattice s) {
    if (s == Sublattice::A) return {Direction6(1), Direction6(3), Direction6(5)};
    return {Direction6(0), Direction6(2), Direction6(4)};
}

bool is_legal(HexCoord c, Direction6 d) {
    const auto s = sublattice_of(c);
    if (!s) return false;
    return (d.k() % 2 == 1) == (*s == Sublattice::A);
}

Vec2 hex_to_euclid(HexCoord c) {
    return {static_cast<double>(c.m) * (std::numbers::sqrt3 / 2.0), static_cast<double>(c.n) / 2.0};
}

HexCoord lattice_step(HexCoord c, Direction6 d) {
    if (!is_lattice_vertex(c)) {
        std::ostringstream os;
        os << "(" << c.m << "," << c.n << ") is not a honeycomb vertex";
        throw DirectionError(os.str());
    }
    if (!is_legal(c, d)) {
        std::ostringstream os;
        os << "direction " << d.k() << " is not legal at (" << c.m << "," << c.n << ")";
        throw DirectionError(os.str());
    }
    return c + d.step();
}

int orientation(HexCoord a, HexCoord b, HexCoord c) { return sign(cross_mn(b - a, c - a)); }

std::string to_string(IntersectionKind k) {
    switch (k) {
        case IntersectionKind::Disjoint:
            return "disjoint";
        case IntersectionKind::SharedEndpoint:
            return "shared_endpoint";
        case IntersectionKind::ProperCrossing:
            return "proper_crossing";
        case IntersectionKind::Touching:
            return "touching";
        case IntersectionKind::Overlap:
            return "overlap";
    }
    return "unknown";
}

namespace {

// Signed distance of p from the line through s, positive on the left.
double side(const Segment& s, Vec2 p) {
    const Vec2 d = s.b - s.a;
    return cross(d, p - s.a) / d.norm();
}

double distance_to_segment(const Segment& s, Vec2 p) {
    const Vec2 d = s.b - s.a;
    const double t = std::clamp(dot(p - s.a, d) / d.norm2(), 0.0, 1.0);
    return (s.a + d * t - p).norm();
}

bool near(Vec2 a, Vec2 b, double tol) { return (a - b).norm() <= tol; }

int fuzzy_sign(double v, double tol) { return v > tol ? 1 : (v < -tol ? -1 : 0); }

}  // namespace

SegmentRelation segment_relation(const Segment& s1, const Segment& s2, double tol) {
    const int o1 = fuzzy_sign(side(s1, s2.a), tol);
    const int o2 = fuzzy_sign(side(s1, s2.b), tol);
    const int o3 = fuzzy_sign(side(s2, s1.a), tol);
    const int o4 = fuzzy_sign(side(s2, s1.b), tol);

    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        const Vec2 d = s1.b - s1.a;
        const double len = d.norm();
        const Vec2 u = d / len;
        const double ta = dot(s2.a - s1.a, u);
        const double tb = dot(s2.b - s1.a, u);
        const double overlap = std::min(len, std::max(ta, tb)) - std::max(0.0, std::min(ta, tb));
        if (overlap > tol) return {IntersectionKind::Overlap, {}};
        if (overlap < -tol) return {IntersectionKind::Disjoint, {}};
        for (Vec2 p : {s1.a, s1.b}) {
            if (near(p, s2.a, tol) || near(p, s2.b, tol)) return {IntersectionKind::SharedEndpoint, p};
        }
        return {IntersectionKind::Touching, {}};
    }

    for (Vec2 p : {s1.a, s1.b}) {
        if (near(p, s2.a, tol) || near(p, s2.b, tol)) return {IntersectionKind::SharedEndpoint, p};
    }

    if (o1 * o2 < 0 && o3 * o4 < 0) {
        const Vec2 d1 = s1.b - s1.a;
        const Vec2 d2 = s2.b - s2.a;
        const double t = cross(s2.a - s1.a, d2) / cross(d1, d2);
        return {IntersectionKind::ProperCrossing, s1.a + d1 * t};
    }

    if (distance_to_segment(s1, s2.a) <= tol || distance_to_segment(s1, s2.b) <= tol ||
        distance_to_segment(s2, s1.a) <= tol || distance_to_segment(s2, s1.b) <= tol) {
        return {IntersectionKind::Touching, {}};
    }
    return {IntersectionKind::Disjoint, {}};
}

namespace {

// p is collinear with [a, b]; true when p lies strictly between a and b.
bool strictly_inside(HexCoord a, HexCoord b, HexCoord p) {
    const auto lo_m = std::min(a.m, b.m), hi_m = std::max(a.m, b.m);
    const auto lo_n = std::min(a.n, b.n), hi_n = std::max(a.n, b.n);
    if (p == a || p == b) return false;
    return p.m >= lo_m && p.m <= hi_m && p.n >= lo_n && p.n <= hi_n;
}

}  // namespace

IntersectionKind segment_relation_exact(HexCoord a0, HexCoord a1, HexCoord b0, HexCoord b1) {
    const int o1 = orientation(a0, a1, b0);
    const int o2 = orientation(a0, a1, b1);
    const int o3 = orientation(b0, b1, a0);
    const int o4 = orientation(b0, b1, a1);

    if (o1 == 0 && o2 == 0) {
        // Project onto the axis with the larger extent of a.
        const bool use_m = std::abs(a1.m - a0.m) >= std::abs(a1.n - a0.n);
        auto key = [use_m](HexCoord c) { return use_m ? c.m : c.n; };
        const auto alo = std::min(key(a0), key(a1)), ahi = std::max(key(a0), key(a1));
        const auto blo = std::min(key(b0), key(b1)), bhi = std::max(key(b0), key(b1));
        const auto lo = std::max(alo, blo), hi = std::min(ahi, bhi);
        if (hi > lo) return IntersectionKind::Overlap;
        if (hi < lo) return IntersectionKind::Disjoint;
        return IntersectionKind::SharedEndpoint;
    }

    if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) return IntersectionKind::SharedEndpoint;

    if (o1 * o2 < 0 && o3 * o4 < 0) return IntersectionKind::ProperCrossing;

    if ((o1 == 0 && strictly_inside(a0, a1, b0)) || (o2 == 0 && strictly_inside(a0, a1, b1)) ||
        (o3 == 0 && strictly_inside(b0, b1, a0)) || (o4 == 0 && strictly_inside(b0, b1, a1))) {
        return IntersectionKind::Touching;
    }
    return IntersectionKind::Disjoint;
}

}  // namespace minimalnets
