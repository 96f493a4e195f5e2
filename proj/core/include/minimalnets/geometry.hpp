#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace minimalnets {

inline constexpr double kDefaultSegmentTol = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2& operator+=(Vec2 o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr Vec2& operator-=(Vec2 o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    constexpr bool operator==(const Vec2&) const = default;

    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

class LatticeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DirectionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Integer pair (m, n) whose Euclidean image is (m * sqrt(3)/2, n / 2).
// Honeycomb vertices satisfy m = n (mod 2) and n mod 3 in {0, 2}; the
// remaining even-parity points (n mod 3 == 1) are hexagon centres.
struct HexCoord {
    std::int64_t m = 0;
    std::int64_t n = 0;

    // Rejects pairs that are not honeycomb vertices.
    static HexCoord lattice(std::int64_t m, std::int64_t n);

    constexpr HexCoord operator+(HexCoord o) const { return {m + o.m, n + o.n}; }
    constexpr HexCoord operator-(HexCoord o) const { return {m - o.m, n - o.n}; }
    constexpr HexCoord operator*(std::int64_t s) const { return {m * s, n * s}; }
    constexpr HexCoord operator-() const { return {-m, -n}; }
    friend constexpr auto operator<=>(const HexCoord&, const HexCoord&) = default;
};

enum class Sublattice { A, B };

std::optional<Sublattice> sublattice_of(HexCoord c);
inline bool is_lattice_vertex(HexCoord c) { return sublattice_of(c).has_value(); }

// One of the six honeycomb edge directions. Label k points at angle
// 30 + 60k degrees; its integer step is one of (0,+-2), (+-1,+-1).
// Sublattice A vertices use the odd labels, B vertices the even ones.
class Direction6 {
public:
    constexpr Direction6() = default;
    constexpr explicit Direction6(int k) : k_(((k % 6) + 6) % 6) {}

    constexpr int k() const { return k_; }
    constexpr Direction6 rotated(int sixths) const { return Direction6(k_ + sixths); }
    constexpr Direction6 opposite() const { return rotated(3); }

    HexCoord step() const;
    Vec2 unit() const;
    double angle_degrees() const { return 30.0 + 60.0 * k_; }

    friend constexpr auto operator<=>(const Direction6&, const Direction6&) = default;

private:
    int k_ = 0;
};

// Exact inverse of Direction6::step.
std::optional<Direction6> direction_of_step(HexCoord delta);

// If delta is a positive integer multiple of a unit step, returns the
// direction and the multiple.
struct LatticeRay {
    Direction6 direction;
    std::int64_t multiple = 0;
};
std::optional<LatticeRay> lattice_ray(HexCoord delta);

std::array<Direction6, 3> legal_directions(Sublattice s);
bool is_legal(HexCoord c, Direction6 d);

Vec2 hex_to_euclid(HexCoord c);

// Neighbouring honeycomb vertex. Throws DirectionError when c is not a
// lattice vertex or d is not in c's legal triple.
HexCoord lattice_step(HexCoord c, Direction6 d);

// Sign of the Euclidean orientation of (a, b, c). The lattice scaling is
// diagonal and positive, so integer cross products give the exact sign.
int orientation(HexCoord a, HexCoord b, HexCoord c);

struct Segment {
    Vec2 a;
    Vec2 b;

    double length() const { return (b - a).norm(); }
};

// Touching: an endpoint of one segment lies in the interior of the other.
enum class IntersectionKind { Disjoint, SharedEndpoint, ProperCrossing, Touching, Overlap };

std::string to_string(IntersectionKind k);

struct SegmentRelation {
    IntersectionKind kind = IntersectionKind::Disjoint;
    Vec2 point{};  // set for ProperCrossing and SharedEndpoint
};

SegmentRelation segment_relation(const Segment& s1, const Segment& s2,
                                 double tol = kDefaultSegmentTol);

IntersectionKind segment_relation_exact(HexCoord a0, HexCoord a1, HexCoord b0, HexCoord b1);

}  // namespace minimalnets

template <>
struct std::hash<minimalnets::HexCoord> {
    std::size_t operator()(const minimalnets::HexCoord& c) const noexcept {
        const auto h1 = std::hash<std::int64_t>{}(c.m);
        const auto h2 = std::hash<std::int64_t>{}(c.n);
        return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
};
