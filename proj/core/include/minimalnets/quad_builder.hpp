#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "minimalnets/graph.hpp"

namespace minimalnets {

class ParityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Crossing {
    std::size_t first = 0;   // segment indices, first < second
    std::size_t second = 0;
    Vec2 point;
};

struct Arrangement {
    std::vector<Segment> segments;
    std::vector<Crossing> crossings;  // ordered by (first, second)
};

inline constexpr std::uint64_t kDefaultQuadSeed = 1;
inline constexpr int kQuadAttempts = 100;

// m chords of the unit circle, near-diameters, pairwise crossing with no
// three through one point. Deterministic in the seed.
Arrangement build_arrangement(int m, std::uint64_t seed = kDefaultQuadSeed);

// Violations of the arrangement invariants; empty when valid.
std::vector<std::string> arrangement_issues(const Arrangement& arr, double tol = kDefaultSegmentTol);

// Endpoints become attaching vertices 0..2m-1 (segment i owns 2i, 2i+1);
// crossings follow in arrangement order.
PlaneGraph arrangement_to_graph(const Arrangement& arr);

// Extremal 4-regular graph on n attaching points. Throws ParityError for odd n.
PlaneGraph build_quad(int n, std::uint64_t seed = kDefaultQuadSeed);

}  // namespace minimalnets
