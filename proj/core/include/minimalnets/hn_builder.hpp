#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minimalnets/graph.hpp"

namespace minimalnets {

class NotSimpleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The padding walk did not close up; indicates a construction bug.
class AngleCaseUnmatched : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct SimplicityReport {
    enum class Violation { None, FiveTurnPath, ConsecutiveIngoing, MultipleMaxCycles, CycleNotSurrounding };

    bool simple = true;
    Violation violation = Violation::None;
    std::vector<int> witness;  // offending path, pair, or vertex ids
};

std::string to_string(SimplicityReport::Violation v);

SimplicityReport is_simple(const PlaneGraph& g);

// Angle between the two half-lines bounding one gap, in sixths of a turn:
// -2, -1, 0 or +1 (i.e. -2pi/3 ... pi/3).
struct GapCase {
    int from_id = 0;
    int to_id = 0;
    int angle_sixths = 0;
    int vertices_added = 0;
};

struct PaddingResult {
    PlaneGraph graph;
    std::vector<GapCase> gaps;  // in circular order
};

// Attaching vertex indices in counter-clockwise order around their
// centroid, starting from the positive x axis. Exact mode only.
std::vector<std::size_t> circular_attaching_order(const PlaneGraph& g);

PaddingResult pad_with_report(const PlaneGraph& g);
PlaneGraph pad(const PlaneGraph& g);

// H_2 ... H_7.
PlaneGraph base_h(int n);
PlaneGraph build_hn(int n);
std::int64_t hn_vertex_count(int n);

// Splits an attaching point into an internal vertex with two new attaching
// edges along its remaining lattice directions.
PlaneGraph attach_extension(const PlaneGraph& g, int attaching_id);

// Exact graph on the union of unit lattice edges. Vertices of degree 1 are
// attaching. With add_legs, every degree-2 vertex first gets a leg along its
// free lattice direction. Ids follow (m, n) order.
PlaneGraph lattice_graph(const std::vector<std::pair<HexCoord, HexCoord>>& edges, bool add_legs);

// Boundary edges of the hexagons around the given centres (points with
// n mod 3 == 1), shared sides listed once.
std::vector<std::pair<HexCoord, HexCoord>> hexagon_cells(const std::vector<HexCoord>& centres);

}  // namespace minimalnets
