#pragma once

#include <vector>

#include "minimalnets/graph.hpp"

namespace fixture {

using minimalnets::PlaneGraph;
using minimalnets::Vec2;

// Single edge between two attaching points.
PlaneGraph one_edge();

// Two hexagons joined by a zigzag path, legs on every free side.
PlaneGraph double_hexagon();

// Three hexagon cells in a row whose outer cycle has two adjacent ingoing vertices.
PlaneGraph consecutive_ingoing();

// Five sides of one hexagon, each inner vertex with an outward leg.
PlaneGraph five_turn_path();

// H_6 with a second split on a leg: a degree-3 vertex two steps off the cycle.
PlaneGraph deep_tree_outside_cycle();

// Float H_6 with the given internal vertex moved by delta.
PlaneGraph displaced_h6(int vertex_id, Vec2 delta);

// Internal vertex 0 at start, attaching 1..pins.size() at pins.
PlaneGraph star(Vec2 start, const std::vector<Vec2>& pins);

std::vector<Vec2> equilateral_pins();
std::vector<Vec2> collinear_pins();

}  // namespace fixture
