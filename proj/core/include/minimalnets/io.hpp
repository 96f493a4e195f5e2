#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "minimalnets/enumerator.hpp"
#include "minimalnets/graph.hpp"
#include "minimalnets/relax.hpp"

namespace minimalnets {

// Malformed or schema-violating input document.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Canonical graph document:
//   {"edges": [[u, v], ...], "mode": "exact"|"float",
//    "vertices": [{"id": i, "kind": "attaching"|"internal", "pos": [a, b]}, ...]}
// Keys sorted, vertices by id, edges sorted with u < v. Exact positions are
// integer (m, n) pairs; float positions are Euclidean (x, y).
std::string graph_to_json(const PlaneGraph& g);

// Throws InputError on bad syntax or schema, GraphValidationError on a bad graph.
PlaneGraph graph_from_json(std::string_view text);

struct PinnedTopology {
    PlaneGraph graph;
    std::map<int, Vec2> pinned;  // empty: pin attaching vertices in place
};

// Graph document plus an optional "pinned": [{"id": i, "pos": [x, y]}, ...].
PinnedTopology pinned_topology_from_json(std::string_view text);

// Minimality, embedding and cycle structure report.
std::string validation_report_json(const PlaneGraph& g, double tol);

std::string relax_result_json(const RelaxResult& r);

std::string census_text(const Census& c);

// Render-only drawing: unit edge = 40px, attaching points as open circles,
// internal vertices filled.
std::string graph_to_svg(const PlaneGraph& g);

}  // namespace minimalnets
