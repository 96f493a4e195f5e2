#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minimalnets/graph.hpp"

namespace minimalnets {

struct RelaxTraceEvent {
    std::size_t iteration = 0;
    double total_length = 0.0;
    // Set when this step contracted a short edge; the functional changed.
    bool merged = false;
};

struct RelaxOptions {
    double tolerance = 1e-9;
    std::size_t max_iterations = 100'000;
    double collapse_epsilon = 1e-7;
    double damping = 0.5;
    std::function<void(const RelaxTraceEvent&)> trace;
};

// Degree-1 vertices are pinned; the positions of the other vertices of
// `topology` are the starting guess.
struct RelaxProblem {
    PlaneGraph topology;
    std::map<int, Vec2> pinned;
    RelaxOptions options;
};

// Float copy of g with every degree-1 vertex pinned where it sits, unless
// `pinned` says otherwise. Throws std::invalid_argument when the pinned ids
// are not exactly the degree-1 vertices.
RelaxProblem make_relax_problem(const PlaneGraph& g, std::map<int, Vec2> pinned = {}, RelaxOptions options = {});

enum class RelaxStatus { Converged, MaxIterations, Degenerate };
std::string to_string(RelaxStatus s);

struct RelaxResult {
    RelaxStatus status = RelaxStatus::MaxIterations;
    std::map<int, Vec2> positions;        // surviving vertices
    double total_length = 0.0;
    double residual = 0.0;                // max unit-vector sum over interior vertices
    std::vector<std::vector<int>> merges; // each group collapsed to its first id
    std::size_t iterations = 0;
    std::optional<PlaneGraph> graph;      // absent when Degenerate
    bool embedding_ok = false;
};

RelaxResult minimize_length(const RelaxProblem& p);

// Max over internal vertices of |sum of unit vectors|; exact zero for
// balanced lattice graphs. Throws ZeroLengthEdgeError.
double criticality_residual(const PlaneGraph& g);

double total_length(const PlaneGraph& g);

// d(total length)/d(position) for every vertex index; pinned vertices
// included for completeness.
std::vector<Vec2> length_gradient(const PlaneGraph& g);

}  // namespace minimalnets
