#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "minimalnets/graph.hpp"

namespace minimalnets {

inline constexpr double kDefaultResidualTol = 1e-8;
inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

class ZeroLengthEdgeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CycleLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct VertexResidual {
    int id = 0;
    double residual = 0.0;
    // True when the unit-vector sum was evaluated in integer lattice steps.
    bool exact = false;
};

struct MinimalityReport {
    bool ok = true;
    std::vector<VertexResidual> residuals;  // internal vertices only, by id
    double worst_residual = 0.0;
    std::vector<std::string> violations;
};

// Balance condition at every internal vertex: the unit vectors along the
// incident edges must sum to zero. Attaching vertices are exempt. In exact
// mode, vertices whose edges all run along lattice directions must balance
// exactly; the others are held to tol.
MinimalityReport check_minimality(const PlaneGraph& g, double tol = kDefaultResidualTol);

// Sum of unit vectors from vertex `index` towards its neighbours.
Vec2 unit_vector_sum(const PlaneGraph& g, std::size_t index);

struct CycleInfo {
    std::vector<int> vertices;  // counter-clockwise, starting at the smallest id
    std::vector<int> ingoing;   // sorted
    std::vector<int> outgoing;  // sorted
    double interior_area = 0.0;

    std::size_t length() const { return vertices.size(); }
    friend bool operator==(const CycleInfo&, const CycleInfo&) = default;
};

// Builds the cycle record for a vertex-index sequence in either orientation.
CycleInfo make_cycle_info(const PlaneGraph& g, std::vector<std::size_t> cycle);

// Facial cycles: every bounded face boundary plus the outer boundary of
// every biconnected block, in lexicographic vertex-sequence order.
std::vector<CycleInfo> find_cycles(const PlaneGraph& g);

// Every simple cycle. Throws CycleLimitExceeded past `cap` cycles.
std::vector<CycleInfo> enumerate_all_cycles(const PlaneGraph& g, std::size_t cap = kDefaultCycleCap);

// Cycles whose interior lies in no other cycle's interior.
std::vector<CycleInfo> maximal_cycles(const PlaneGraph& g);

// True when Int(inner) is contained in Int(outer). Both must be cycles of g.
bool interior_contained(const PlaneGraph& g, const CycleInfo& inner, const CycleInfo& outer);

// +1 strictly inside, 0 on the boundary, -1 outside.
int locate_in_cycle(const PlaneGraph& g, const CycleInfo& cycle, std::size_t vertex_index);

// Exterior turning angle in degrees at each cycle vertex, in cycle order.
std::vector<double> exterior_turns(const PlaneGraph& g, const CycleInfo& cycle);

struct StructureClass {
    enum class Kind { Tree, OneMaxCycle, MultiMaxCycle };
    Kind kind = Kind::Tree;
    std::vector<CycleInfo> maximal;
};

std::string to_string(StructureClass::Kind k);

StructureClass classify_structure(const PlaneGraph& g);

}  // namespace minimalnets
