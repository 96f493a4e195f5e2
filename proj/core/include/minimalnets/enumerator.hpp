#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minimalnets/bounds.hpp"
#include "minimalnets/graph.hpp"

namespace minimalnets {

// Connected map with every vertex of degree 1 or 3. rot[v] lists the
// neighbours of v counter-clockwise.
struct PlaneMap {
    std::vector<std::vector<int>> rot;

    std::size_t vertex_count() const { return rot.size(); }
    std::size_t edge_count() const;
    std::size_t leaf_count() const;
    // Number of independent cycles.
    std::size_t cyclomatic() const { return edge_count() + 1 - vertex_count(); }
};

using CanonicalCode = std::vector<int>;

// Minimum breadth-first code over all root darts and both orientations.
CanonicalCode canonical_code(const PlaneMap& m);
std::string code_string(const CanonicalCode& c);

// Rotation system of an embedded graph; vertex i of the map is graph index i.
PlaneMap plane_map_from_graph(const PlaneGraph& g);

// labels[v][i] is the Z6 direction of the dart v -> rot[v][i]: the three
// darts at a degree-3 vertex read d, d+2, d+4 counter-clockwise and the two
// ends of an edge differ by 3. Fixed up to rotation by labels[0][0] = 0.
using DirectionLabels = std::vector<std::vector<int>>;
std::optional<DirectionLabels> direction_labels(const PlaneMap& m);

struct DirectedTopology {
    PlaneMap map;
    DirectionLabels labels;
    CanonicalCode code;

    std::size_t legs() const { return map.leaf_count(); }
};

inline constexpr int kMaxEnumerationLegs = 7;

struct EnumerateOptions {
    // Keep maps above floor(n^2/6 + n) vertices too (unicyclic maps for n < 6).
    bool ignore_vertex_bound = false;
};

// Plane maps with n legs and at most one cycle, one per isomorphism class,
// sorted by code. Within the vertex bound no map needs a second cycle.
std::vector<PlaneMap> enumerate_plane_maps(int n, EnumerateOptions options = {});

// The labelable maps among enumerate_plane_maps, with their labels.
std::vector<DirectedTopology> enumerate_topologies(int n, EnumerateOptions options = {});

enum class RealizationStatus { RealizedEmbedded, RealizedSelfCrossing, Infeasible };
std::string to_string(RealizationStatus s);

inline constexpr std::uint64_t kMaxRealizationTrials = 1'000'000;

struct RealizationWitness {
    RealizationStatus status = RealizationStatus::Infeasible;
    // Self-crossing for every length choice (cycle turning number is not +-1).
    // When false, a self-crossing status only means the search found nothing.
    bool crossing_proven = false;
    std::vector<std::int64_t> lengths;  // parallel to graph->edges()
    std::optional<PlaneGraph> graph;    // exact coordinates, ids = map vertices
    std::uint64_t trials = 0;
};

RealizationWitness realize(const DirectedTopology& t, std::uint64_t max_trials = kMaxRealizationTrials);

// Smallest x >= 0 found by the simplex method with A x = b, or nothing.
std::optional<std::vector<Rational>> feasible_point(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

struct CensusEntry {
    DirectedTopology topology;
    RealizationWitness witness;
};

struct Census {
    int n = 0;
    std::size_t maps = 0;          // before labeling
    std::size_t unlabelable = 0;
    std::vector<CensusEntry> entries;
    std::size_t embedded = 0;
    std::size_t unresolved = 0;    // self-crossing without proof
    std::size_t max_vertices = 0;
    std::vector<std::size_t> witnesses;  // indices into entries
};

Census run_census(int n, EnumerateOptions options = {});

struct BruteForceResult {
    std::size_t max_vertices = 0;
    std::vector<CensusEntry> witnesses;
};

BruteForceResult max_vertices_bruteforce(int n);

}  // namespace minimalnets
