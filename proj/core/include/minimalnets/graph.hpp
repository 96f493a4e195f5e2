#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "minimalnets/geometry.hpp"

namespace minimalnets {

enum class VertexKind { Attaching, Internal };
enum class CoordinateMode { Exact, Float };

std::string to_string(VertexKind k);
std::string to_string(CoordinateMode m);

using Position = std::variant<HexCoord, Vec2>;

struct Vertex {
    int id = 0;
    Position pos;
    VertexKind kind = VertexKind::Internal;
};

// Unordered pair of vertex ids; PlaneGraph stores them with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphIssueKind {
    DuplicateId,
    DanglingEdge,
    SelfLoop,
    DuplicateEdge,
    AttachingDegreeViolation,
    Disconnected,
    PositionModeMismatch,
    NonFinitePosition,
};

std::string to_string(GraphIssueKind k);

struct GraphIssue {
    GraphIssueKind kind;
    std::string detail;
};

class GraphValidationError : public std::invalid_argument {
public:
    explicit GraphValidationError(std::vector<GraphIssue> issues);
    const std::vector<GraphIssue>& issues() const { return issues_; }
    bool has(GraphIssueKind k) const;

private:
    std::vector<GraphIssue> issues_;
};

struct BuildOptions {
    // Disjoint unions are accepted; only used for forest counting.
    bool forest = false;
};

// Immutable embedded straight-line graph. Vertices are kept sorted by id;
// "index" below always means the position in that order.
class PlaneGraph {
public:
    static PlaneGraph build(std::vector<Vertex> vertices, std::vector<Edge> edges,
                            CoordinateMode mode, BuildOptions options = {});

    CoordinateMode mode() const { return mode_; }
    bool exact() const { return mode_ == CoordinateMode::Exact; }
    bool forest_mode() const { return forest_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Vertex& vertex(std::size_t index) const { return vertices_[index]; }

    std::optional<std::size_t> find(int id) const;
    std::size_t index_of(int id) const;
    int id_of(std::size_t index) const { return vertices_[index].id; }

    const std::vector<std::size_t>& neighbors(std::size_t index) const { return adjacency_[index]; }
    // Edge indices parallel to neighbors(index).
    const std::vector<std::size_t>& incident_edges(std::size_t index) const { return incident_[index]; }
    std::size_t degree(std::size_t index) const { return adjacency_[index].size(); }
    std::pair<std::size_t, std::size_t> edge_indices(std::size_t e) const { return edge_index_[e]; }

    bool is_attaching(std::size_t index) const { return vertices_[index].kind == VertexKind::Attaching; }
    std::size_t attaching_count() const;
    std::vector<std::size_t> attaching_indices() const;

    Vec2 euclid(std::size_t index) const;
    // Exact mode only.
    HexCoord hex(std::size_t index) const;

    PlaneGraph to_float() const;

private:
    PlaneGraph() = default;

    CoordinateMode mode_ = CoordinateMode::Exact;
    bool forest_ = false;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::pair<std::size_t, std::size_t>> edge_index_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::vector<std::size_t>> incident_;
};

using DegreeProfile = std::map<std::size_t, std::size_t>;

DegreeProfile degree_profile(const PlaneGraph& g);

struct EdgeConflict {
    Edge first;
    Edge second;
    IntersectionKind kind;
};

struct EmbeddingReport {
    bool ok = true;
    std::vector<EdgeConflict> conflicts;
    std::vector<Edge> zero_length_edges;
    std::vector<std::pair<int, int>> coincident_vertices;
};

EmbeddingReport check_embedding(const PlaneGraph& g, double tol = kDefaultSegmentTol);

// Neighbour indices of every vertex sorted counter-clockwise by the angle
// of the outgoing edge, starting from the positive x axis. Exact in exact
// mode.
std::vector<std::vector<std::size_t>> rotation_system(const PlaneGraph& g);

// Edges that lie on no cycle, as a per-edge flag.
std::vector<bool> bridge_edges(const PlaneGraph& g);

// Biconnected components as lists of edge indices, in order of discovery.
std::vector<std::vector<std::size_t>> biconnected_blocks(const PlaneGraph& g);

std::size_t edge_index(const PlaneGraph& g, std::size_t a, std::size_t b);

}  // namespace minimalnets
