#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "fixtures.hpp"
#include "minimalnets/graph.hpp"
#include "minimalnets/hn_builder.hpp"
#include "minimalnets/quad_builder.hpp"

using namespace minimalnets;

namespace {

bool raises(const std::function<void()>& f, GraphIssueKind kind) {
    try {
        f();
    } catch (const GraphValidationError& e) {
        return e.has(kind);
    }
    return false;
}

}  // namespace

TEST(Build, OneEdge) {
    const auto g = fixture::one_edge();
    EXPECT_EQ(g.vertex_count(), 2u);
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(degree_profile(g), (DegreeProfile{{1, 2}}));
    EXPECT_TRUE(check_embedding(g).ok);
}

TEST(Build, AttachingOfDegreeTwo) {
    EXPECT_TRUE(raises(
        [] {
            PlaneGraph::build({{0, HexCoord{0, 0}, VertexKind::Attaching},
                               {1, HexCoord{0, 2}, VertexKind::Attaching},
                               {2, HexCoord{1, -1}, VertexKind::Attaching}},
                              {{0, 1}, {0, 2}}, CoordinateMode::Exact);
        },
        GraphIssueKind::AttachingDegreeViolation));
}

TEST(Build, DanglingEdge) {
    EXPECT_TRUE(raises(
        [] {
            PlaneGraph::build({{0, HexCoord{0, 0}, VertexKind::Attaching}, {1, HexCoord{0, 2}, VertexKind::Attaching}},
                              {{0, 7}}, CoordinateMode::Exact);
        },
        GraphIssueKind::DanglingEdge));
}

TEST(Build, DuplicateIdAndDisconnected) {
    EXPECT_TRUE(raises(
        [] {
            PlaneGraph::build({{0, HexCoord{0, 0}, VertexKind::Attaching}, {0, HexCoord{0, 2}, VertexKind::Attaching}},
                              {}, CoordinateMode::Exact);
        },
        GraphIssueKind::DuplicateId));
    EXPECT_TRUE(raises(
        [] {
            PlaneGraph::build({{0, Vec2{0, 0}, VertexKind::Attaching}, {1, Vec2{1, 0}, VertexKind::Attaching},
                               {2, Vec2{0, 1}, VertexKind::Attaching}, {3, Vec2{1, 1}, VertexKind::Attaching}},
                              {{0, 1}, {2, 3}}, CoordinateMode::Float);
        },
        GraphIssueKind::Disconnected));
}

TEST(Build, ForestModeAcceptsComponents) {
    const auto g = PlaneGraph::build({{0, Vec2{0, 0}, VertexKind::Attaching}, {1, Vec2{1, 0}, VertexKind::Attaching},
                                      {2, Vec2{0, 1}, VertexKind::Attaching}, {3, Vec2{1, 1}, VertexKind::Attaching}},
                                     {{0, 1}, {2, 3}}, CoordinateMode::Float, {.forest = true});
    EXPECT_EQ(g.vertex_count(), 4u);
}

TEST(Build, ModeMismatchAndNonFinite) {
    EXPECT_TRUE(raises(
        [] {
            PlaneGraph::build({{0, Vec2{0, 0}, VertexKind::Attaching}, {1, HexCoord{0, 2}, VertexKind::Attaching}},
                              {{0, 1}}, CoordinateMode::Exact);
        },
        GraphIssueKind::PositionModeMismatch));
    EXPECT_TRUE(raises(
        [] {
            PlaneGraph::build({{0, Vec2{0, 0}, VertexKind::Attaching},
                               {1, Vec2{std::nan(""), 0}, VertexKind::Attaching}},
                              {{0, 1}}, CoordinateMode::Float);
        },
        GraphIssueKind::NonFinitePosition));
}

TEST(Embedding, CrossingDiagonals) {
    const auto g = PlaneGraph::build({{0, Vec2{0, 0}, VertexKind::Attaching},
                                      {1, Vec2{1, 1}, VertexKind::Attaching},
                                      {2, Vec2{0, 1}, VertexKind::Attaching},
                                      {3, Vec2{1, 0}, VertexKind::Attaching}},
                                     {{0, 1}, {2, 3}}, CoordinateMode::Float, {.forest = true});
    const auto r = check_embedding(g);
    EXPECT_FALSE(r.ok);
    ASSERT_EQ(r.conflicts.size(), 1u);
    EXPECT_EQ(r.conflicts[0].first, (Edge{0, 1}));
    EXPECT_EQ(r.conflicts[0].second, (Edge{2, 3}));
    EXPECT_EQ(r.conflicts[0].kind, IntersectionKind::ProperCrossing);
}

TEST(Embedding, HnAndQuad) {
    for (int n = 2; n <= 20; ++n) EXPECT_TRUE(check_embedding(build_hn(n)).ok) << n;
    for (int n = 2; n <= 16; n += 2) EXPECT_TRUE(check_embedding(build_quad(n)).ok) << n;
}

TEST(DegreeProfile, SmallHn) {
    EXPECT_EQ(degree_profile(build_hn(6)), (DegreeProfile{{1, 6}, {3, 6}}));
    EXPECT_EQ(degree_profile(build_hn(7)), (DegreeProfile{{1, 7}, {3, 7}}));
}

TEST(DegreeProfile, Handshake) {
    for (int n = 2; n <= 30; ++n) {
        const auto g = build_hn(n);
        std::size_t sum = 0;
        for (const auto& [d, c] : degree_profile(g)) sum += d * c;
        EXPECT_EQ(sum, 2 * g.edge_count());
        const auto p = degree_profile(g);
        const std::size_t v3 = p.count(3) ? p.at(3) : 0;
        EXPECT_EQ(g.attaching_count() + 3 * v3, 2 * g.edge_count());
    }
}

TEST(Structure, RotationAndBridges) {
    const auto g = build_hn(6);
    const auto rot = rotation_system(g);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(rot[v].size(), g.degree(v));
    const auto br = bridge_edges(g);
    std::size_t bridges = 0;
    for (bool b : br) bridges += b;
    EXPECT_EQ(bridges, 6u);  // the legs
    EXPECT_EQ(biconnected_blocks(g).size(), 7u);
    EXPECT_EQ(to_string(g.vertex(g.attaching_indices()[0]).kind), "attaching");
}
