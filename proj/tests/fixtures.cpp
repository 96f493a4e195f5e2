#include "fixtures.hpp"

#include <cmath>

#include "minimalnets/hn_builder.hpp"

namespace fixture {

using namespace minimalnets;

PlaneGraph one_edge() {
    return PlaneGraph::build({{0, HexCoord{0, 0}, VertexKind::Attaching}, {1, HexCoord{0, 2}, VertexKind::Attaching}},
                             {{0, 1}}, CoordinateMode::Exact);
}

PlaneGraph double_hexagon() {
    auto e = hexagon_cells({{1, 1}, {7, 1}});
    e.push_back({{2, 0}, {3, -1}});
    e.push_back({{3, -1}, {4, 0}});
    e.push_back({{4, 0}, {5, -1}});
    e.push_back({{5, -1}, {6, 0}});
    return lattice_graph(e, true);
}

PlaneGraph consecutive_ingoing() { return lattice_graph(hexagon_cells({{3, 1}, {2, 4}, {0, 4}}), true); }

PlaneGraph five_turn_path() {
    const std::vector<HexCoord> path = {{0, 2}, {0, 0}, {1, -1}, {2, 0}, {2, 2}, {1, 3}};
    std::vector<std::pair<HexCoord, HexCoord>> e;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) e.push_back({path[i], path[i + 1]});
    return lattice_graph(e, true);
}

PlaneGraph deep_tree_outside_cycle() {
    auto g = build_hn(6);
    const int leg = g.id_of(g.attaching_indices().front());
    g = attach_extension(g, leg);
    // One of the two fresh legs hangs off the split vertex; split it again.
    const auto split = g.index_of(leg);
    for (auto w : g.neighbors(split)) {
        if (g.is_attaching(w)) return attach_extension(g, g.id_of(w));
    }
    return g;
}

PlaneGraph displaced_h6(int vertex_id, Vec2 delta) {
    const auto g = build_hn(6).to_float();
    std::vector<Vertex> vs = g.vertices();
    for (auto& v : vs) {
        if (v.id == vertex_id) v.pos = std::get<Vec2>(v.pos) + delta;
    }
    return PlaneGraph::build(vs, g.edges(), CoordinateMode::Float);
}

PlaneGraph star(Vec2 start, const std::vector<Vec2>& pins) {
    std::vector<Vertex> vs{{0, start, VertexKind::Internal}};
    std::vector<Edge> es;
    for (std::size_t i = 0; i < pins.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        vs.push_back({id, pins[i], VertexKind::Attaching});
        es.push_back({0, id});
    }
    return PlaneGraph::build(vs, es, CoordinateMode::Float);
}

std::vector<Vec2> equilateral_pins() {
    const double h = std::sqrt(3.0) / 2.0;
    return {{1.0, 0.0}, {-0.5, h}, {-0.5, -h}};
}

std::vector<Vec2> collinear_pins() { return {{-1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}; }

}  // namespace fixture
