#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "minimalnets/bounds.hpp"
#include "minimalnets/enumerator.hpp"
#include "minimalnets/hn_builder.hpp"
#include "minimalnets/minimality.hpp"

using namespace minimalnets;

namespace {

// Relabel the vertices of a map and rotate each rotation list.
PlaneMap shuffle(const PlaneMap& m, std::mt19937_64& rng) {
    std::vector<int> perm(m.vertex_count());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    PlaneMap out;
    out.rot.resize(m.vertex_count());
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
        auto r = m.rot[v];
        if (!r.empty()) std::rotate(r.begin(), r.begin() + rng() % r.size(), r.end());
        for (auto& w : r) w = perm[w];
        out.rot[perm[v]] = r;
    }
    return out;
}

PlaneMap mirror(const PlaneMap& m) {
    PlaneMap out = m;
    for (auto& r : out.rot) std::reverse(r.begin(), r.end());
    return out;
}

PlaneMap star3() { return {{{1, 2, 3}, {0}, {0}, {0}}}; }

PlaneMap hexagon_with_legs() {
    PlaneMap m;
    m.rot.resize(12);
    for (int i = 0; i < 6; ++i) {
        // next, leg, previous
        m.rot[i] = {(i + 1) % 6, 6 + i, (i + 5) % 6};
        m.rot[6 + i] = {i};
    }
    return m;
}

}  // namespace

TEST(PlaneMap, Counts) {
    const auto h = hexagon_with_legs();
    EXPECT_EQ(h.vertex_count(), 12u);
    EXPECT_EQ(h.edge_count(), 12u);
    EXPECT_EQ(h.leaf_count(), 6u);
    EXPECT_EQ(h.cyclomatic(), 1u);
}

TEST(CanonicalCode, StableUnderRelabelAndMirror) {
    std::mt19937_64 rng(3);
    for (const auto& m : enumerate_plane_maps(7)) {
        const auto c = canonical_code(m);
        for (int t = 0; t < 5; ++t) {
            ASSERT_EQ(canonical_code(shuffle(m, rng)), c);
            ASSERT_EQ(canonical_code(mirror(shuffle(m, rng))), c);
        }
    }
}

TEST(CanonicalCode, DistinctClasses) {
    const auto maps = enumerate_plane_maps(7);
    std::set<CanonicalCode> codes;
    for (const auto& m : maps) codes.insert(canonical_code(m));
    EXPECT_EQ(codes.size(), maps.size());
}

TEST(CanonicalCode, MatchesGraphRotation) {
    const auto g = build_hn(6);
    EXPECT_EQ(canonical_code(plane_map_from_graph(g)), canonical_code(hexagon_with_legs()));
    EXPECT_FALSE(code_string(canonical_code(star3())).empty());
}

TEST(EnumeratePlaneMaps, SmallN) {
    const auto t3 = enumerate_plane_maps(3);
    ASSERT_EQ(t3.size(), 1u);
    EXPECT_EQ(t3[0].vertex_count(), 4u);
    EXPECT_EQ(canonical_code(t3[0]), canonical_code(star3()));
    for (const auto& m : enumerate_plane_maps(5)) EXPECT_EQ(m.cyclomatic(), 0u);
    EXPECT_THROW(enumerate_plane_maps(1), std::out_of_range);
    EXPECT_THROW(enumerate_plane_maps(kMaxEnumerationLegs + 1), std::out_of_range);
}

TEST(EnumeratePlaneMaps, HexagonAtSix) {
    const auto want = canonical_code(hexagon_with_legs());
    bool found = false;
    for (const auto& m : enumerate_plane_maps(6)) found = found || canonical_code(m) == want;
    EXPECT_TRUE(found);
}

TEST(EnumeratePlaneMaps, TreeLaw) {
    for (int n = 2; n <= kMaxEnumerationLegs; ++n) {
        for (const auto& m : enumerate_plane_maps(n)) {
            EXPECT_EQ(m.leaf_count(), static_cast<std::size_t>(n));
            if (m.cyclomatic() == 0) EXPECT_EQ(m.vertex_count(), static_cast<std::size_t>(2 * n - 2));
        }
    }
}

TEST(DirectionLabels, Consistent) {
    for (const auto& t : enumerate_topologies(7)) {
        const auto& m = t.map;
        for (std::size_t v = 0; v < m.vertex_count(); ++v) {
            const auto& r = m.rot[v];
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (r.size() == 3) EXPECT_EQ((t.labels[v][i] - t.labels[v][0] + 12) % 6, static_cast<int>(2 * i));
                const int w = r[i];
                const auto& rw = m.rot[w];
                const auto j = std::find(rw.begin(), rw.end(), static_cast<int>(v)) - rw.begin();
                EXPECT_EQ((t.labels[v][i] + 3) % 6, t.labels[w][j]);
            }
        }
    }
}

TEST(DirectionLabels, Unlabelable) {
    // Three turns of +-60 degrees never close up.
    PlaneMap tri;
    tri.rot = {{1, 3, 2}, {2, 4, 0}, {0, 5, 1}, {0}, {1}, {2}};
    EXPECT_FALSE(direction_labels(tri).has_value());
}

TEST(Realize, HexagonEqualLengths) {
    const auto m = hexagon_with_legs();
    const DirectedTopology t{m, *direction_labels(m), canonical_code(m)};
    const auto w = realize(t);
    ASSERT_EQ(w.status, RealizationStatus::RealizedEmbedded);
    ASSERT_TRUE(w.graph.has_value());
    const auto& g = *w.graph;
    EXPECT_TRUE(check_minimality(g).ok);
    EXPECT_TRUE(check_embedding(g).ok);
    std::set<std::int64_t> cycle_lengths;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto [a, b] = g.edge_indices(e);
        if (g.degree(a) == 3 && g.degree(b) == 3) cycle_lengths.insert(w.lengths[e]);
    }
    EXPECT_EQ(cycle_lengths.size(), 1u);
}

TEST(Realize, FourCycleInfeasible) {
    std::size_t four_cycles = 0;
    for (const auto& t : enumerate_topologies(4, {.ignore_vertex_bound = true})) {
        if (t.map.cyclomatic() == 0) continue;
        ++four_cycles;
        const auto w = realize(t);
        EXPECT_EQ(w.status, RealizationStatus::Infeasible);
        EXPECT_FALSE(w.graph.has_value());
    }
    EXPECT_GT(four_cycles, 0u);
}

TEST(Realize, StarUnitLengths) {
    const auto m = star3();
    const auto w = realize({m, *direction_labels(m), canonical_code(m)});
    ASSERT_EQ(w.status, RealizationStatus::RealizedEmbedded);
    for (auto l : w.lengths) EXPECT_EQ(l, 1);
}

TEST(FeasiblePoint, Simplex) {
    // x + y = 2, x - y = 0 -> (1, 1)
    const auto p = feasible_point({{1, 1}, {1, -1}}, {2, 0});
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ((*p)[0], Rational(1));
    EXPECT_EQ((*p)[1], Rational(1));
    // x + y = -1 has no nonnegative solution
    EXPECT_FALSE(feasible_point({{1, 1}}, {-1}).has_value());
}

TEST(Census, OracleEquality) {
    for (int n = 2; n <= 7; ++n) {
        const auto b = max_vertices_bruteforce(n);
        EXPECT_EQ(static_cast<std::int64_t>(b.max_vertices), f3(n)) << n;
    }
    EXPECT_EQ(max_vertices_bruteforce(4).witnesses.size(), 1u);
}

TEST(Census, SevenIsH7) {
    const auto b = max_vertices_bruteforce(7);
    ASSERT_EQ(b.witnesses.size(), 1u);
    EXPECT_EQ(b.witnesses[0].topology.code, canonical_code(plane_map_from_graph(build_hn(7))));
}

TEST(Census, WitnessesAreMinimal) {
    for (int n = 2; n <= 7; ++n) {
        const auto c = run_census(n);
        EXPECT_EQ(c.unresolved, 0u);
        for (const auto& e : c.entries) {
            if (e.witness.status != RealizationStatus::RealizedEmbedded) continue;
            const auto& g = *e.witness.graph;
            EXPECT_TRUE(check_minimality(g.to_float(), 1e-8).ok);
            EXPECT_TRUE(check_embedding(g).ok);
            for (const auto& cyc : find_cycles(g)) {
                EXPECT_EQ(static_cast<int>(cyc.outgoing.size()) - static_cast<int>(cyc.ingoing.size()), 6);
            }
            if (classify_structure(g).kind != StructureClass::Kind::Tree) EXPECT_GE(g.attaching_count(), 6u);
        }
    }
}

TEST(Census, CyclesOnlyFromSix) {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& t : enumerate_topologies(n)) EXPECT_EQ(t.map.cyclomatic(), 0u);
    }
    EnumerateOptions wide{.ignore_vertex_bound = true};
    for (int n = 2; n <= 5; ++n) {
        for (const auto& e : run_census(n, wide).entries) {
            if (e.topology.map.cyclomatic() > 0) EXPECT_NE(e.witness.status, RealizationStatus::RealizedEmbedded);
        }
    }
}
