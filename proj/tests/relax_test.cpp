#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "minimalnets/hn_builder.hpp"
#include "minimalnets/minimality.hpp"
#include "minimalnets/quad_builder.hpp"
#include "minimalnets/relax.hpp"
#include "oracles.hpp"

using namespace minimalnets;

namespace {

// Length increases below this are rounding noise in the summed edge lengths.
constexpr double kDescentSlack = 1e-13;

PlaneGraph jitter(const PlaneGraph& g, double magnitude, std::mt19937_64& rng) {
    const auto f = g.to_float();
    std::vector<Vertex> vs = f.vertices();
    for (auto& v : vs) {
        if (v.kind == VertexKind::Attaching) continue;
        auto& p = std::get<Vec2>(v.pos);
        p.x += magnitude * (2 * oracle::unit(rng) - 1);
        p.y += magnitude * (2 * oracle::unit(rng) - 1);
    }
    return PlaneGraph::build(vs, f.edges(), CoordinateMode::Float);
}

double own_length(const PlaneGraph& g, const std::vector<double>& xy) {
    double s = 0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto [a, b] = g.edge_indices(e);
        s += std::hypot(xy[2 * a] - xy[2 * b], xy[2 * a + 1] - xy[2 * b + 1]);
    }
    return s;
}

}  // namespace

TEST(Relax, EquilateralStar) {
    const auto g = fixture::star({0.3, -0.2}, fixture::equilateral_pins());
    const auto r = minimize_length(make_relax_problem(g));
    EXPECT_EQ(r.status, RelaxStatus::Converged);
    EXPECT_LE(r.residual, 1e-9);
    EXPECT_NEAR(r.positions.at(0).x, 0.0, 1e-8);
    EXPECT_NEAR(r.positions.at(0).y, 0.0, 1e-8);
    EXPECT_NEAR(r.total_length, 3.0, 1e-12);
    EXPECT_TRUE(r.embedding_ok);
}

TEST(Relax, CollinearPinsDegenerate) {
    const auto g = fixture::star({0.2, 0.4}, fixture::collinear_pins());
    const auto r = minimize_length(make_relax_problem(g));
    const bool merged_on_middle = !r.merges.empty() && r.merges[0].front() == 2;
    EXPECT_TRUE(r.status == RelaxStatus::Degenerate || merged_on_middle);
    EXPECT_FALSE(r.graph.has_value());
}

TEST(Relax, PinsMustBeLegs) {
    const auto g = fixture::star({0.3, -0.2}, fixture::equilateral_pins());
    EXPECT_THROW(make_relax_problem(g, {{1, {1, 0}}}), std::invalid_argument);
    EXPECT_THROW(make_relax_problem(g, {{0, {0, 0}}, {1, {1, 0}}, {2, {0, 1}}, {3, {1, 1}}}), std::invalid_argument);
    EXPECT_THROW(make_relax_problem(g, {{1, {NAN, 0}}, {2, {0, 1}}, {3, {1, 1}}}), std::invalid_argument);
}

TEST(Relax, DescentOnEveryTrace) {
    std::mt19937_64 rng(11);
    for (int n : {3, 5, 6, 7, 9, 12}) {
        for (int rep = 0; rep < 3; ++rep) {
            const auto g = jitter(build_hn(n), 0.2, rng);
            std::vector<RelaxTraceEvent> trace;
            RelaxOptions opt;
            opt.trace = [&](const RelaxTraceEvent& e) { trace.push_back(e); };
            const double start = total_length(g);
            minimize_length(make_relax_problem(g, {}, opt));
            double prev = start;
            for (const auto& e : trace) {
                if (!e.merged) EXPECT_LE(e.total_length, prev * (1 + kDescentSlack)) << n << " it " << e.iteration;
                prev = e.total_length;
            }
        }
    }
}

TEST(Relax, FixedPoint) {
    for (int n : {6, 8, 13}) {
        const auto g = build_hn(n);
        const auto r = minimize_length(make_relax_problem(g));
        EXPECT_EQ(r.status, RelaxStatus::Converged);
        EXPECT_EQ(r.iterations, 0u);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            const Vec2 p = r.positions.at(g.id_of(v)), q = g.euclid(v);
            EXPECT_NEAR(p.x, q.x, 1e-12);
            EXPECT_NEAR(p.y, q.y, 1e-12);
        }
    }
}

TEST(Relax, ConvexityTwoStarts) {
    std::mt19937_64 rng(23);
    for (int n : {6, 7, 9}) {
        const auto a = minimize_length(make_relax_problem(jitter(build_hn(n), 0.2, rng)));
        const auto b = minimize_length(make_relax_problem(jitter(build_hn(n), 0.2, rng)));
        ASSERT_EQ(a.status, RelaxStatus::Converged);
        ASSERT_EQ(b.status, RelaxStatus::Converged);
        EXPECT_NEAR(a.total_length, b.total_length, 1e-8) << n;
        EXPECT_NEAR(a.total_length, total_length(build_hn(n)), 1e-8) << n;
    }
}

TEST(Relax, H6ReachesOptimalLength) {
    // Hexagon size is a flat direction: legs are radial, so the length does not
    // pin it. Only the length and balance are checked here.
    std::mt19937_64 rng(1);
    const auto r = minimize_length(make_relax_problem(jitter(build_hn(6), 0.2, rng)));
    EXPECT_EQ(r.status, RelaxStatus::Converged);
    EXPECT_NEAR(r.total_length, 12.0, 1e-9);
    EXPECT_LE(r.residual, 1e-9);
}

TEST(Gradient, MatchesFiniteDifferences) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 10);
        const auto g = jitter(build_hn(n), 0.25, rng);
        std::vector<double> xy;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            xy.push_back(g.euclid(v).x);
            xy.push_back(g.euclid(v).y);
        }
        const auto fd = oracle::central_difference([&](const std::vector<double>& x) { return own_length(g, x); }, xy, 1e-6);
        const auto grad = length_gradient(g);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            for (int c = 0; c < 2; ++c) {
                const double a = c == 0 ? grad[v].x : grad[v].y, f = fd[2 * v + c];
                ASSERT_LE(std::abs(a - f), 1e-5 * std::max(1.0, std::abs(f))) << trial << " v" << v;
            }
        }
    }
}

TEST(CriticalityResidual, Values) {
    for (int n = 2; n <= 20; ++n) EXPECT_EQ(criticality_residual(build_hn(n)), 0.0);
    EXPECT_LE(criticality_residual(build_quad(16, 4)), 1e-12);

    const auto h6 = build_hn(6);
    const auto g = fixture::displaced_h6(h6.id_of(h6.vertex_count() - 1), {0.1, 0.0});
    double worst = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.is_attaching(v)) continue;
        std::vector<Vec2> nb;
        for (auto w : g.neighbors(v)) nb.push_back(g.euclid(w));
        worst = std::max(worst, oracle::unit_sum_norm(g.euclid(v), nb));
    }
    EXPECT_NEAR(criticality_residual(g), worst, 1e-12);
}
