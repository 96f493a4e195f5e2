#include "minimalnets/relax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "minimalnets/minimality.hpp"

namespace minimalnets {

namespace {

class Solver {
public:
    explicit Solver(const RelaxProblem& p) : p_(p), opt_(p.options) {
        const auto& g = p.topology;
        const std::size_t n = g.vertex_count();
        pos_.resize(n);
        adj_.resize(n);
        pinned_.assign(n, false);
        alive_.assign(n, true);
        group_.resize(n);
        for (std::size_t v = 0; v < n; ++v) {
            pos_[v] = g.euclid(v);
            adj_[v] = std::set<std::size_t>(g.neighbors(v).begin(), g.neighbors(v).end());
            group_[v] = {g.id_of(v)};
        }
        for (const auto& [id, at] : p.pinned) {
            const auto v = g.index_of(id);
            pinned_[v] = true;
            pos_[v] = at;
        }
    }

    RelaxResult run();

private:
    double length() const {
        double total = 0.0;
        for (std::size_t v = 0; v < pos_.size(); ++v) {
            if (!alive_[v]) continue;
            for (auto w : adj_[v]) {
                if (v < w) total += (pos_[v] - pos_[w]).norm();
            }
        }
        return total;
    }
    double local_length(std::size_t v, Vec2 x) const {
        double s = 0.0;
        for (auto w : adj_[v]) s += (x - pos_[w]).norm();
        return s;
    }
    double residual() const {
        double worst = 0.0;
        for (std::size_t v = 0; v < pos_.size(); ++v) {
            if (!alive_[v] || pinned_[v]) continue;
            Vec2 sum{};
            for (auto w : adj_[v]) sum += (pos_[w] - pos_[v]) / (pos_[w] - pos_[v]).norm();
            worst = std::max(worst, sum.norm());
        }
        return worst;
    }

    void update(std::size_t v);
    // Contracts one edge shorter than collapse_epsilon; false if none.
    // Sets degenerate_ when a free vertex lands on a pin.
    bool collapse_one();
    void emit(std::size_t it, bool merged) {
        if (opt_.trace) opt_.trace({it, length(), merged});
    }

    const RelaxProblem& p_;
    const RelaxOptions& opt_;
    std::vector<Vec2> pos_;
    std::vector<std::set<std::size_t>> adj_;
    std::vector<bool> pinned_, alive_;
    std::vector<std::vector<int>> group_;
    bool degenerate_ = false;
};

void Solver::update(std::size_t v) {
    const Vec2 x = pos_[v];
    double nearest = std::numeric_limits<double>::infinity();
    for (auto w : adj_[v]) nearest = std::min(nearest, (x - pos_[w]).norm());

    if (nearest > 10.0 * opt_.collapse_epsilon) {
        // Weiszfeld step towards the weighted balance point, then damped.
        Vec2 num{};
        double den = 0.0;
        for (auto w : adj_[v]) {
            const double d = (x - pos_[w]).norm();
            num += pos_[w] / d;
            den += 1.0 / d;
        }
        pos_[v] = x + (num / den - x) * opt_.damping;
        return;
    }

    // Close to a neighbour: subgradient step, kept only if it helps.
    Vec2 g{};
    for (auto w : adj_[v]) {
        const Vec2 d = x - pos_[w];
        const double len = d.norm();
        if (len > opt_.collapse_epsilon) g += d / len;
    }
    if (g.norm() == 0.0) return;
    const Vec2 trial = x - g * (nearest / 2.0);
    if (local_length(v, trial) < local_length(v, x)) pos_[v] = trial;
}

bool Solver::collapse_one() {
    for (std::size_t v = 0; v < pos_.size(); ++v) {
        if (!alive_[v] || pinned_[v]) continue;
        for (auto w : adj_[v]) {
            if ((pos_[v] - pos_[w]).norm() >= opt_.collapse_epsilon) continue;
            // v disappears into w.
            group_[w].insert(group_[w].end(), group_[v].begin(), group_[v].end());
            group_[v].clear();
            for (auto u : adj_[v]) {
                adj_[u].erase(v);
                if (u != w) {
                    adj_[u].insert(w);
                    adj_[w].insert(u);
                }
            }
            adj_[v].clear();
            alive_[v] = false;
            if (pinned_[w]) degenerate_ = true;
            return true;
        }
    }
    return false;
}

RelaxResult Solver::run() {
    RelaxResult r;
    std::size_t it = 0;
    r.residual = residual();
    while (r.residual > opt_.tolerance && it < opt_.max_iterations && !degenerate_) {
        ++it;
        for (std::size_t v = 0; v < pos_.size(); ++v) {
            if (alive_[v] && !pinned_[v]) update(v);
        }
        emit(it, false);
        bool merged = false;
        while (!degenerate_ && collapse_one()) merged = true;
        if (merged) emit(it, true);
        if (!degenerate_) r.residual = residual();
    }

    r.iterations = it;
    r.total_length = length();
    const auto& g = p_.topology;
    for (std::size_t v = 0; v < pos_.size(); ++v) {
        if (alive_[v]) r.positions[g.id_of(v)] = pos_[v];
        if (alive_[v] && group_[v].size() > 1) {
            auto grp = group_[v];
            std::sort(grp.begin() + 1, grp.end());
            r.merges.push_back(std::move(grp));
        }
    }
    if (degenerate_) {
        r.status = RelaxStatus::Degenerate;
        return r;
    }
    r.status = r.residual <= opt_.tolerance ? RelaxStatus::Converged : RelaxStatus::MaxIterations;

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < pos_.size(); ++v) {
        if (!alive_[v]) continue;
        vertices.push_back({g.id_of(v), pos_[v], g.vertex(v).kind});
        for (auto w : adj_[v]) {
            if (v < w) edges.push_back({g.id_of(v), g.id_of(w)});
        }
    }
    r.graph = PlaneGraph::build(std::move(vertices), std::move(edges), CoordinateMode::Float);
    r.embedding_ok = check_embedding(*r.graph).ok;
    return r;
}

}  // namespace

RelaxProblem make_relax_problem(const PlaneGraph& g, std::map<int, Vec2> pinned, RelaxOptions options) {
    PlaneGraph f = g.exact() ? g.to_float() : g;
    std::set<int> legs;
    for (std::size_t v = 0; v < f.vertex_count(); ++v) {
        if (f.degree(v) == 1) legs.insert(f.id_of(v));
    }
    if (pinned.empty()) {
        for (int id : legs) pinned[id] = f.euclid(f.index_of(id));
    }
    std::set<int> keys;
    for (const auto& [id, at] : pinned) {
        keys.insert(id);
        if (!at.finite()) throw std::invalid_argument("pinned position of " + std::to_string(id) + " is not finite");
    }
    if (keys != legs) throw std::invalid_argument("pinned vertices must be exactly the degree-1 vertices");
    return {std::move(f), std::move(pinned), std::move(options)};
}

std::string to_string(RelaxStatus s) {
    switch (s) {
        case RelaxStatus::Converged:
            return "converged";
        case RelaxStatus::MaxIterations:
            return "max_iterations";
        case RelaxStatus::Degenerate:
            return "degenerate";
    }
    return "unknown";
}

RelaxResult minimize_length(const RelaxProblem& p) { return Solver(p).run(); }

double criticality_residual(const PlaneGraph& g) {
    return check_minimality(g, std::numeric_limits<double>::infinity()).worst_residual;
}

double total_length(const PlaneGraph& g) {
    double total = 0.0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto [a, b] = g.edge_indices(e);
        total += (g.euclid(a) - g.euclid(b)).norm();
    }
    return total;
}

std::vector<Vec2> length_gradient(const PlaneGraph& g) {
    std::vector<Vec2> grad(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) grad[v] = -unit_vector_sum(g, v);
    return grad;
}

}  // namespace minimalnets
