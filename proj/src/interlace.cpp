#include "specdist/interlace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace specdist {

namespace {

/// Union-find over the vertices touched by edges of the deleted part.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

std::pair<WeightedGraph, InterlaceParams> delete_subgraph(const WeightedGraph& g,
                                                          const WeightedGraph& sub) {
    if (sub.num_vertices() != g.num_vertices())
        throw std::invalid_argument("delete_subgraph: vertex sets must match");
    for (const Edge& e : sub.edges())
        if (e.weight > g.edge_weight(e.u, e.v) + 1e-12 * g.edge_weight(e.u, e.v))
            throw std::invalid_argument("delete_subgraph: sub exceeds weights of g");

    std::vector<Edge> remaining;
    for (const Edge& e : g.edges()) {
        const double s = sub.edge_weight(e.u, e.v);
        const double w = e.weight - s;
        if (w > 0.0) remaining.push_back({e.u, e.v, w});
    }

    // touched vertices of sub and components of sub among them
    std::vector<Vertex> touched;
    for (Vertex v = 0; v < sub.num_vertices(); ++v)
        if (!sub.is_isolated(v)) touched.push_back(v);
    DisjointSets sets(touched.size());
    std::vector<std::size_t> index(sub.num_vertices(), 0);
    for (std::size_t i = 0; i < touched.size(); ++i) index[touched[i]] = i;
    for (const Edge& e : sub.edges()) sets.unite(index[e.u], index[e.v]);
    std::size_t components = 0;
    for (std::size_t i = 0; i < touched.size(); ++i)
        if (sets.find(i) == i) ++components;

    InterlaceParams params{touched.size() - components, touched.size(), 0};
    return {WeightedGraph(g.num_vertices(), std::move(remaining)), params};
}

std::pair<WeightedGraph, InterlaceParams> delete_edge(const WeightedGraph& g, Vertex u, Vertex v) {
    const double w = g.edge_weight(u, v);
    if (w == 0.0) throw std::invalid_argument("delete_edge: no such edge");
    return delete_subgraph(g, WeightedGraph(g.num_vertices(), {{u, v, w}}));
}

std::pair<WeightedGraph, InterlaceParams> contract_vertices(const WeightedGraph& g, Vertex u,
                                                            Vertex v) {
    if (u == v) throw std::invalid_argument("contract_vertices: u != v required");
    if (g.has_edge(u, v)) throw std::invalid_argument("contract_vertices: u,v adjacent");
    for (const auto& [x, w] : g.neighbors(u))
        if (g.has_edge(v, x)) throw std::invalid_argument("contract_vertices: shared neighbor");

    // merge v into u, relabel to keep ids dense
    const std::size_t n = g.num_vertices();
    std::vector<Vertex> relabel(n);
    for (Vertex x = 0; x < n; ++x) relabel[x] = (x == v) ? u : x - (x > v ? 1 : 0);
    if (u > v) relabel[v] = u - 1;
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    for (const Edge& e : g.edges()) edges.push_back({relabel[e.u], relabel[e.v], e.weight});
    return {WeightedGraph(n - 1, std::move(edges)), InterlaceParams{0, 1, 1}};
}

std::pair<WeightedGraph, InterlaceParams> contract_edge(const WeightedGraph& g, Vertex u,
                                                        Vertex v) {
    if (!g.is_unweighted())
        throw std::invalid_argument("contract_edge: only defined for unweighted graphs");
    if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: no such edge");
    if (g.neighbors(u).size() <= 1 || g.neighbors(v).size() <= 1)
        throw std::invalid_argument("contract_edge: both endpoints need degree > 1");

    std::size_t common = 0;
    for (const auto& [x, w] : g.neighbors(u))
        if (g.has_edge(v, x)) ++common;

    const std::size_t n = g.num_vertices();
    std::vector<Vertex> relabel(n);
    for (Vertex x = 0; x < n; ++x) relabel[x] = (x == v) ? u : x - (x > v ? 1 : 0);
    if (u > v) relabel[v] = u - 1;
    std::map<std::pair<Vertex, Vertex>, double> collapsed;
    for (const Edge& e : g.edges()) {
        Vertex a = relabel[e.u], b = relabel[e.v];
        if (a == b) continue;  // the contracted edge itself
        if (a > b) std::swap(a, b);
        collapsed[{a, b}] = 1.0;  // parallel edges collapse to a unit edge
    }
    std::vector<Edge> edges;
    edges.reserve(collapsed.size());
    for (const auto& [key, w] : collapsed) edges.push_back({key.first, key.second, w});
    const InterlaceParams params = common == 0 ? InterlaceParams{0, 2, 1}
                                               : InterlaceParams{2 * common, 1 + 2 * common, 1};
    return {WeightedGraph(n - 1, std::move(edges)), params};
}

InterlacingReport check_interlacing(std::span<const double> lambda,
                                    std::span<const double> lambda_prime,
                                    const InterlaceParams& params, double tol) {
    const auto n = static_cast<long long>(lambda.size());
    if (static_cast<long long>(lambda_prime.size()) != n - params.j)
        throw std::invalid_argument("check_interlacing: size mismatch with params.j");

    // boundary convention: lambda_i = 0 for i <= 0, lambda_i = 2 for i > N
    const auto padded = [&](long long i) {
        if (i <= 0) return 0.0;
        if (i > n) return 2.0;
        return lambda[static_cast<std::size_t>(i - 1)];
    };

    InterlacingReport report;
    for (long long i = 1; i <= n - params.j; ++i) {
        const double lo = padded(i - static_cast<long long>(params.k1));
        const double hi = padded(i + static_cast<long long>(params.k2));
        const double val = lambda_prime[static_cast<std::size_t>(i - 1)];
        if (val < lo - tol || val > hi + tol) {
            report.ok = false;
            report.violations.push_back({static_cast<std::size_t>(i), lo, val, hi});
        } else if (val < lo || val > hi) {
            report.boundary.push_back({static_cast<std::size_t>(i), lo, val, hi});
        }
    }
    return report;
}

double d1_bound(const InterlaceParams& params, std::size_t n) {
    if (n < 1) throw std::invalid_argument("d1_bound: n >= 1");
    if (params.j < 0)
        throw std::invalid_argument("d1_bound: apply with roles swapped so that j >= 0");
    return 2.0 *
           static_cast<double>(params.k1 + params.k2 + static_cast<std::size_t>(params.j) + 1) /
           static_cast<double>(n);
}

}  // namespace specdist
