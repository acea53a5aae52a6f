#include "specdist/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace specdist {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adj_(n), degree_(n, 0.0) {
    for (auto& e : edges_) {
        if (e.u >= n_ || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop forbidden");
        if (!(e.weight > 0.0))
            throw std::invalid_argument("edge weight must be positive");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw std::invalid_argument("duplicate edge");
    for (const auto& e : edges_) {
        adj_[e.u].emplace_back(e.v, e.weight);
        adj_[e.v].emplace_back(e.u, e.weight);
        degree_[e.u] += e.weight;
        degree_[e.v] += e.weight;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void WeightedGraph::check_vertex(Vertex x) const {
    if (x >= n_) throw std::out_of_range("vertex out of range");
}

double WeightedGraph::degree(Vertex x) const {
    check_vertex(x);
    return degree_[x];
}

std::span<const std::pair<Vertex, double>> WeightedGraph::neighbors(Vertex x) const {
    check_vertex(x);
    return adj_[x];
}

bool WeightedGraph::has_edge(Vertex u, Vertex v) const {
    return edge_weight(u, v) != 0.0;
}

double WeightedGraph::edge_weight(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0.0;
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), v,
                               [](const auto& p, Vertex w) { return p.first < w; });
    return (it != nb.end() && it->first == v) ? it->second : 0.0;
}

bool WeightedGraph::is_unweighted() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.weight == 1.0; });
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
}

std::vector<std::vector<Vertex>> connected_components(const WeightedGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        stack.push_back(s);
        comp[s] = id;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            out[id].push_back(x);
            for (const auto& [y, w] : g.neighbors(x)) {
                if (comp[y] < 0) {
                    comp[y] = id;
                    stack.push_back(y);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
    std::vector<Edge> edges(a.edges().begin(), a.edges().end());
    const std::size_t off = a.num_vertices();
    for (const Edge& e : b.edges()) edges.push_back({e.u + off, e.v + off, e.weight});
    return WeightedGraph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

WeightedGraph complete(std::size_t n) {
    if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph complete_bipartite(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: a,b >= 1 required");
    std::vector<Edge> edges;
    edges.reserve(a * b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) edges.push_back({u, a + v, 1.0});
    return WeightedGraph(a + b, std::move(edges));
}

WeightedGraph hypercube(std::size_t d) {
    const std::size_t n = std::size_t{1} << d;
    std::vector<Edge> edges;
    edges.reserve(d * (n / 2));
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t bit = 0; bit < d; ++bit) {
            Vertex w = v ^ (std::size_t{1} << bit);
            if (v < w) edges.push_back({v, w, 1.0});
        }
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph path_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("path_graph: n >= 1 required");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
    edges.push_back({0, n - 1, 1.0});
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph barabasi_albert(std::size_t n_final, std::size_t m_edges_per_step,
                              std::size_t seed_size, std::uint64_t rng_seed) {
    if (m_edges_per_step < 1 || seed_size < m_edges_per_step || n_final < seed_size)
        throw std::invalid_argument("barabasi_albert: need seed_size >= m >= 1, n_final >= seed_size");
    std::vector<Edge> edges;
    std::vector<double> deg(n_final, 0.0);
    for (Vertex u = 0; u < seed_size; ++u)
        for (Vertex v = u + 1; v < seed_size; ++v) {
            edges.push_back({u, v, 1.0});
            deg[u] += 1.0;
            deg[v] += 1.0;
        }
    Rng rng(rng_seed);
    std::vector<Vertex> targets;
    for (Vertex next = seed_size; next < n_final; ++next) {
        targets.clear();
        double total = 0.0;
        for (Vertex v = 0; v < next; ++v) total += deg[v];
        while (targets.size() < m_edges_per_step) {
            // degree-proportional draw; rejecting already-picked targets is
            // equivalent to removing them from the pool
            double r = uniform_unit(rng) * total;
            Vertex pick = next - 1;
            double acc = 0.0;
            for (Vertex v = 0; v < next; ++v) {
                acc += deg[v];
                if (r < acc) {
                    pick = v;
                    break;
                }
            }
            if (std::find(targets.begin(), targets.end(), pick) == targets.end())
                targets.push_back(pick);
        }
        for (Vertex t : targets) {
            edges.push_back({t, next, 1.0});
            deg[t] += 1.0;
            deg[next] += 1.0;
        }
    }
    return WeightedGraph(n_final, std::move(edges));
}

WeightedGraph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::unordered_set<std::size_t> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        if (!have_header) {
            long long count = -1;
            if (first != "n" || !(ls >> count) || count < 1)
                throw ParseError(lineno, "expected header \"n <vertex-count>\"");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
            n = static_cast<std::size_t>(count);
            have_header = true;
            continue;
        }
        long long u = -1, v = -1;
        double w = 0.0;
        std::istringstream ds(line);
        std::string extra;
        if (!(ds >> u >> v >> w)) throw ParseError(lineno, "expected \"u v w\"");
        if (ds >> extra) throw ParseError(lineno, "trailing tokens after edge");
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw ParseError(lineno, "vertex out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        if (!(w > 0.0)) throw ParseError(lineno, "non-positive weight");
        Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v), w};
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.insert(e.u * n + e.v).second) throw ParseError(lineno, "duplicate edge");
        edges.push_back(e);
    }
    if (!have_header) throw ParseError(lineno, "missing header \"n <vertex-count>\"");
    return WeightedGraph(n, std::move(edges));
}

std::string to_edge_list(const WeightedGraph& g) {
    std::string out = "n " + std::to_string(g.num_vertices()) + "\n";
    char buf[64];
    for (const Edge& e : g.edges()) {
        std::snprintf(buf, sizeof(buf), "%zu %zu %.17g\n", e.u, e.v, e.weight);
        out += buf;
    }
    return out;
}

}  // namespace specdist
