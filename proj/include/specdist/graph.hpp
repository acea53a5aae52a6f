#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "specdist/rng.hpp"

namespace specdist {

using Vertex = std::size_t;

struct Edge {
    Vertex u = 0;  // canonical order u < v
    Vertex v = 0;
    double weight = 1.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Thrown by from_edge_list on malformed input; carries the 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Undirected weighted graph: dense 0-based vertex ids, symmetric positive
/// edge weights, no self-loops. Immutable after construction, so instances
/// can be shared freely across threads.
class WeightedGraph {
public:
    /// Validates: vertices in range, u != v, weight > 0, no duplicate pairs.
    WeightedGraph(std::size_t n, std::vector<Edge> edges);

    /// Graph with n vertices and no edges.
    explicit WeightedGraph(std::size_t n) : WeightedGraph(n, {}) {}

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    /// Edges in canonical order: u < v, sorted lexicographically.
    std::span<const Edge> edges() const { return edges_; }

    /// Weighted degree theta_x; 0 for isolated vertices.
    double degree(Vertex x) const;
    bool is_isolated(Vertex x) const { return degree(x) == 0.0; }

    /// Neighbors of x with edge weights, sorted by vertex id.
    std::span<const std::pair<Vertex, double>> neighbors(Vertex x) const;

    bool has_edge(Vertex u, Vertex v) const;
    /// Weight of edge uv, or 0 if absent.
    double edge_weight(Vertex u, Vertex v) const;

    bool is_unweighted() const;  // every weight exactly 1

    /// Same vertex count, same edge set, bitwise-equal weights.
    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

private:
    void check_vertex(Vertex x) const;

    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, double>>> adj_;
    std::vector<double> degree_;
};

/// Partition of the vertex set into connected components (each sorted).
std::vector<std::vector<Vertex>> connected_components(const WeightedGraph& g);

/// Disjoint union; vertices of b are shifted past those of a.
WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b);

// Deterministic families, all unit weights.
WeightedGraph complete(std::size_t n);
WeightedGraph complete_bipartite(std::size_t a, std::size_t b);
WeightedGraph hypercube(std::size_t d);  // 2^d vertices, binary labels
WeightedGraph path_graph(std::size_t n);
WeightedGraph cycle_graph(std::size_t n);  // n >= 3

/// Preferential attachment from a complete seed graph. Each growth step adds
/// one vertex with m_edges_per_step edges to distinct existing vertices
/// chosen proportionally to current degree (sampled without replacement).
WeightedGraph barabasi_albert(std::size_t n_final, std::size_t m_edges_per_step,
                              std::size_t seed_size, std::uint64_t rng_seed);

// Edge-list text format: '#' comment lines, header "n <vertex-count>",
// data lines "u v w" whitespace-separated.
WeightedGraph from_edge_list(const std::string& text);
std::string to_edge_list(const WeightedGraph& g);  // full-precision round trip

}  // namespace specdist
