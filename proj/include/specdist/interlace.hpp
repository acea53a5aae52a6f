#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "specdist/graph.hpp"

namespace specdist {

/// Interlacing constants of an edit operation: the edited spectrum satisfies
/// lambda_{i-k1} <= lambda'_i <= lambda_{i+k2} with the boundary convention
/// lambda_i = 0 for i <= 0 and lambda_i = 2 for i > N; j is the vertex-count
/// change N - N'.
struct InterlaceParams {
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    int j = 0;
    friend bool operator==(const InterlaceParams&, const InterlaceParams&) = default;
};

/// Proper difference g - sub (same vertex set, theta_sub <= theta_g
/// entrywise; pairs reaching weight 0 cease to be edges). k1 = touched
/// vertices of sub minus connected components among them, k2 = touched
/// vertices, j = 0. Vertices of sub incident to no edge cannot move
/// eigenvalues and are not counted.
std::pair<WeightedGraph, InterlaceParams> delete_subgraph(const WeightedGraph& g,
                                                          const WeightedGraph& sub);

/// Single-edge deletion, the common special case of delete_subgraph.
std::pair<WeightedGraph, InterlaceParams> delete_edge(const WeightedGraph& g, Vertex u, Vertex v);

/// Identify non-adjacent u and v with disjoint neighborhoods; the merged
/// vertex keeps the union of incident edges. k = (0, 1, 1).
std::pair<WeightedGraph, InterlaceParams> contract_vertices(const WeightedGraph& g, Vertex u,
                                                            Vertex v);

/// Contract edge uv of an unweighted graph (deg > 1 at both ends): delete the
/// edge, identify the endpoints, collapse parallel edges to unit weight.
/// With m common neighbors: k = (2m, 1+2m, 1), or (0, 2, 1) when m = 0.
std::pair<WeightedGraph, InterlaceParams> contract_edge(const WeightedGraph& g, Vertex u,
                                                        Vertex v);

struct InterlacingReport {
    struct Violation {
        std::size_t index;  // 1-based i
        double lower, value, upper;
    };
    bool ok = true;
    std::vector<Violation> violations;  // beyond tolerance
    std::vector<Violation> boundary;    // raw inequality fails, within tolerance
};

/// Checks the sandwich inequalities for ascending spectra of G (size N) and
/// G' (size N - j) within tolerance tol.
InterlacingReport check_interlacing(std::span<const double> lambda,
                                    std::span<const double> lambda_prime,
                                    const InterlaceParams& params, double tol = 1e-9);

/// Transport-plan bound d_1(G, G') <= 2(k1 + k2 + j + 1)/n.
double d1_bound(const InterlaceParams& params, std::size_t n);

}  // namespace specdist
