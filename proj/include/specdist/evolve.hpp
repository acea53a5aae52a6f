#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specdist/graph.hpp"
#include "specdist/rng.hpp"

namespace specdist {

/// Degree-preserving rewiring: pick two edges v1v3, v4v5 on four distinct
/// vertices, replace them with v1v4, v3v5 (endpoints in canonical order, so
/// the new pairs join the two lower and the two upper ids). Candidates whose
/// replacement edges already exist are resampled up to max_resample times;
/// nullopt reports saturation. Throws if the graph has no two vertex-disjoint
/// edges at all.
std::optional<WeightedGraph> edge_rewire(const WeightedGraph& g, Rng& rng,
                                         std::size_t max_resample = 100);

/// Duplication-divergence step: duplicate a uniformly chosen target, keep
/// each inherited edge independently with probability p_keep, drop the
/// replica if nothing activated (graph returned unchanged). The replica is
/// never linked to the target itself.
WeightedGraph dup_div(const WeightedGraph& g, double p_keep, Rng& rng);

enum class EvolveOp { rewire, dupdiv };

struct TrajectoryRecord {
    std::size_t step;
    std::size_t n_vertices;
    double d1_to_origin;
};

struct Trajectory {
    EvolveOp op;
    std::uint64_t seed;
    std::size_t saturated_steps = 0;  // rewiring steps skipped by saturation
    std::vector<TrajectoryRecord> records;
};

/// Applies the operation iteratively from g0, recording d_1 to g0 (full
/// spectral pipeline) at step 0, every sample_every steps, and at the final
/// step. Deterministic in rng_seed.
Trajectory evolve_trajectory(const WeightedGraph& g0, EvolveOp op, std::size_t steps,
                             std::size_t sample_every, std::uint64_t rng_seed,
                             double p_keep = 0.5);

struct SpearmanResult {
    double rho = 0.0;
    bool constant_column = false;  // d1 column constant; rho defined as 0
};

/// Spearman rank correlation between step index and d_1, average ranks on
/// ties. Needs at least 3 records.
SpearmanResult spearman_rho(const Trajectory& t);

/// Trajectory CSV with header "step,n,d1", 17 significant digits.
std::string trajectory_to_csv(const Trajectory& t);

}  // namespace specdist
