#include "specdist/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "specdist/measure.hpp"
#include "specdist/spectral.hpp"

namespace specdist {

namespace {

bool has_disjoint_edge_pair(const WeightedGraph& g) {
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge &a = edges[i], &b = edges[j];
            if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) return true;
        }
    return false;
}

}  // namespace

std::optional<WeightedGraph> edge_rewire(const WeightedGraph& g, Rng& rng,
                                         std::size_t max_resample) {
    if (g.num_edges() < 2 || g.num_vertices() < 4 || !has_disjoint_edge_pair(g))
        throw std::invalid_argument("edge_rewire: need two edges on four distinct vertices");
    const auto edges = g.edges();
    for (std::size_t attempt = 0; attempt < max_resample; ++attempt) {
        const std::size_t i = uniform_index(rng, edges.size());
        const std::size_t j = uniform_index(rng, edges.size());
        if (i == j) continue;
        const Edge &e1 = edges[i], &e2 = edges[j];
        if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) continue;
        // replacement pairs: lower ids together, upper ids together
        if (g.has_edge(e1.u, e2.u) || g.has_edge(e1.v, e2.v)) continue;
        std::vector<Edge> next;
        next.reserve(edges.size());
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (k != i && k != j) next.push_back(edges[k]);
        next.push_back({e1.u, e2.u, 1.0});
        next.push_back({e1.v, e2.v, 1.0});
        return WeightedGraph(g.num_vertices(), std::move(next));
    }
    return std::nullopt;  // saturated
}

WeightedGraph dup_div(const WeightedGraph& g, double p_keep, Rng& rng) {
    if (g.num_vertices() == 0) throw std::invalid_argument("dup_div: empty graph");
    if (!(p_keep >= 0.0 && p_keep <= 1.0))
        throw std::invalid_argument("dup_div: p_keep must be a probability");
    const Vertex target = uniform_index(rng, g.num_vertices());
    std::vector<Vertex> kept;
    for (const auto& [nbr, w] : g.neighbors(target))
        if (bernoulli(rng, p_keep)) kept.push_back(nbr);
    if (kept.empty()) return g;  // replica deleted
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    const Vertex replica = g.num_vertices();
    for (Vertex nbr : kept) edges.push_back({nbr, replica, 1.0});
    return WeightedGraph(g.num_vertices() + 1, std::move(edges));
}

Trajectory evolve_trajectory(const WeightedGraph& g0, EvolveOp op, std::size_t steps,
                             std::size_t sample_every, std::uint64_t rng_seed, double p_keep) {
    if (sample_every < 1) throw std::invalid_argument("evolve_trajectory: sample_every >= 1");
    Rng rng(rng_seed);
    Trajectory traj{op, rng_seed, 0, {}};
    const SpectralMeasure origin = SpectralMeasure::from_spectrum(spectrum(g0));

    WeightedGraph current = g0;
    const auto record = [&](std::size_t step) {
        const double d1 =
            wasserstein(1.0, SpectralMeasure::from_spectrum(spectrum(current)), origin);
        traj.records.push_back({step, current.num_vertices(), d1});
    };
    record(0);
    for (std::size_t step = 1; step <= steps; ++step) {
        if (op == EvolveOp::rewire) {
            if (auto next = edge_rewire(current, rng)) {
                current = std::move(*next);
            } else {
                ++traj.saturated_steps;  // skip, keep evolving
            }
        } else {
            current = dup_div(current, p_keep, rng);
        }
        if (step % sample_every == 0 || step == steps) record(step);
    }
    return traj;
}

SpearmanResult spearman_rho(const Trajectory& t) {
    const std::size_t n = t.records.size();
    if (n < 3) throw std::invalid_argument("spearman_rho: need at least 3 records");

    const auto ranks = [n](const std::vector<double>& xs) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
        std::vector<double> rank(n);
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
            const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
            for (std::size_t k = i; k <= j; ++k) rank[order[k]] = avg;
            i = j + 1;
        }
        return rank;
    };

    std::vector<double> steps, d1s;
    steps.reserve(n);
    d1s.reserve(n);
    for (const auto& r : t.records) {
        steps.push_back(static_cast<double>(r.step));
        d1s.push_back(r.d1_to_origin);
    }
    const std::vector<double> rx = ranks(steps), ry = ranks(d1s);
    const double mean = (static_cast<double>(n) + 1.0) / 2.0;
    double cov = 0.0, var_x = 0.0, var_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cov += (rx[i] - mean) * (ry[i] - mean);
        var_x += (rx[i] - mean) * (rx[i] - mean);
        var_y += (ry[i] - mean) * (ry[i] - mean);
    }
    if (var_y == 0.0 || var_x == 0.0) return {0.0, true};
    return {cov / std::sqrt(var_x * var_y), false};
}

std::string trajectory_to_csv(const Trajectory& t) {
    std::string out = "step,n,d1\n";
    char buf[96];
    for (const auto& r : t.records) {
        std::snprintf(buf, sizeof(buf), "%zu,%zu,%.17g\n", r.step, r.n_vertices, r.d1_to_origin);
        out += buf;
    }
    return out;
}

}  // namespace specdist
