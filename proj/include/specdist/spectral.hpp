#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "specdist/graph.hpp"
#include "specdist/measure.hpp"

namespace specdist {

/// Absolute eigenvalue tolerance: solve residuals are checked against it and
/// values within it of 0 or 2 are clamped onto the boundary.
inline constexpr double kEigTol = 1e-9;

/// Symmetric conjugate of the normalized Laplacian: diagonal 1 (identity rows
/// for isolated vertices), off-diagonal -theta_xy / sqrt(theta_x theta_y).
/// Same spectrum as I - D^{-1}A but amenable to a symmetric solver.
Eigen::MatrixXd normalized_laplacian(const WeightedGraph& g);

/// All N eigenvalues, ascending, clamped into [0,2]. Isolated vertices enter
/// as exact 1s without touching the solver. Throws on solver failure; never
/// returns a partial spectrum.
std::vector<double> spectrum(const WeightedGraph& g);

/// Eigenvalues of the Dirichlet restriction to omega: matrix rows keep the
/// ambient degrees of g, couplings outside omega are dropped.
std::vector<double> dirichlet_spectrum(const WeightedGraph& g, std::span<const Vertex> omega);

/// Concrete infinite families with unit weights. Segments are the canonical
/// exhaustion: any n consecutive vertices of the integer line (all ambient
/// degrees 2), the first n vertices of the half line (degree 1 at the end).
enum class InfiniteFamily { integer_line, half_line };

std::vector<double> dirichlet_segment_spectrum(InfiniteFamily family, std::size_t n);

/// One exhaustion measure per segment size; sizes must be strictly increasing.
std::vector<SpectralMeasure> exhaustion_measures(InfiniteFamily family,
                                                 std::span<const std::size_t> sizes);

/// Spectral measure seen from root o: weight psi_i(o)^2 on eigenvalue
/// lambda_i, eigenvalues merged within kMergeTol. Requires theta_o > 0.
SpectralMeasure rooted_spectral_measure(const WeightedGraph& g, Vertex o);

/// Convex combination of rooted measures under root_distribution (length N,
/// sums to 1, supported on non-isolated vertices). With the uniform
/// distribution this equals the empirical spectral measure.
SpectralMeasure expected_spectral_measure(const WeightedGraph& g,
                                          std::span<const double> root_distribution);

/// d_p between the spectral measures of two graphs (the full pipeline).
double spectral_distance(double p, const WeightedGraph& g, const WeightedGraph& h);

// Spectrum CSV: one eigenvalue per line, 17 significant digits.
std::string spectrum_to_csv(std::span<const double> eigenvalues);
std::vector<double> spectrum_from_csv(const std::string& text);

}  // namespace specdist
