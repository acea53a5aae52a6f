#pragma once

#include <cstddef>
#include <vector>

namespace specdist {
namespace closed_forms {

// Closed-form normalized-Laplacian spectra, ascending. These act as
// independent oracles against the eigensolver pipeline.

/// {0, n/(n-1) x (n-1)}; n = 1 is the single-vertex convention {1}.
std::vector<double> spectrum_complete(std::size_t n);

/// {0, 1 x (a+b-2), 2} for any connected complete bipartite split.
std::vector<double> spectrum_bipartite(std::size_t a, std::size_t b);

/// {2i/d with multiplicity C(d,i), i = 0..d}.
std::vector<double> spectrum_cube(std::size_t d);

/// {1 - cos(pi i/(n-1)), i = 0..n-1}.
std::vector<double> spectrum_path(std::size_t n);

/// {1 - cos(2 pi k/n), k = 0..n-1}, sorted.
std::vector<double> spectrum_cycle(std::size_t n);

// Closed-form d_1 values between family members.

/// d_1(K_n, K_m) = 2(m-n)/(n(m-1)), n <= m.
double d1_complete_pair(std::size_t n, std::size_t m);

/// d_1 between complete bipartite graphs of total sizes n <= m: 2(m-n)/(nm).
double d1_bipartite_pair(std::size_t n, std::size_t m);

/// d_1(Q_d, Q_{d+1}) = 1/(d+1).
double d1_cube_pair(std::size_t d);

/// d_1(P_n, P_{n+1}) via the cotangent form, n >= 3.
double d1_path_pair(std::size_t n);

/// d_1(C_n, C_{n+1}); separate branches for even and odd n.
double d1_cycle_pair(std::size_t n);

}  // namespace closed_forms
}  // namespace specdist
