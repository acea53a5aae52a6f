#include "specdist/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace specdist {

namespace {

double clamp_eigenvalue(double v) {
    if (v < -kEigTol || v > 2.0 + kEigTol)
        throw std::runtime_error("eigenvalue " + std::to_string(v) +
                                 " outside [0,2] beyond tolerance; solver failure");
    if (std::abs(v) <= kEigTol) return 0.0;      // snap boundary values: theory
    if (std::abs(v - 2.0) <= kEigTol) return 2.0;  // guarantees containment
    return v;
}

/// Laplacian restricted to the non-isolated vertices. Isolated vertices form
/// identity rows and contribute exact eigenvalue 1, so the solver never sees
/// them.
struct ActivePart {
    std::vector<Vertex> vertices;      // non-isolated, ascending
    std::vector<std::size_t> position; // vertex -> index in `vertices` (or npos)
    Eigen::MatrixXd matrix;
};

ActivePart active_laplacian(const WeightedGraph& g) {
    ActivePart part;
    part.position.assign(g.num_vertices(), static_cast<std::size_t>(-1));
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!g.is_isolated(v)) {
            part.position[v] = part.vertices.size();
            part.vertices.push_back(v);
        }
    const std::size_t m = part.vertices.size();
    part.matrix = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m),
                                            static_cast<Eigen::Index>(m));
    for (const Edge& e : g.edges()) {
        const auto i = static_cast<Eigen::Index>(part.position[e.u]);
        const auto j = static_cast<Eigen::Index>(part.position[e.v]);
        const double s = -e.weight / std::sqrt(g.degree(e.u) * g.degree(e.v));
        part.matrix(i, j) = s;
        part.matrix(j, i) = s;
    }
    return part;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve_symmetric(const Eigen::MatrixXd& m,
                                                               bool vectors) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    if (m.rows() == 0) return solver;
    solver.compute(m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolver failed to converge on a " +
                                 std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                 " matrix");
    return solver;
}

}  // namespace

Eigen::MatrixXd normalized_laplacian(const WeightedGraph& g) {
    const auto n = static_cast<Eigen::Index>(g.num_vertices());
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(n, n);
    for (const Edge& e : g.edges()) {
        const double v = -e.weight / std::sqrt(g.degree(e.u) * g.degree(e.v));
        s(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = v;
        s(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = v;
    }
    return s;
}

std::vector<double> spectrum(const WeightedGraph& g) {
    if (g.num_vertices() == 0) throw std::invalid_argument("spectrum: empty graph");
    const ActivePart part = active_laplacian(g);
    std::vector<double> values;
    values.reserve(g.num_vertices());
    if (!part.vertices.empty()) {
        const auto solver = solve_symmetric(part.matrix, /*vectors=*/false);
        for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
            values.push_back(clamp_eigenvalue(solver.eigenvalues()[i]));
    }
    values.insert(values.end(), g.num_vertices() - part.vertices.size(), 1.0);
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<double> dirichlet_spectrum(const WeightedGraph& g, std::span<const Vertex> omega) {
    if (omega.empty()) throw std::invalid_argument("dirichlet_spectrum: empty omega");
    std::vector<std::size_t> position(g.num_vertices(), static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < omega.size(); ++k) {
        if (omega[k] >= g.num_vertices())
            throw std::out_of_range("dirichlet_spectrum: vertex out of range");
        if (position[omega[k]] != static_cast<std::size_t>(-1))
            throw std::invalid_argument("dirichlet_spectrum: repeated vertex in omega");
        position[omega[k]] = k;
    }
    const auto m = static_cast<Eigen::Index>(omega.size());
    Eigen::MatrixXd mat = Eigen::MatrixXd::Identity(m, m);
    for (const Edge& e : g.edges()) {
        const std::size_t i = position[e.u], j = position[e.v];
        if (i == static_cast<std::size_t>(-1) || j == static_cast<std::size_t>(-1)) continue;
        const double s = -e.weight / std::sqrt(g.degree(e.u) * g.degree(e.v));
        mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
        mat(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = s;
    }
    const auto solver = solve_symmetric(mat, /*vectors=*/false);
    std::vector<double> values;
    values.reserve(omega.size());
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
        values.push_back(clamp_eigenvalue(solver.eigenvalues()[i]));
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<double> dirichlet_segment_spectrum(InfiniteFamily family, std::size_t n) {
    if (n == 0) throw std::invalid_argument("segment size must be positive");
    const auto m = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd mat = Eigen::MatrixXd::Identity(m, m);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double deg_i =
            (family == InfiniteFamily::half_line && i == 0) ? 1.0 : 2.0;
        const double s = -1.0 / std::sqrt(deg_i * 2.0);
        mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)) = s;
        mat(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = s;
    }
    const auto solver = solve_symmetric(mat, /*vectors=*/false);
    std::vector<double> values;
    values.reserve(n);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
        values.push_back(clamp_eigenvalue(solver.eigenvalues()[i]));
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<SpectralMeasure> exhaustion_measures(InfiniteFamily family,
                                                 std::span<const std::size_t> sizes) {
    for (std::size_t k = 0; k < sizes.size(); ++k)
        if (sizes[k] == 0 || (k > 0 && sizes[k] <= sizes[k - 1]))
            throw std::invalid_argument("exhaustion sizes must be strictly increasing");
    std::vector<SpectralMeasure> out;
    out.reserve(sizes.size());
    for (std::size_t n : sizes)
        out.push_back(SpectralMeasure::from_spectrum(dirichlet_segment_spectrum(family, n)));
    return out;
}

SpectralMeasure rooted_spectral_measure(const WeightedGraph& g, Vertex o) {
    if (o >= g.num_vertices()) throw std::out_of_range("root out of range");
    if (g.is_isolated(o))
        throw std::invalid_argument("rooted measure undefined for isolated root");
    const ActivePart part = active_laplacian(g);
    const auto solver = solve_symmetric(part.matrix, /*vectors=*/true);
    const auto row = static_cast<Eigen::Index>(part.position[o]);
    std::vector<SpectralMeasure::Atom> atoms;
    atoms.reserve(part.vertices.size());
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double psi = solver.eigenvectors()(row, i);
        atoms.push_back({clamp_eigenvalue(solver.eigenvalues()[i]), psi * psi});
    }
    return SpectralMeasure::from_atoms(std::move(atoms));
}

SpectralMeasure expected_spectral_measure(const WeightedGraph& g,
                                          std::span<const double> root_distribution) {
    if (root_distribution.size() != g.num_vertices())
        throw std::invalid_argument("root distribution length must equal vertex count");
    double total = 0.0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const double p = root_distribution[v];
        if (p < 0.0) throw std::invalid_argument("negative root probability");
        if (p > 0.0 && g.is_isolated(v))
            throw std::invalid_argument("root distribution touches an isolated vertex");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("root distribution must sum to 1");
    const ActivePart part = active_laplacian(g);
    const auto solver = solve_symmetric(part.matrix, /*vectors=*/true);
    std::vector<SpectralMeasure::Atom> atoms;
    atoms.reserve(part.vertices.size());
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        double w = 0.0;
        for (std::size_t k = 0; k < part.vertices.size(); ++k) {
            const double p = root_distribution[part.vertices[k]];
            if (p == 0.0) continue;
            const double psi = solver.eigenvectors()(static_cast<Eigen::Index>(k), i);
            w += p * psi * psi;
        }
        atoms.push_back({clamp_eigenvalue(solver.eigenvalues()[i]), w});
    }
    return SpectralMeasure::from_atoms(std::move(atoms));
}

double spectral_distance(double p, const WeightedGraph& g, const WeightedGraph& h) {
    return wasserstein(p, SpectralMeasure::from_spectrum(spectrum(g)),
                       SpectralMeasure::from_spectrum(spectrum(h)));
}

std::string spectrum_to_csv(std::span<const double> eigenvalues) {
    std::string out;
    char buf[40];
    for (double v : eigenvalues) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        out += buf;
    }
    return out;
}

std::vector<double> spectrum_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<double> values;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        values.push_back(std::stod(line));
    }
    return values;
}

}  // namespace specdist
