#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace specdist {

/// Locations closer than this are collapsed into one atom. Matches the
/// eigenvalue-multiplicity detection tolerance used by the spectral code.
inline constexpr double kMergeTol = 1e-8;

/// Nondecreasing step function [0,1] -> [0,2]: value is values[i] on
/// [breakpoints[i], breakpoints[i+1]), with breakpoints[0] = 0 and
/// breakpoints[k] = 1. Right-continuous, matching the infimum convention
/// of the inverse cumulative distribution function.
class InverseCdf {
public:
    InverseCdf(std::vector<double> breakpoints, std::vector<double> values);

    std::span<const double> breakpoints() const { return breakpoints_; }
    std::span<const double> values() const { return values_; }

    double value_at(double x) const;  // x in [0,1]
    double integral() const;          // exact sum of value * interval length

private:
    std::vector<double> breakpoints_;  // 0 = t_0 < ... < t_k = 1
    std::vector<double> values_;       // v_1 <= ... <= v_k in [0,2]
};

/// Finitely supported probability measure on [0,2]: strictly increasing
/// atom locations with positive weights summing to 1.
class SpectralMeasure {
public:
    struct Atom {
        double location;
        double weight;
        friend bool operator==(const Atom&, const Atom&) = default;
    };

    /// Sorts, merges locations within kMergeTol (weighted-mean location, so
    /// the first moment is preserved), drops numerically-zero weights.
    static SpectralMeasure from_atoms(std::vector<Atom> atoms);

    /// Uniform measure on a spectrum: weight multiplicity/N per distinct value.
    static SpectralMeasure from_spectrum(std::span<const double> eigenvalues);

    static SpectralMeasure dirac(double location);

    std::span<const Atom> atoms() const { return atoms_; }
    std::size_t num_atoms() const { return atoms_.size(); }

    double total_mass() const;   // 1 within 1e-12 by construction
    double first_moment() const; // sum of location * weight

    InverseCdf inverse_cdf() const;

    /// "location,weight" lines, 17 significant digits.
    std::string to_csv() const;
    static SpectralMeasure from_csv(const std::string& text);

private:
    explicit SpectralMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
    std::vector<Atom> atoms_;
};

/// p-Wasserstein distance between measures on [0,2], p >= 1. Computed as the
/// L^p distance of the inverse CDFs over the merged breakpoint partition;
/// exact up to rounding since both integrands are piecewise constant.
double wasserstein(double p, const SpectralMeasure& mu, const SpectralMeasure& nu);

/// Exact integral of |f - g| over [0,1] for two step functions.
double l1_step_distance(const InverseCdf& f, const InverseCdf& g);

/// The 2-step function jumping at a <= 1/2 <= b: 0 on [0,a), (2b-1)/(b-a) on
/// [a,b), 2 on [b,1]. Unit integral by construction. The degenerate a = b
/// = 1/2 case is the single-jump 0/2 step.
InverseCdf admissible_two_step(double a, double b);

}  // namespace specdist
