#include "specdist/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace specdist {

InverseCdf::InverseCdf(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() != values_.size() + 1 || values_.empty())
        throw std::invalid_argument("InverseCdf: need k+1 breakpoints for k values");
    if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0)
        throw std::invalid_argument("InverseCdf: breakpoints must span [0,1]");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] > breakpoints_[i - 1]))
            throw std::invalid_argument("InverseCdf: breakpoints must increase");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0.0 || values_[i] > 2.0)
            throw std::invalid_argument("InverseCdf: values must lie in [0,2]");
        if (i > 0 && values_[i] < values_[i - 1])
            throw std::invalid_argument("InverseCdf: values must be nondecreasing");
    }
}

double InverseCdf::value_at(double x) const {
    if (x < 0.0 || x > 1.0) throw std::out_of_range("InverseCdf: x outside [0,1]");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
    if (idx == 0) idx = 1;                              // x == 0
    if (idx > values_.size()) idx = values_.size();     // x == 1
    return values_[idx - 1];
}

double InverseCdf::integral() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        sum += values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
    return sum;
}

SpectralMeasure SpectralMeasure::from_atoms(std::vector<Atom> atoms) {
    for (const Atom& a : atoms) {
        if (!(a.weight >= 0.0)) throw std::invalid_argument("atom weight must be nonnegative");
        if (a.location < -kMergeTol || a.location > 2.0 + kMergeTol)
            throw std::invalid_argument("atom location outside [0,2]");
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    std::vector<Atom> merged;
    for (const Atom& a : atoms) {
        if (a.weight < 1e-16) continue;  // numerically-zero mass
        if (!merged.empty() && a.location - merged.back().location <= kMergeTol) {
            Atom& m = merged.back();
            const double w = m.weight + a.weight;
            m.location = (m.location * m.weight + a.location * a.weight) / w;
            m.weight = w;
        } else {
            merged.push_back(a);
        }
    }
    if (merged.empty()) throw std::invalid_argument("measure needs at least one atom");
    double mass = 0.0;
    for (const Atom& a : merged) mass += a.weight;
    if (std::abs(mass - 1.0) > 1e-9)
        throw std::invalid_argument("atom weights must sum to 1");
    for (Atom& a : merged) a.location = std::clamp(a.location, 0.0, 2.0);
    return SpectralMeasure(std::move(merged));
}

SpectralMeasure SpectralMeasure::from_spectrum(std::span<const double> eigenvalues) {
    if (eigenvalues.empty()) throw std::invalid_argument("empty spectrum");
    const double w = 1.0 / static_cast<double>(eigenvalues.size());
    std::vector<Atom> atoms;
    atoms.reserve(eigenvalues.size());
    for (double lambda : eigenvalues) atoms.push_back({lambda, w});
    return from_atoms(std::move(atoms));
}

SpectralMeasure SpectralMeasure::dirac(double location) {
    return from_atoms({{location, 1.0}});
}

double SpectralMeasure::total_mass() const {
    double m = 0.0;
    for (const Atom& a : atoms_) m += a.weight;
    return m;
}

double SpectralMeasure::first_moment() const {
    double m = 0.0;
    for (const Atom& a : atoms_) m += a.location * a.weight;
    return m;
}

InverseCdf SpectralMeasure::inverse_cdf() const {
    std::vector<double> breaks{0.0};
    std::vector<double> values;
    double cum = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        cum += atoms_[i].weight;
        const bool last = (i + 1 == atoms_.size());
        const double next = last ? 1.0 : std::min(cum, 1.0);
        if (next <= breaks.back()) continue;  // rounding collapsed the interval
        values.push_back(atoms_[i].location);
        breaks.push_back(next);
    }
    breaks.back() = 1.0;
    return InverseCdf(std::move(breaks), std::move(values));
}

std::string SpectralMeasure::to_csv() const {
    std::string out;
    char buf[80];
    for (const Atom& a : atoms_) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", a.location, a.weight);
        out += buf;
    }
    return out;
}

SpectralMeasure SpectralMeasure::from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Atom> atoms;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        double loc = 0.0, w = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf", &loc, &w) != 2)
            throw std::invalid_argument("measure CSV: expected \"location,weight\"");
        atoms.push_back({loc, w});
    }
    return from_atoms(std::move(atoms));
}

namespace {

/// Walks the merged breakpoint partition of two step functions and applies
/// fn(length, fa, fb) on every interval. Both integrands are constant on
/// each piece, so downstream integrals are finite sums.
template <typename Fn>
void for_each_merged_interval(const InverseCdf& f, const InverseCdf& g, Fn&& fn) {
    const auto fb = f.breakpoints(), gb = g.breakpoints();
    const auto fv = f.values(), gv = g.values();
    std::size_t i = 0, j = 0;  // current value segment of f and g
    double prev = 0.0;
    while (i < fv.size() && j < gv.size()) {
        const double next = std::min(fb[i + 1], gb[j + 1]);
        if (next > prev) fn(next - prev, fv[i], gv[j]);
        if (fb[i + 1] <= next) ++i;
        if (gb[j + 1] <= next) ++j;
        prev = next;
    }
}

}  // namespace

double wasserstein(double p, const SpectralMeasure& mu, const SpectralMeasure& nu) {
    if (!(p >= 1.0)) throw std::invalid_argument("wasserstein: p >= 1 required");
    const InverseCdf f = mu.inverse_cdf();
    const InverseCdf g = nu.inverse_cdf();
    double sum = 0.0;
    if (p == 1.0) {
        for_each_merged_interval(f, g, [&](double len, double a, double b) {
            sum += std::abs(a - b) * len;
        });
        return sum;
    }
    for_each_merged_interval(f, g, [&](double len, double a, double b) {
        sum += std::pow(std::abs(a - b), p) * len;
    });
    return std::pow(sum, 1.0 / p);
}

double l1_step_distance(const InverseCdf& f, const InverseCdf& g) {
    double sum = 0.0;
    for_each_merged_interval(f, g, [&](double len, double a, double b) {
        sum += std::abs(a - b) * len;
    });
    return sum;
}

InverseCdf admissible_two_step(double a, double b) {
    if (!(a >= 0.0 && a <= 0.5 && b >= 0.5 && b <= 1.0))
        throw std::invalid_argument("admissible_two_step: need a in [0,1/2], b in [1/2,1]");
    std::vector<double> breaks{0.0};
    std::vector<double> values;
    if (a > 0.0) {
        values.push_back(0.0);
        breaks.push_back(a);
    }
    if (b > a) {
        values.push_back((2.0 * b - 1.0) / (b - a));
        breaks.push_back(b);
    }
    if (b < 1.0) {
        values.push_back(2.0);
        breaks.push_back(1.0);
    } else {
        breaks.back() = 1.0;
    }
    return InverseCdf(std::move(breaks), std::move(values));
}

}  // namespace specdist
