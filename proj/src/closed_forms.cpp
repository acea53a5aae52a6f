#include "specdist/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace specdist {
namespace closed_forms {

namespace {
constexpr double kPi = std::numbers::pi;

double cot(double x) { return std::cos(x) / std::sin(x); }
}  // namespace

std::vector<double> spectrum_complete(std::size_t n) {
    if (n < 1) throw std::invalid_argument("spectrum_complete: n >= 1");
    if (n == 1) return {1.0};
    std::vector<double> v{0.0};
    v.insert(v.end(), n - 1, static_cast<double>(n) / static_cast<double>(n - 1));
    return v;
}

std::vector<double> spectrum_bipartite(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("spectrum_bipartite: a,b >= 1");
    std::vector<double> v{0.0};
    v.insert(v.end(), a + b - 2, 1.0);
    v.push_back(2.0);
    return v;
}

std::vector<double> spectrum_cube(std::size_t d) {
    if (d < 1) throw std::invalid_argument("spectrum_cube: d >= 1");
    std::vector<double> v;
    v.reserve(std::size_t{1} << d);
    double binom = 1.0;  // C(d, i), exact in double for d <= 52
    for (std::size_t i = 0; i <= d; ++i) {
        const auto mult = static_cast<std::size_t>(std::llround(binom));
        v.insert(v.end(), mult, 2.0 * static_cast<double>(i) / static_cast<double>(d));
        binom = binom * static_cast<double>(d - i) / static_cast<double>(i + 1);
    }
    return v;
}

std::vector<double> spectrum_path(std::size_t n) {
    if (n < 2) throw std::invalid_argument("spectrum_path: n >= 2");
    std::vector<double> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(1.0 - std::cos(kPi * static_cast<double>(i) / static_cast<double>(n - 1)));
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<double> spectrum_cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("spectrum_cycle: n >= 3");
    std::vector<double> v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        v.push_back(1.0 - std::cos(2.0 * kPi * static_cast<double>(k) / static_cast<double>(n)));
    std::sort(v.begin(), v.end());
    return v;
}

double d1_complete_pair(std::size_t n, std::size_t m) {
    if (n < 2 || m < n) throw std::invalid_argument("d1_complete_pair: 2 <= n <= m");
    return 2.0 * static_cast<double>(m - n) /
           (static_cast<double>(n) * static_cast<double>(m - 1));
}

double d1_bipartite_pair(std::size_t n, std::size_t m) {
    if (n < 2 || m < n) throw std::invalid_argument("d1_bipartite_pair: 2 <= n <= m");
    return 2.0 * static_cast<double>(m - n) / (static_cast<double>(n) * static_cast<double>(m));
}

double d1_cube_pair(std::size_t d) {
    if (d < 1) throw std::invalid_argument("d1_cube_pair: d >= 1");
    return 1.0 / static_cast<double>(d + 1);
}

double d1_path_pair(std::size_t n) {
    if (n < 3) throw std::invalid_argument("d1_path_pair: n >= 3");
    const auto nd = static_cast<double>(n);
    const double c1 = cot(kPi / (2.0 * nd));
    const double c2 = cot(kPi / (2.0 * (nd - 1.0)));
    return (c1 * c1 - c2 * c2 + 1.0) / (nd * (nd + 1.0));
}

double d1_cycle_pair(std::size_t n) {
    if (n < 3) throw std::invalid_argument("d1_cycle_pair: n >= 3");
    const auto nd = static_cast<double>(n);
    if (n % 2 == 0) {
        return 1.0 / nd + (1.0 / (nd * (nd + 1.0))) *
                              (1.0 / (1.0 - std::cos(kPi / (nd + 1.0))) -
                               4.0 / (1.0 - std::cos(2.0 * kPi / nd)));
    }
    return 1.0 / (nd + 1.0) - (1.0 / (nd * (nd + 1.0))) *
                                  (1.0 / (1.0 - std::cos(kPi / nd)) -
                                   4.0 / (1.0 - std::cos(2.0 * kPi / (nd + 1.0))));
}

}  // namespace closed_forms
}  // namespace specdist
