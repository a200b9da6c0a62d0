#pragma once

// Quadrature kernels shared by the permittivity and fluctuation-pressure
// integrals: adaptive Gauss-Legendre panels with a 7/15 point error
// estimate, fixed Gauss-Hermite nodes for gaussian averages, and a
// trapezoid rule on tabulated samples.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir::quad {

// Gauss-Legendre abscissae/weights on [-1, 1].
inline constexpr std::array<double, 4> gl7_x = {
    0.0, 0.4058451513773972, 0.7415311855993945, 0.9491079123427585};
inline constexpr std::array<double, 4> gl7_w = {
    0.4179591836734694, 0.3818300505051189, 0.2797053914892766, 0.1294849661688697};

inline constexpr std::array<double, 8> gl15_x = {
    0.0,
    0.2011940939974345, 0.3941513470775634, 0.5709721726085388,
    0.7244177313601701, 0.8482065834104272, 0.9372733924007060,
    0.9879925180204854};
inline constexpr std::array<double, 8> gl15_w = {
    0.2025782419255613,
    0.1984314853271116, 0.1861610000155622, 0.1662692058169939,
    0.1395706779261543, 0.1071592204671719, 0.0703660474881081,
    0.0307532419961173};

template <typename F>
double gl15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = gl15_w[0] * f(mid);
    for (std::size_t i = 1; i < gl15_x.size(); ++i)
        sum += gl15_w[i] * (f(mid - half * gl15_x[i]) + f(mid + half * gl15_x[i]));
    return sum * half;
}

template <typename F>
double gl7(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = gl7_w[0] * f(mid);
    for (std::size_t i = 1; i < gl7_x.size(); ++i)
        sum += gl7_w[i] * (f(mid - half * gl7_x[i]) + f(mid + half * gl7_x[i]));
    return sum * half;
}

struct AdaptiveOptions {
    double rel_tol = 1e-6;
    std::size_t max_panels = 4000;      // hard cap on accepted panels
    std::size_t min_subdivisions = 4;   // initial uniform split of [a, b]
};

// Adaptive bisection with GL15 values and |GL15 - GL7| error estimates.
// The error budget is apportioned to panels by length against a first-pass
// estimate of the whole integral. Throws numerical_error if the panel cap
// is reached before the tolerance is met.
template <typename F>
double adaptive_gl(F&& f, double a, double b, const AdaptiveOptions& opt = {},
                   const char* label = "integral") {
    if (!(b > a)) throw std::invalid_argument("adaptive_gl: need b > a");

    struct Panel {
        double a, b, coarse;
    };
    std::vector<Panel> stack;
    double whole = 0.0;
    const std::size_t n0 = opt.min_subdivisions < 1 ? 1 : opt.min_subdivisions;
    for (std::size_t i = 0; i < n0; ++i) {
        double pa = a + (b - a) * static_cast<double>(i) / static_cast<double>(n0);
        double pb = a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(n0);
        double est = gl15(f, pa, pb);
        whole += est;
        stack.push_back({pa, pb, est});
    }
    const double scale = std::abs(whole);

    double total = 0.0;
    std::size_t accepted = 0;
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        double fine = p.coarse;
        double err = std::abs(fine - gl7(f, p.a, p.b));
        double budget = opt.rel_tol * std::max(scale, std::abs(total)) *
                        ((p.b - p.a) / (b - a));
        if (err <= budget || (p.b - p.a) < 1e-14 * (b - a)) {
            total += fine;
            if (++accepted > opt.max_panels)
                throw numerical_error(std::string("adaptive_gl: panel cap exceeded in ") +
                                      label + " (err=" + std::to_string(err) +
                                      ", budget=" + std::to_string(budget) + ")");
            continue;
        }
        double mid = 0.5 * (p.a + p.b);
        if (stack.size() > 4 * opt.max_panels)
            throw numerical_error(std::string("adaptive_gl: subdivision runaway in ") + label);
        stack.push_back({p.a, mid, gl15(f, p.a, mid)});
        stack.push_back({mid, p.b, gl15(f, mid, p.b)});
    }
    return total;
}

// 15-point Gauss-Hermite rule: integral of exp(-t^2) f(t) dt = sum w_i f(t_i).
// For a gaussian average with standard deviation s, evaluate f at sqrt(2) s t_i
// and divide by sqrt(pi).
inline constexpr std::array<double, 8> gh15_x = {
    0.0,
    0.5650695832555757, 1.1361155852109206, 1.7199925751864889,
    2.3257324861738578, 2.9671669279056032, 3.6699503734044527,
    4.4999907073093915};
inline constexpr std::array<double, 8> gh15_w = {
    0.5641003087264175,
    0.4120286874988986, 0.1584889157959357, 0.03078003387254608,
    2.778068842912776e-3, 1.000044412324999e-4, 1.059115547711067e-6,
    1.522475804253517e-9};

struct WeightedOffset {
    double t;  // abscissa in units of the distribution's own scale
    double w;  // weight, sums to 1 over the rule
};

// Gaussian-average rule with unit standard deviation: offsets t_i (apply as
// sigma * t_i) and normalized weights.
inline std::vector<WeightedOffset> gauss_hermite_unit_sigma() {
    const double inv_sqrt_pi = 0.5641895835477563;
    std::vector<WeightedOffset> rule;
    rule.push_back({0.0, gh15_w[0] * inv_sqrt_pi});
    const double sqrt2 = 1.4142135623730951;
    for (std::size_t i = 1; i < gh15_x.size(); ++i) {
        double t = sqrt2 * gh15_x[i];
        double w = gh15_w[i] * inv_sqrt_pi;
        rule.push_back({-t, w});
        rule.push_back({+t, w});
    }
    return rule;
}

inline double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("trapezoid: need matching arrays of >= 2 samples");
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        sum += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return sum;
}

}  // namespace casimir::quad
