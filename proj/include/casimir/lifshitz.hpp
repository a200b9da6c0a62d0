#pragma once

// Zero-temperature fluctuation pressure and energy between two dielectric
// half-spaces, the perfect-conductor ideal limit, and the proximity-force
// conversion to sphere-plate curves.
//
// Sign conventions, used everywhere downstream: attraction is reported as a
// positive magnitude for pressures, forces and force gradients; interaction
// energy per area is signed (negative for attraction).
//
// The double integral is evaluated in polar-rescaled variables. With
// kappa^2 = k_t^2 + xi^2/c^2, mu = cos(theta) = xi/(c kappa), u = 2 kappa z:
//
//   E/A = hbar c / (32 pi^2 z^3) * int_0^1 dmu int_0^inf du u^2
//           sum_p ln(1 - x_p e^-u)
//   P   = hbar c / (32 pi^2 z^4) * int_0^1 dmu int_0^inf du u^3
//           sum_p x_p e^-u / (1 - x_p e^-u)
//
// where x_p is the product of the two plates' reflection coefficients for
// polarization p, evaluated at xi = c u mu / (2 z). The integrand is O(1)
// and exponentially damped, so nested adaptive Gauss-Legendre panels with a
// relative tolerance converge quickly at any separation.

#include <cmath>
#include <iostream>
#include <string>
#include <utility>

#include "casimir/constants.hpp"
#include "casimir/dielectric.hpp"
#include "casimir/errors.hpp"
#include "casimir/force_curve.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/util.hpp"

namespace casimir::lifshitz {

struct FresnelPair {
    double te = 0.0;  // in (-1, 0]
    double tm = 0.0;  // in [0, 1)
};

// r_TE = (kappa - kappa_1)/(kappa + kappa_1), r_TM = (eps kappa - kappa_1)/(eps kappa + kappa_1)
// with kappa = sqrt(k_t^2 + xi^2/c^2), kappa_1 = sqrt(k_t^2 + eps xi^2/c^2).
// The perfect conductor (eps = +inf sentinel) gives (-1, 1) exactly.
inline FresnelPair fresnel_coefficients(double eps, double xi, double k_t) {
    if (!(xi > 0.0)) throw std::domain_error("fresnel_coefficients: xi must be > 0");
    if (k_t < 0.0) throw std::domain_error("fresnel_coefficients: k_t must be >= 0");
    if (std::isinf(eps)) return {-1.0, 1.0};
    if (!(eps >= 1.0)) throw std::domain_error("fresnel_coefficients: eps must be >= 1");
    const double q = xi / constants::c;
    const double kappa = std::hypot(k_t, q);
    const double kappa1 = std::sqrt(k_t * k_t + eps * q * q);
    return {(kappa - kappa1) / (kappa + kappa1),
            (eps * kappa - kappa1) / (eps * kappa + kappa1)};
}

// pi^2 hbar c / (240 z^4), the ideal-conductor pressure magnitude
inline double ideal_pressure(double z) {
    if (!(z > 0.0)) throw std::domain_error("ideal_pressure: z must be > 0");
    namespace k = constants;
    return k::pi * k::pi * k::hbar * k::c / (240.0 * z * z * z * z);
}

// -pi^2 hbar c / (720 z^3), the ideal-conductor interaction energy per area
inline double ideal_energy_per_area(double z) {
    if (!(z > 0.0)) throw std::domain_error("ideal_energy_per_area: z must be > 0");
    namespace k = constants;
    return -k::pi * k::pi * k::hbar * k::c / (720.0 * z * z * z);
}

struct PlatePair {
    const dielectric::DielectricModel* material_1 = nullptr;
    const dielectric::DielectricModel* material_2 = nullptr;
    double separation = 0.0;  // m

    void validate() const {
        if (material_1 == nullptr || material_2 == nullptr)
            throw config_error("PlatePair: both materials must be set");
        if (!(separation > 0.0)) throw config_error("PlatePair: separation must be > 0");
    }
};

struct QuadratureOptions {
    double rel_tol = 1e-6;
    double u_max = 80.0;                 // e^-u truncation of the rescaled axis
    std::size_t mu_subdivisions = 4;     // initial panels on the angular axis
    std::size_t u_subdivisions = 8;      // initial panels on the radial axis
    std::size_t max_panels = 4000;
};

struct PlateInteraction {
    double pressure = 0.0;         // Pa, magnitude (attraction positive)
    double energy_per_area = 0.0;  // J/m^2, signed (negative for attraction)
};

namespace detail {

// Reflection-coefficient products for both polarizations at (mu, xi).
// kappa_1 / kappa = sqrt(1 + (eps - 1) mu^2) depends only on eps and mu.
inline std::pair<double, double> reflection_products(
    const dielectric::DielectricModel& m1, const dielectric::DielectricModel& m2,
    double mu, double xi) {
    double x_te = 1.0, x_tm = 1.0;
    for (const auto* m : {&m1, &m2}) {
        if (m->is_perfect_conductor()) {
            x_te *= -1.0;  // r_TE = -1, r_TM = +1 exactly
            continue;
        }
        const double eps = m->eps_imag_axis(xi);
        const double s = std::sqrt(1.0 + (eps - 1.0) * mu * mu);
        x_te *= (1.0 - s) / (1.0 + s);
        x_tm *= (eps - s) / (eps + s);
    }
    // both r_TE factors are <= 0 and both r_TM factors >= 0, so the
    // products are nonnegative and bounded by 1
    return {x_te, x_tm};
}

}  // namespace detail

inline PlateInteraction plate_interaction(const PlatePair& pair,
                                          const QuadratureOptions& opt = {}) {
    pair.validate();
    const auto& m1 = *pair.material_1;
    const auto& m2 = *pair.material_2;
    const double z = pair.separation;
    namespace k = constants;

    const double xi_scale = k::c / (2.0 * z);

    auto inner = [&](double mu, bool pressure_kernel) {
        quad::AdaptiveOptions in_opt;
        in_opt.rel_tol = opt.rel_tol;
        in_opt.min_subdivisions = opt.u_subdivisions;
        in_opt.max_panels = opt.max_panels;
        auto f = [&](double u) {
            if (u <= 0.0) return 0.0;
            const double xi = xi_scale * u * mu;
            const auto [x_te, x_tm] = detail::reflection_products(m1, m2, mu, xi);
            const double e = std::exp(-u);
            if (pressure_kernel) {
                double s = 0.0;
                if (x_te != 0.0) s += x_te * e / (1.0 - x_te * e);
                if (x_tm != 0.0) s += x_tm * e / (1.0 - x_tm * e);
                return u * u * u * s;
            }
            double s = 0.0;
            if (x_te != 0.0) s += std::log1p(-x_te * e);
            if (x_tm != 0.0) s += std::log1p(-x_tm * e);
            return u * u * s;
        };
        return quad::adaptive_gl(f, 0.0, opt.u_max, in_opt,
                                 pressure_kernel ? "lifshitz pressure (radial)"
                                                 : "lifshitz energy (radial)");
    };

    quad::AdaptiveOptions out_opt;
    out_opt.rel_tol = opt.rel_tol;
    out_opt.min_subdivisions = opt.mu_subdivisions;
    out_opt.max_panels = opt.max_panels;

    // vacuum on either side: no reflection, zero interaction
    auto vacuum = [](const dielectric::DielectricModel& m) {
        return m.kind() == dielectric::ModelKind::constant && m.eps_imag_axis(1.0) == 1.0;
    };
    if (vacuum(m1) || vacuum(m2)) return {0.0, 0.0};

    const double pressure_integral = quad::adaptive_gl(
        [&](double mu) { return mu <= 0.0 ? 0.0 : inner(mu, true); }, 0.0, 1.0, out_opt,
        "lifshitz pressure (angular)");
    const double energy_integral = quad::adaptive_gl(
        [&](double mu) { return mu <= 0.0 ? 0.0 : inner(mu, false); }, 0.0, 1.0, out_opt,
        "lifshitz energy (angular)");

    const double z3 = z * z * z;
    const double coeff = k::hbar * k::c / (32.0 * k::pi * k::pi);
    PlateInteraction result;
    result.energy_per_area = coeff / z3 * energy_integral;     // negative
    result.pressure = coeff / (z3 * z) * pressure_integral;    // positive magnitude
    if (!(result.pressure >= 0.0) || !(result.energy_per_area <= 0.0))
        throw numerical_error("plate_interaction: sign contract violated at z=" +
                              std::to_string(z));
    return result;
}

// P(z) / P_ideal(z), in (0, 1) for real materials.
inline double reduction_factor(const dielectric::DielectricModel& m1,
                               const dielectric::DielectricModel& m2, double z,
                               const QuadratureOptions& opt = {}) {
    PlatePair pair{&m1, &m2, z};
    return plate_interaction(pair, opt).pressure / ideal_pressure(z);
}

// Pressure and energy curves on a z grid. Points are independent; evaluated
// concurrently.
inline std::pair<ForceCurve, ForceCurve> plate_interaction_curves(
    const dielectric::DielectricModel& m1, const dielectric::DielectricModel& m2,
    const std::vector<double>& z_grid, const QuadratureOptions& opt = {},
    const std::string& provenance = "lifshitz") {
    std::vector<double> pressure(z_grid.size()), energy(z_grid.size());
    parallel_for(z_grid.size(), [&](std::size_t i) {
        PlatePair pair{&m1, &m2, z_grid[i]};
        PlateInteraction r = plate_interaction(pair, opt);
        pressure[i] = r.pressure;
        energy[i] = r.energy_per_area;
    });
    ForceCurve p = ForceCurve::from_samples(z_grid, pressure, CurveKind::pressure, provenance);
    ForceCurve e =
        ForceCurve::from_samples(z_grid, energy, CurveKind::energy_per_area, provenance);
    return {std::move(p), std::move(e)};
}

struct PfaCurves {
    ForceCurve force;     // N, magnitude
    ForceCurve gradient;  // N/m, magnitude
};

// Proximity-force conversion: F = 2 pi R |E/A|, F' = 2 pi R P, pointwise on a
// shared z grid. Warns when R is not comfortably larger than the separations.
inline PfaCurves pfa_sphere(double R, const ForceCurve& energy_curve,
                            const ForceCurve& pressure_curve) {
    if (!(R > 0.0)) throw config_error("pfa_sphere: R must be > 0");
    if (energy_curve.kind != CurveKind::energy_per_area)
        throw config_error("pfa_sphere: first curve must be energy_per_area");
    if (pressure_curve.kind != CurveKind::pressure)
        throw config_error("pfa_sphere: second curve must be pressure");
    if (!energy_curve.same_grid(pressure_curve))
        throw config_error("pfa_sphere: energy and pressure curves must share a z grid");
    if (!energy_curve.empty() && R < 20.0 * energy_curve.z_max())
        std::cerr << "warning: pfa_sphere with R = " << R
                  << " m < 20 * z_max; proximity approximation degrades\n";
    const double two_pi_r = 2.0 * constants::pi * R;
    PfaCurves out;
    out.force.kind = CurveKind::sphere_force;
    out.gradient.kind = CurveKind::sphere_gradient;
    out.force.provenance = energy_curve.provenance + " + pfa";
    out.gradient.provenance = pressure_curve.provenance + " + pfa";
    out.force.points.reserve(energy_curve.size());
    out.gradient.points.reserve(pressure_curve.size());
    for (std::size_t i = 0; i < energy_curve.size(); ++i) {
        const auto& ep = energy_curve.points[i];
        const auto& pp = pressure_curve.points[i];
        out.force.points.push_back({ep.z, two_pi_r * std::abs(ep.value), two_pi_r * ep.sigma});
        out.gradient.points.push_back({pp.z, two_pi_r * pp.value, two_pi_r * pp.sigma});
    }
    return out;
}

}  // namespace casimir::lifshitz
