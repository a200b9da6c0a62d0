#pragma once

// ForceCurve is the common currency between modules: a distance-parameterized
// set of samples with one-sigma uncertainties. Attractive forces and force
// gradients are stored as positive magnitudes; plate-plate interaction energy
// per area is stored signed (negative for attraction).

#include <cmath>
#include <string>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/util.hpp"

namespace casimir {

enum class CurveKind { pressure, energy_per_area, sphere_force, sphere_gradient };

inline const char* to_string(CurveKind k) {
    switch (k) {
        case CurveKind::pressure: return "pressure";
        case CurveKind::energy_per_area: return "energy_per_area";
        case CurveKind::sphere_force: return "sphere_force";
        case CurveKind::sphere_gradient: return "sphere_gradient";
    }
    return "unknown";
}

inline CurveKind curve_kind_from_string(const std::string& s) {
    if (s == "pressure") return CurveKind::pressure;
    if (s == "energy_per_area") return CurveKind::energy_per_area;
    if (s == "sphere_force") return CurveKind::sphere_force;
    if (s == "sphere_gradient") return CurveKind::sphere_gradient;
    throw config_error("unknown curve kind '" + s + "'");
}

struct ForcePoint {
    double z = 0.0;      // m
    double value = 0.0;  // Pa, J/m^2, N or N/m depending on kind
    double sigma = 0.0;  // same units as value
};

enum class Extrapolation { none, power_law };

struct ForceCurve {
    std::vector<ForcePoint> points;
    CurveKind kind = CurveKind::pressure;
    std::string provenance;

    void validate() const {
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i].sigma < 0.0)
                throw config_error("ForceCurve: negative sigma at index " + std::to_string(i));
            if (i > 0 && !(points[i].z > points[i - 1].z))
                throw config_error("ForceCurve: z not strictly increasing at index " +
                                   std::to_string(i));
        }
    }

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    double z_min() const { return points.front().z; }
    double z_max() const { return points.back().z; }

    std::vector<double> zs() const {
        std::vector<double> v(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) v[i] = points[i].z;
        return v;
    }
    std::vector<double> values() const {
        std::vector<double> v(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) v[i] = points[i].value;
        return v;
    }
    std::vector<double> sigmas() const {
        std::vector<double> v(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) v[i] = points[i].sigma;
        return v;
    }

    // log-log interpolation of |value|, sign restored; power-law wings when
    // extrapolation is enabled, otherwise out-of-range is an error.
    double value_at(double z, Extrapolation ex = Extrapolation::none) const {
        return sample_at(z, ex, false);
    }
    double sigma_at(double z, Extrapolation ex = Extrapolation::none) const {
        return sample_at(z, ex, true);
    }

    static ForceCurve from_samples(std::vector<double> z, std::vector<double> value,
                                   CurveKind kind, std::string provenance = "") {
        if (z.size() != value.size())
            throw std::invalid_argument("ForceCurve::from_samples: size mismatch");
        ForceCurve c;
        c.kind = kind;
        c.provenance = std::move(provenance);
        c.points.resize(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) c.points[i] = {z[i], value[i], 0.0};
        c.validate();
        return c;
    }

    bool same_grid(const ForceCurve& other, double rel_tol = 1e-12) const {
        if (points.size() != other.points.size()) return false;
        for (std::size_t i = 0; i < points.size(); ++i) {
            double a = points[i].z, b = other.points[i].z;
            if (std::abs(a - b) > rel_tol * std::max(std::abs(a), std::abs(b))) return false;
        }
        return true;
    }

private:
    double sample_at(double z, Extrapolation ex, bool use_sigma) const {
        if (points.size() < 2)
            throw numerical_error("ForceCurve: need >= 2 points to interpolate");
        const double lo = points.front().z, hi = points.back().z;
        if ((z < lo || z > hi) && ex == Extrapolation::none)
            throw numerical_error("ForceCurve: z=" + std::to_string(z) +
                                  " outside sampled range [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "] and no extrapolation rule set");
        std::size_t hi_idx = 1;
        if (z >= hi) {
            hi_idx = points.size() - 1;
        } else if (z > lo) {
            while (points[hi_idx].z < z) ++hi_idx;
        }
        const ForcePoint& p0 = points[hi_idx - 1];
        const ForcePoint& p1 = points[hi_idx];
        double y0 = use_sigma ? p0.sigma : p0.value;
        double y1 = use_sigma ? p1.sigma : p1.value;
        // power-law segment when signs allow, linear otherwise
        double s0 = y0 < 0.0 || y1 < 0.0 ? -1.0 : 1.0;
        double a0 = std::abs(y0), a1 = std::abs(y1);
        if (a0 > 0.0 && a1 > 0.0 && (y0 < 0.0) == (y1 < 0.0) && z > 0.0) {
            double t = (std::log(z) - std::log(p0.z)) / (std::log(p1.z) - std::log(p0.z));
            return s0 * std::exp(std::log(a0) + t * (std::log(a1) - std::log(a0)));
        }
        double t = (z - p0.z) / (p1.z - p0.z);
        return y0 + t * (y1 - y0);
    }
};

}  // namespace casimir
