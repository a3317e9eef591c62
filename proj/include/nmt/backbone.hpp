#pragma once

#include <limits>
#include <string>
#include <vector>

#include "nmt/harmonics.hpp"

namespace nmt {

/// Modal data of one amplitude level.
struct BackbonePoint {
    double q = 0.0;      // modal amplitude [m sqrt(kg)]
    double omega = 0.0;  // modal frequency [rad/s]
    double xi = 0.0;     // self-excitation factor [1/s]
    double delta = 0.0;  // modal damping ratio
    /// shapes[n] holds phi_n (mass-normalized harmonic shape) over the
    /// channels of the owning backbone, n = 0..H.
    std::vector<VectorXcd> shapes;
    VectorXcd participation;  // Gamma = Phi^+ phi_1
    double pbmif = std::numeric_limits<double>::quiet_NaN();
    double pbmif_negative = std::numeric_limits<double>::quiet_NaN();
    double mac = std::numeric_limits<double>::quiet_NaN();
    double gamma_force = std::numeric_limits<double>::quiet_NaN();
    double gamma_accel = std::numeric_limits<double>::quiet_NaN();
    double level = std::numeric_limits<double>::quiet_NaN();  // excitation target that produced it

    int n_harmonics() const { return static_cast<int>(shapes.size()) - 1; }
};

struct Backbone {
    std::vector<BackbonePoint> points;
    std::vector<std::string> channels;
    int mode_index = 0;     // 0-based
    std::string source;     // "hb" or "virtual-test"
    bool completed = true;  // false when continuation stopped early
    std::string diagnostic;

    /// Throws DegenerateError unless q is strictly increasing.
    void validate() const;
    /// Linear interpolation of omega and delta in log(q); nullopt-like NaN
    /// outside the covered range.
    double omega_at(double q) const;
    double delta_at(double q) const;
    double q_min() const;
    double q_max() const;
};

/// delta = xi / (2 omega).
double modal_damping(double xi, double omega);

}  // namespace nmt
