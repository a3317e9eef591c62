#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nmt/backbone.hpp"
#include "nmt/shaker.hpp"

namespace nmt {

enum class Branch { lower, upper };

struct SynthesisPoint {
    double omega = 0.0;  // excitation frequency Omega [rad/s]
    double q = 0.0;
    double phase = 0.0;  // Delta Theta of the modal response relative to the force [rad]
    VectorXcd response;  // fundamental per channel, force phase as reference
    Branch branch = Branch::lower;
    int backbone_index = 0;
};

struct SynthesizedFRF {
    std::vector<std::string> channels;
    std::vector<SynthesisPoint> points;  // sorted by omega
    std::vector<std::string> diagnostics;
};

/// Linear modes superposed as residual contributions; rows match the
/// backbone channels, mass-normalized columns.
struct ResidualModes {
    MatrixXd shapes;
    VectorXd omega;
    VectorXd delta;
};

/// Single nonlinear mode forced response. For each backbone point solve
/// (w^2 - W^2)^2 + (2 W w d)^2 = |phi_1^H f|^2 / q^2 for W^2 and keep roots
/// inside [omega_lo, omega_hi]. `force` holds fundamental force amplitudes
/// over the backbone channels.
SynthesizedFRF synthesize(const Backbone& backbone, const Eigen::Ref<const VectorXcd>& force, double omega_lo,
                          double omega_hi, const std::optional<ResidualModes>& residual = std::nullopt);

/// Linear modes of a model other than `target` at the given DOF rows.
ResidualModes residual_modes(const LinearModalData& linear, const std::vector<Eigen::Index>& rows, int target);

struct SteppedSineOptions {
    int steps_per_period = 0;   // 0: from the default rig time step
    int settle_periods = 40;    // before the first block at each frequency
    int block_periods = 20;
    int max_blocks = 60;
    double tolerance = 1e-3;    // relative change of |X_1| and force error
    double trim_exponent = 0.5; // command *= (level / |F_1|)^e, e halved when the force error flips sign
    std::vector<int> sensor_points;  // empty: drive point only
};

struct SteppedSinePoint {
    double omega = 0.0;
    VectorXcd response;  // fundamental displacement per sensor, force phase as reference
    cplx force{};        // fundamental force
    double command = 0.0;
    bool settled = false;
    int periods = 0;
};

struct SteppedSineFRF {
    double level = 0.0;
    std::vector<std::string> channels;
    std::vector<SteppedSinePoint> points;
};

/// Stepped-sine sweep through the grid in the given order with warm start.
/// At each frequency the command amplitude is trimmed until the fundamental
/// force equals `level` and the response settles; otherwise the point is
/// flagged settled = false.
SteppedSineFRF stepped_sine_reference(const CoupledSystem& sys, double level, const std::vector<double>& omegas,
                                      const SteppedSineOptions& opt = {});

struct FrfPeak {
    double omega = 0.0;
    double amplitude = 0.0;
};

/// Maximum of sampled |H|, refined by a parabola through the neighbours.
FrfPeak frf_peak(const std::vector<double>& omega, const std::vector<double>& amplitude);

/// First frequency where the phase crosses `target`, linear interpolation.
/// NaN when there is no crossing.
double phase_crossing(const std::vector<double>& omega, const std::vector<double>& phase, double target);

}  // namespace nmt
