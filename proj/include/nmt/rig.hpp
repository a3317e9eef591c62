#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nmt/hb_epmc.hpp"
#include "nmt/integrator.hpp"
#include "nmt/noise.hpp"
#include "nmt/pll.hpp"
#include "nmt/recording.hpp"

namespace nmt {

struct Level {
    double target = 0.0;         // force amplitude [N] or voltage amplitude [V]
    double hold_duration = 60.0; // maximum time to reach lock [s]
};

struct LevelSchedule {
    std::vector<Level> levels;
    /// true: targets are fundamental force amplitudes, held by a slow trim of
    /// the command amplitude. false: open-loop command amplitudes.
    bool force_control = true;

    void validate() const;
};

/// Per-period controller snapshot for diagnostics.
struct PeriodTrace {
    double time = 0.0;
    double frequency = 0.0;        // mean over the period [rad/s]
    double force_amplitude = 0.0;  // demodulated |F_1|
    double reference_amplitude = 0.0;
    double phase_error = 0.0;
    double command_amplitude = 0.0;
    bool recording = false;
};

struct RigOptions {
    double dt = 0.0;  // 0: min(2 pi / (200 omega_3), controller period)
    double controller_period = 0.0;  // 0: every integration step
    int steady_periods = 200;
    int samples_per_period = 256;
    int lock_window = 20;          // periods
    double lock_tolerance = 1e-5;  // relative frequency drift over the window
    double force_trim_gain = 0.02; // per period
    double force_tolerance = 5e-3; // relative, for the lock test under force control
    std::vector<int> sensor_points;  // empty: drive point only
    bool extra_channels = true;      // u, i, f_nl, x_rel ground truth
    NoiseSpec noise;
    std::function<void(const PeriodTrace&)> on_period;
};

struct RigRun {
    std::vector<Recording> recordings;        // as measured (noisy if noise active)
    std::vector<Recording> clean_recordings;  // noise-free counterparts, only with noise
    double dt = 0.0;
};

/// Time step used when RigOptions::dt is zero.
double default_time_step(const CoupledSystem& sys, double controller_period = 0.0);

/// Closed-loop virtual experiment over a level schedule. Levels run in order
/// with warm start; a level that does not lock within its hold duration is
/// returned with locked = false and the run continues.
RigRun integrate_coupled(const CoupledSystem& sys, const PLLConfig& pll, const LevelSchedule& schedule,
                         const RigOptions& opt = {});

/// Record of a free-running system under the forcing xi M x' started on an HB
/// solution. Returns harmonics of displacement and force of every DOF over
/// the last `record_periods` periods.
struct SelfExcitedRecord {
    std::vector<VectorXcd> displacement;  // per harmonic, all DOFs
    std::vector<VectorXcd> force;         // harmonics of xi M x'
    double omega = 0.0;
};
SelfExcitedRecord simulate_self_excited(const SecondOrderModel& model, const HBSolution& s, int settle_periods,
                                        int record_periods, int steps_per_period, int n_harmonics);

}  // namespace nmt
