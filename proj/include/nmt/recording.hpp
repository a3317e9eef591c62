#pragma once

#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nmt {

/// Multichannel steady-state record sampled uniformly in excitation phase.
///
/// Channel naming: "force" is the excitation force at the driving point,
/// "x_<label>" and "a_<label>" are displacement and acceleration of a sensor,
/// "v_<label>" a velocity.
struct Recording {
    std::vector<std::string> channels;
    Eigen::MatrixXd samples;  // rows: samples, cols: channels
    double sample_rate = 0.0;       // [Hz]
    double locked_frequency = 0.0;  // [rad/s]
    double level = 0.0;             // target force [N] or voltage [V]
    double voltage_amplitude = 0.0; // [V]
    int steady_periods = 0;
    int samples_per_period = 0;
    bool locked = false;
    double frequency_std = std::numeric_limits<double>::quiet_NaN();  // relative, over the window
    double start_time = 0.0;  // [s] simulation time of the first sample
    double lock_time = std::numeric_limits<double>::quiet_NaN();      // [s] since level start
    std::string note;

    Eigen::Index channel_index(const std::string& name) const;
    bool has_channel(const std::string& name) const;
    Eigen::VectorXd channel(const std::string& name) const { return samples.col(channel_index(name)); }
    Eigen::Index n_samples() const { return samples.rows(); }
};

}  // namespace nmt
