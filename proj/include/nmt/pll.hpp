#pragma once

#include <complex>

namespace nmt {

enum class ReferenceSignal { displacement, velocity, acceleration };

/// vco: phase measured against the VCO output (the excitation command).
/// force: phase measured against the demodulated excitation force, which
/// removes the exciter's own phase shift from the loop.
enum class PhaseDetector { vco, force };

struct PLLConfig {
    double loop_gain = 2.0 * 3.14159265358979323846;    // K [rad/s per rad]
    double filter_pole = 2.0 * 3.14159265358979323846;  // a [rad/s]
    double filter_zero = 3.14159265358979323846;        // b [rad/s]
    double center_frequency = 0.0;                       // omega_m [rad/s]
    /// Phase detector gain; the default measures the phase error in cycles.
    double detector_gain = 1.0 / (2.0 * 3.14159265358979323846);
    ReferenceSignal reference = ReferenceSignal::displacement;
    PhaseDetector detector = PhaseDetector::force;

    /// Phase of the reference relative to the force at phase resonance.
    double target_phase() const;
    void validate() const;
};

struct PLLState {
    double vco_phase = 0.0;
    double frequency = 0.0;
    std::complex<double> ref_lp1{}, ref_lp2{};
    std::complex<double> force_lp1{}, force_lp2{};
    double integrator = 0.0;
    double phase_error = 0.0;
    bool locked = false;

    static PLLState initial(const PLLConfig& cfg);
};

/// One controller update. Demodulates the samples against the current VCO
/// phase, low-passes twice with pole a, forms the phase error and advances
/// the PI loop filter K (s + b) / s and the VCO.
void pll_step(PLLState& state, double reference_sample, double force_sample, double dt, const PLLConfig& cfg);

/// Wrap to (-pi, pi].
double wrap_phase(double phi);

}  // namespace nmt
