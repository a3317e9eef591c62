#pragma once

#include <cstdint>

#include "nmt/recording.hpp"

namespace nmt {

/// Band-limited white measurement noise: zero-order-hold Gaussian sequence
/// with hold time t_c and variance PSD / t_c. Values are a pure function of
/// (seed, channel, hold index), so in-loop and post-hoc injection agree.
struct NoiseSpec {
    double force_psd = 0.0;         // [W/Hz]
    double displacement_psd = 0.0;  // [W/Hz]
    double correlation_time = 1e-5; // t_c [s]
    std::uint64_t seed = 0;

    bool active() const { return force_psd > 0.0 || displacement_psd > 0.0; }
    void validate() const;
};

/// Standard normal deviate for a (seed, stream, index) triple.
double gaussian_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Noise value of a channel at time t.
double noise_value(double psd, double correlation_time, std::uint64_t seed, std::uint64_t stream, double t);

/// Stream id derived from a channel name.
std::uint64_t channel_stream(const std::string& name);

/// Add noise to the force channel and all "x_" channels. Sample j is taken at
/// t0 + j / sample_rate.
Recording inject_noise(const Recording& rec, const NoiseSpec& spec, double t0 = 0.0);

/// 10 log10(P_signal / P_noise) with P_noise from the difference of the two
/// series. Returns +infinity when they are identical.
double snr(const Eigen::Ref<const Eigen::VectorXd>& signal, const Eigen::Ref<const Eigen::VectorXd>& noisy);

}  // namespace nmt
