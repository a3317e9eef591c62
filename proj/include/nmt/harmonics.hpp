#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nmt {

using cplx = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

/// Convention: x(t) = Re sum_{n=0}^{H} c_n exp(i n omega t), with c_0 real.

/// Harmonic coefficients c_0..c_H of one channel sampled uniformly over an
/// integer number of periods. `periods` is the number of periods spanned by
/// the samples (samples.size() must be a multiple of it).
VectorXcd dft_coefficients(const Eigen::Ref<const Eigen::VectorXd>& samples, int n_harmonics, int periods = 1);

/// Evaluate the series at n uniformly spaced phases over one period.
Eigen::VectorXd synthesize_period(const Eigen::Ref<const VectorXcd>& coeffs, int n_samples);

/// Evaluate the series at arbitrary phase theta = omega t.
double evaluate_series(const Eigen::Ref<const VectorXcd>& coeffs, double theta);

/// Harmonic coefficients of the time derivative for base frequency omega.
VectorXcd differentiate(const Eigen::Ref<const VectorXcd>& coeffs, double omega);

/// Integrate acceleration harmonics twice (n >= 1); the static term is dropped.
VectorXcd integrate_twice(const Eigen::Ref<const VectorXcd>& coeffs, double omega);

/// Per-channel harmonic coefficients at a common base frequency.
struct HarmonicSet {
    double omega = 0.0;
    std::vector<std::string> channels;
    MatrixXcd coeffs;  // rows: channels, cols: n = 0..H

    int n_harmonics() const { return static_cast<int>(coeffs.cols()) - 1; }
    Eigen::Index channel_index(const std::string& name) const;
    VectorXcd channel(const std::string& name) const { return coeffs.row(channel_index(name)).transpose(); }
};

}  // namespace nmt
