#pragma once

#include <string>
#include <vector>

#include "nmt/backbone.hpp"
#include "nmt/recording.hpp"

namespace nmt {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Harmonics 0..H of every channel, averaged over all recorded periods.
HarmonicSet dft_harmonics(const Recording& rec, int n_harmonics);

/// Active-to-apparent power ratio P/S of force and velocity harmonics
/// (n >= 1). Ideal velocity-collinear forcing gives +1.
double pbmif(const Eigen::Ref<const VectorXcd>& force, const Eigen::Ref<const VectorXcd>& velocity);

/// PBMIF per linear mode, in mass-normalized modal coordinates obtained from
/// a complete modal basis: eta = Phi^T M x, modal force Phi^T f.
/// Modes without motion or force give NaN.
VectorXd pbmif_modal(const std::vector<VectorXcd>& force, const std::vector<VectorXcd>& displacement,
                     double omega, const MatrixXd& shapes, const MatrixXd& mass);

/// |phi^H psi|^2 / ((phi^H phi)(psi^H psi)).
double mac(const Eigen::Ref<const VectorXcd>& phi, const Eigen::Ref<const VectorXcd>& psi);
double mac(const Eigen::Ref<const VectorXd>& phi, const Eigen::Ref<const VectorXcd>& psi);

/// |c_1| / sqrt(sum_{n>=1} |c_n|^2).
double harmonic_content(const Eigen::Ref<const VectorXcd>& coeffs);

/// Gamma = Phi^+ phi_1.
VectorXcd participation_factors(const MatrixXd& shapes, const Eigen::Ref<const VectorXcd>& phi1);

struct ExtractionSetup {
    /// Sensor channels in the row order of mass_estimate / linear_shapes.
    /// "a_" channels are integrated twice in the frequency domain.
    std::vector<std::string> sensor_channels;
    std::string drive_channel;  // sensor channel at the driving point
    std::string force_channel = "force";
    /// Optional acceleration channel at the driving point for gamma_A; when
    /// empty it is derived from the drive channel.
    std::string drive_accel_channel;
    MatrixXd mass_estimate;
    MatrixXd linear_shapes;  // rows: sensors, cols: identified modes
    int mode_index = 0;
    int n_harmonics = 10;
};

/// Displacement harmonics of a channel, converting acceleration channels.
VectorXcd displacement_harmonics(const HarmonicSet& hs, const std::string& channel);

/// Modal properties from measured harmonics.
BackbonePoint modal_properties(const HarmonicSet& hs, const ExtractionSetup& setup);

/// dft_harmonics + modal_properties over a list of recordings. Unlocked
/// levels are skipped; the result is sorted by q.
Backbone extract_backbone(const std::vector<Recording>& recs, const ExtractionSetup& setup);

}  // namespace nmt
