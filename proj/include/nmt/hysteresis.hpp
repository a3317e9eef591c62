#pragma once

#include "nmt/model.hpp"
#include "nmt/recording.hpp"

namespace nmt {

/// Lumped joint resonator: m1 -[leaf spring k]- m2 -[joint]- m3. A soft
/// suspension grounds m1 to remove the rigid-body mode. Excitation acts on
/// m1 (point 1). Points 1..3 map to DOFs 0..2.
struct ResonatorSpec {
    double m1 = 1.0, m2 = 1.0, m3 = 1.0;  // [kg]
    double leaf_stiffness = 0.0;          // k [N/m]
    double joint_stiffness = 0.0;         // k_t [N/m]
    double joint_slip_force = 0.0;        // f_s [N]
    double suspension_stiffness = 0.0;    // [N/m], on m1
    double damping_m2 = 0.0;              // dashpot m2 to ground [Ns/m]

    void validate() const;
};

/// Default surrogate: first elastic mode near 370 Hz, k_t = 2 k.
ResonatorSpec default_resonator();

/// Joint element acts on x_rel = x3 - x2.
SecondOrderModel make_joint_resonator(const ResonatorSpec& spec);

/// One period of a closed force-displacement curve on a uniform phase grid.
struct HysteresisLoop {
    Eigen::VectorXd x;  // relative displacement [m]
    Eigen::VectorXd f;  // force [N]

    Eigen::Index size() const { return x.size(); }
};

/// f_t = m3 * a3, sample-wise.
Eigen::VectorXd joint_force(const Eigen::Ref<const Eigen::VectorXd>& acc3, double m3);

/// Relative displacement from two acceleration records spanning `periods`
/// periods: harmonics n = 1..H of a3 - a2 divided by -(n omega)^2, evaluated
/// at the original sample phases. The static part is dropped.
Eigen::VectorXd relative_displacement(const Eigen::Ref<const Eigen::VectorXd>& acc2,
                                      const Eigen::Ref<const Eigen::VectorXd>& acc3, double omega, int periods,
                                      int n_harmonics = 64);

/// Period-averaged loop resampled to n_points by harmonic interpolation.
HysteresisLoop make_loop(const Eigen::Ref<const Eigen::VectorXd>& x, const Eigen::Ref<const Eigen::VectorXd>& f,
                         int periods, int n_points = 512, int n_harmonics = 64);

/// Trapezoidal contour integral of f dx over the closed loop.
double loop_work(const HysteresisLoop& loop);

/// Potential energy at maximum displacement: mean of the loading and the
/// unloading branch integrals of f dx between x = 0 and x_max. Viscous parts
/// cancel, so a spring k with any parallel dashpot gives k X^2 / 2.
double peak_potential_energy(const HysteresisLoop& loop);

struct HysteresisDamping {
    double work = 0.0;         // |W| of the joint loop
    double energy_joint = 0.0;
    double energy_leaf = 0.0;
    double delta = 0.0;        // W / (4 pi (E_joint + E_leaf))
};

/// delta_hyst from the joint loop and the leaf-spring loop. Signs of the
/// loops depend on the force convention, so magnitudes are used.
HysteresisDamping delta_hyst(const HysteresisLoop& joint, const HysteresisLoop& leaf);

/// Joint and leaf loops of a resonator recording with channels force, a_p1,
/// a_p2, a_p3: f_t = m3 a3, x_rel = x3 - x2, f_k = m1 a1 - f_exc, x_k = x2 - x1.
struct ResonatorLoops {
    HysteresisLoop joint;
    HysteresisLoop leaf;
};
ResonatorLoops resonator_loops(const Recording& rec, const ResonatorSpec& spec, int n_points = 512,
                               int n_harmonics = 64);

}  // namespace nmt
