#pragma once

#include "nmt/harmonics.hpp"
#include "nmt/jenkins.hpp"

namespace nmt {

struct AFTResult {
    VectorXcd force;          // harmonics 0..H of the element force
    Eigen::VectorXd x_time;   // one period of relative displacement samples
    Eigen::VectorXd f_time;   // matching periodic force samples
    int cycles = 0;           // cycles marched until periodic
};

/// Alternating frequency-time evaluation of a Jenkins element. `x_rel` holds
/// harmonics 0..H of the relative displacement s^T x. The element is marched
/// from its current slider state until two consecutive cycles agree.
AFTResult aft_evaluate_full(const Eigen::Ref<const VectorXcd>& x_rel, const JenkinsElement& element, int n_time,
                            int max_cycles = 20);

/// Force harmonics only.
VectorXcd aft_evaluate(const Eigen::Ref<const VectorXcd>& x_rel, const JenkinsElement& element, int n_time);

/// Work dissipated per cycle from matching displacement/force harmonics:
/// W = pi sum_n n Im(F_n conj(X_n)).
double dissipated_work(const Eigen::Ref<const VectorXcd>& x, const Eigen::Ref<const VectorXcd>& f);

/// Closed-form work per cycle of a Jenkins element under harmonic motion of
/// amplitude X (zero when X <= f_s / k_t).
double jenkins_work_closed_form(double amplitude, double tangential_stiffness, double slip_force);

/// Work per cycle obtained by time-marching the return mapping through
/// harmonic motion of amplitude X with `steps` samples per cycle, after a
/// shake-down cycle, integrated with the trapezoidal rule.
double jenkins_work_time_march(double amplitude, const JenkinsElement& element, int steps = 100000);

}  // namespace nmt
