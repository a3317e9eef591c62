#pragma once

#include <Eigen/Dense>

namespace nmt {

/// Elastic Coulomb friction element: a spring of stiffness k_t in series with
/// a Coulomb slider of slip force f_s. The element acts on the relative
/// displacement x_a - x_b (x_b = 0 when grounded).
struct JenkinsElement {
    double tangential_stiffness = 0.0;  // k_t [N/m]
    double slip_force = 0.0;            // f_s = mu N [N]
    Eigen::Index dof_index = 0;
    Eigen::Index dof_index_b = -1;  // -1: grounded
    double slider = 0.0;            // w [m]

    bool grounded() const noexcept { return dof_index_b < 0; }
    double force(double x_rel) const noexcept { return tangential_stiffness * (x_rel - slider); }
    double relative_displacement(const Eigen::Ref<const Eigen::VectorXd>& x) const {
        return grounded() ? x(dof_index) : x(dof_index) - x(dof_index_b);
    }
    /// Vector s with x_rel = s^T x; the element force acts on the structure as s * f.
    Eigen::VectorXd selector(Eigen::Index n) const;
    void validate(Eigen::Index n_dofs) const;
};

struct JenkinsUpdate {
    double force;
    JenkinsElement element;
    bool slipping;
};

/// Return mapping of the slider for a new relative displacement.
JenkinsUpdate jenkins_update(const JenkinsElement& element, double x_new);

/// In-place variant used by the time-stepping and AFT loops.
double jenkins_advance(JenkinsElement& element, double x_new) noexcept;

}  // namespace nmt
