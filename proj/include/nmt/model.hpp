#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nmt/jenkins.hpp"

namespace nmt {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Linear second-order structure with attached friction elements.
///
/// The stiffness matrix excludes the friction elements. Linear damping is
/// beta * (K + sum k_t s s^T) plus an optional explicit viscous matrix, so that
/// the underlying linear system in sticking contact is stiffness-proportionally
/// damped when no extra damping is present.
struct SecondOrderModel {
    MatrixXd mass;
    MatrixXd stiffness;
    double beta = 0.0;
    MatrixXd extra_damping;  // empty means zero
    std::vector<std::string> dof_labels;
    std::vector<JenkinsElement> nonlinear_elements;
    /// point_dofs[p - 1] is the translational DOF of measurement point p.
    std::vector<Index> point_dofs;

    Index size() const noexcept { return mass.rows(); }
    /// K plus the tangential stiffness of every friction element.
    MatrixXd sticking_stiffness() const;
    MatrixXd damping() const;
    Index point_dof(int point) const;
    void validate() const;
};

struct CrossSection {
    double width = 0.0;      // [m]
    double thickness = 0.0;  // [m]
};

struct BeamSpec {
    double youngs_modulus = 0.0;  // E [Pa]
    double density = 0.0;         // rho [kg/m^3]
    double length = 0.0;          // l [m]
    int n_elements = 0;
    CrossSection cross_section;

    double area() const { return cross_section.width * cross_section.thickness; }
    double second_moment() const {
        const double h = cross_section.thickness;
        return cross_section.width * h * h * h / 12.0;
    }
    void validate() const;
};

/// Clamped-free Euler-Bernoulli beam with consistent element mass matrices.
/// Free node p (1..n_elements) carries DOFs (w_p, theta_p) at indices (2p-2, 2p-1).
/// A friction element, when given, must act on a lateral DOF and is grounded.
SecondOrderModel assemble_beam(const BeamSpec& spec, const std::optional<JenkinsElement>& friction,
                               double beta);

/// Lateral DOF index of beam node p (1-based).
Index beam_lateral_dof(int node);

struct LinearModalData {
    VectorXd frequencies;    // rad/s, ascending
    VectorXd damping_ratios; // modal projection phi^T D phi / (2 omega)
    MatrixXd shapes;         // mass-normalized columns
};

/// Modes of the underlying linear system with all friction contacts sticking.
LinearModalData linear_modes(const SecondOrderModel& model, Index n_modes = -1);

/// Mass matrix estimate (Phi^T)^+ Phi^+ from mass-normalized shapes.
MatrixXd estimate_mass_matrix(const MatrixXd& shapes);

/// Fit width and thickness so the sticking model has the two target lowest
/// frequencies. Returns the calibrated spec.
BeamSpec calibrate_cross_section(const BeamSpec& start, const std::optional<JenkinsElement>& friction,
                                 double beta, double target_omega1, double target_omega2);

/// Fit thickness only (width fixed) to a single target lowest frequency.
BeamSpec calibrate_thickness(const BeamSpec& start, const std::optional<JenkinsElement>& friction,
                             double beta, double target_omega1);

}  // namespace nmt
