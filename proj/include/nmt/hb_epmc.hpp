#pragma once

#include <vector>

#include "nmt/backbone.hpp"
#include "nmt/model.hpp"

namespace nmt {

/// Periodic solution of M x'' + (D - xi M) x' + K x + g = 0 in the form
/// x(t) = Re sum_n psi_n exp(i n omega t).
struct HBSolution {
    std::vector<VectorXcd> harmonics;  // psi_0 (real) .. psi_H
    double omega = 0.0;
    double xi = 0.0;
    double q = 0.0;

    int n_harmonics() const { return static_cast<int>(harmonics.size()) - 1; }
    double delta() const { return modal_damping(xi, omega); }
};

struct EPMCOptions {
    int n_harmonics = 5;
    int n_time = 512;
    /// DOF whose fundamental component is made real; -1 selects the largest
    /// component of the underlying linear mode.
    Eigen::Index anchor_dof = -1;
    double tolerance = 1e-8;  // relative residual norm
    int max_iterations = 40;
    int max_step_halvings = 8;
};

/// Number of real unknowns n + 2nH + 2.
Eigen::Index epmc_unknown_count(Eigen::Index n_dofs, int n_harmonics);

/// Pack/unpack in physical units: [psi_0; Re psi_1; Im psi_1; ...; omega; xi].
Eigen::VectorXd pack_solution(const HBSolution& s);
HBSolution unpack_solution(const Eigen::Ref<const Eigen::VectorXd>& u, Eigen::Index n_dofs, int n_harmonics, double q);

/// Residual in physical units: per-harmonic balance Z_n psi_n + G_n, then
/// psi_1^H M psi_1 - q^2, then Im psi_1[anchor].
Eigen::VectorXd epmc_residual(const HBSolution& guess, double q, const SecondOrderModel& model,
                              Eigen::Index anchor_dof, int n_time = 512);

/// Nonlinear force harmonics of all friction elements acting on the structure.
std::vector<VectorXcd> nonlinear_force_harmonics(const std::vector<VectorXcd>& psi, const SecondOrderModel& model,
                                                 int n_time);

/// Anchor DOF that the solver would pick for a mode.
Eigen::Index default_anchor(const SecondOrderModel& model, int mode_index);

/// Solve one point by damped Newton from an initial guess.
HBSolution solve_epmc_point(const HBSolution& initial, double q, const SecondOrderModel& model, Eigen::Index anchor,
                            const EPMCOptions& opt);

/// Continuation over the given q values (positive, strictly increasing).
/// Newton failures trigger geometric step halving. When that is exhausted the
/// backbone is returned with completed = false and a diagnostic.
Backbone solve_backbone(const SecondOrderModel& model, int mode_index, const std::vector<double>& q_values,
                        const EPMCOptions& opt = {});

/// Convert an HB solution to a backbone point over all model DOFs. PBMIF is
/// left unset; MAC and Gamma are computed against the given linear data.
BackbonePoint to_backbone_point(const HBSolution& s, const LinearModalData& linear, int mode_index);

/// Log-spaced q grid.
std::vector<double> log_space(double lo, double hi, int count);

/// Power dissipated by viscous damping and friction, averaged over one
/// period of the solution (friction by dense time quadrature).
double dissipated_power(const HBSolution& s, const SecondOrderModel& model, int n_time = 20000);

}  // namespace nmt
