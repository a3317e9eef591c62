#pragma once

#include <optional>

#include "nmt/shaker.hpp"

namespace nmt {

/// Average-acceleration Newmark scheme for the mechanical DOFs and the
/// trapezoidal rule for the circuit, solved monolithically. The friction
/// element (at most one) is resolved exactly per step by a scalar reduction
/// of the linear step equations onto its relative displacement.
class NewmarkIntegrator {
public:
    /// `self_excitation` adds the term -xi M x' (negative mass-proportional damping).
    NewmarkIntegrator(const CoupledSystem& sys, double dt, double self_excitation = 0.0);

    /// Set the state; the acceleration follows from equilibrium with `input`.
    void reset(const VectorXd& x, const VectorXd& v, double current, double slider, double input);

    /// Advance one step. `input_next` is the voltage (shaker) or force (ideal
    /// excitation) at the end of the step; the start value is carried over.
    void step(double input_next);

    double dt() const { return dt_; }
    double time() const { return time_; }
    const VectorXd& x() const { return x_; }
    const VectorXd& v() const { return v_; }
    const VectorXd& a() const { return a_; }
    double current() const { return i_; }
    double input() const { return input_; }
    double friction_force() const { return f_nl_; }
    double slider() const { return has_friction_ ? element_.slider : 0.0; }
    double measured_force() const { return sys_.measured_force(x_, v_, a_, input_); }
    const CoupledSystem& system() const { return sys_; }

    /// Cumulative energy flows since the last reset.
    double input_energy() const { return e_in_; }
    double dissipated_energy() const { return e_diss_; }
    /// Kinetic + elastic + magnetic energy of the current state.
    double stored_energy() const;

private:
    const CoupledSystem& sys_;
    double dt_;
    Index n_;   // mechanical dofs
    Index ns_;  // total states
    MatrixXd c_;  // effective damping
    MatrixXd kx_, kv_, ka_;  // A^-1 times the history operators
    VectorXd z_input_;       // A^-1 times the input column
    VectorXd z_current_;     // A^-1 times the current history column
    VectorXd z_friction_;    // A^-1 s_hat
    double h_ = 0.0;         // s_hat^T A^-1 s_hat
    bool has_friction_ = false;
    JenkinsElement element_;
    VectorXd sel_;

    VectorXd x_, v_, a_;
    double i_ = 0.0;
    double input_ = 0.0;
    double f_nl_ = 0.0;
    double time_ = 0.0;
    double e_in_ = 0.0, e_diss_ = 0.0;
    VectorXd z_;  // scratch
};

}  // namespace nmt
