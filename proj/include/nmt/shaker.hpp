#pragma once

#include "nmt/harmonics.hpp"
#include "nmt/model.hpp"

namespace nmt {

/// Electrodynamic exciter: table and coil masses, suspension, RL circuit.
struct ShakerModel {
    double table_mass = 0.0;          // m_T [kg]
    double coil_mass = 0.0;           // m_C [kg]
    double table_stiffness = 0.0;     // k_T [N/m]
    double coil_stiffness = 0.0;      // k_C [N/m]
    double table_damping = 0.0;       // d_T [Ns/m]
    double coil_damping = 0.0;        // d_C [Ns/m]
    double force_constant = 0.0;      // G [N/A]
    double inductance = 0.0;          // L [H]
    double resistance = 0.0;          // R [Ohm]
    double stinger_stiffness = 0.0;   // k_Stinger [N/m]
    int attach_point = 2;

    /// G and k_Stinger may be zero (decoupled input); all others must be > 0.
    void validate() const;
};

enum class ExcitationKind { shaker, ideal_force };

/// Structure plus excitation system. The mechanical part holds the structure
/// DOFs first, then the coil, then the table when the stinger is elastic.
/// Damping is stored explicitly in mech.extra_damping (mech.beta = 0).
struct CoupledSystem {
    SecondOrderModel mech;
    Index n_structure = 0;
    Index drive_dof = 0;
    int drive_point = 0;
    ExcitationKind kind = ExcitationKind::ideal_force;
    Index coil_dof = -1;
    Index table_dof = -1;  // only with an elastic stinger
    bool rigid_stinger = false;
    ShakerModel shaker;

    bool has_circuit() const { return kind == ExcitationKind::shaker; }
    /// Mechanical DOFs plus one electrical state when a circuit is present.
    Index state_size() const { return mech.size() + (has_circuit() ? 1 : 0); }

    /// Force applied to the structure at the driving point.
    double measured_force(const Eigen::Ref<const VectorXd>& x, const Eigen::Ref<const VectorXd>& v,
                          const Eigen::Ref<const VectorXd>& a, double input) const;
};

/// Stinger stiffness above this multiple of the largest structural diagonal
/// stiffness is treated as a rigid link.
inline constexpr double rigid_stinger_ratio = 1e6;

/// Couple the shaker to the lateral DOF of its attach point. Force Gi acts on
/// the coil and reacts on ground; the circuit is L di/dt + R i + G v_coil = u.
CoupledSystem couple_shaker(const SecondOrderModel& structure, const ShakerModel& shaker);

/// Ideal point force at the given point; the input is the force itself.
CoupledSystem couple_ideal_force(const SecondOrderModel& structure, int point);

/// Steady-state complex response of all mechanical DOFs of the coupled system
/// with sticking contacts, per unit input (voltage or force) at frequency w.
/// Element n_mech holds the current when a circuit is present.
VectorXcd coupled_linear_response(const CoupledSystem& sys, double omega);

/// Complex amplitude of the measured force per unit input.
cplx coupled_force_response(const CoupledSystem& sys, double omega);

}  // namespace nmt
