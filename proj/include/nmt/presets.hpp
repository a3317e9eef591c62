#pragma once

#include "nmt/model.hpp"
#include "nmt/pll.hpp"
#include "nmt/shaker.hpp"

namespace nmt {

/// Reference configuration of the friction-damped cantilever test case.
namespace preset {

inline constexpr double youngs_modulus = 185e9;
inline constexpr double density = 7830.0;
inline constexpr double length = 0.7;
inline constexpr int n_elements = 7;
inline constexpr double beta = 1e-4;
inline constexpr double tangential_stiffness = 8000.0;
inline constexpr double slip_force = 1.0;
inline constexpr int friction_node = 3;
/// Section fitted so the sticking model has omega_1 = 139.5, omega_2 = 760.9 rad/s.
inline constexpr double width = 0.005191376473717161;
inline constexpr double thickness = 0.01153616465532994;

BeamSpec beam_spec();
JenkinsElement friction(double tangential_stiffness = preset::tangential_stiffness);
SecondOrderModel beam_model(double tangential_stiffness = preset::tangential_stiffness);
ShakerModel shaker(int attach_point = 2);
/// PLL parameters with the given centre frequency.
PLLConfig pll(double center_frequency);

}  // namespace preset
}  // namespace nmt
