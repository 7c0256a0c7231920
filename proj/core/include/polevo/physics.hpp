#pragma once

#include <array>

namespace polevo {

inline constexpr int kNumPoles = 2;

/// Continuous physical state of the cart and both poles at one instant.
struct CartPoleState {
  double x = 0.0;      // cart position (m)
  double x_dot = 0.0;  // cart velocity (m/s)
  std::array<double, kNumPoles> theta{};      // pole angles (rad)
  std::array<double, kNumPoles> theta_dot{};  // pole angular velocities (rad/s)

  friend bool operator==(const CartPoleState&, const CartPoleState&) = default;
};

/// Per-trial plane characteristics.
struct PlaneParams {
  double alpha = 0.0;  // plane inclination (rad)
  double mu_c = 0.0;   // cart-plane friction coefficient
  double mu_p = 2e-6;  // pole hinge friction coefficient (run constant)
};

struct PhysicsConstants {
  double cart_mass = 1.0;
  std::array<double, kNumPoles> pole_mass{1.0, 0.1};
  std::array<double, kNumPoles> pole_half_length{0.5, 0.05};
  double gravity = 9.8;
  double dt = 0.01;                 // integration step (s)
  double force_limit = 10.0;        // |F| bound, applied at the controller boundary
  double track_half_width = 2.4;    // failure bound on |x| (m)
  double angle_limit = 0.6283185;   // failure bound on |theta| (36 deg in rad)
};

/// kPaperLiteral evaluates the printed equations verbatim: the track friction
/// term enters as +mu_c*M~*g with no sign(x_dot), and the effective pole mass
/// is (3/4)[cos^2 - mu_c*cos*sin] with no pole-mass factor.
/// kFlorianCorrected switches those two terms to -mu_c*sign(x_dot)*M~*g and
/// m_i*(1 - (3/4)cos^2) respectively.
enum class DynamicsMode { kPaperLiteral, kFlorianCorrected };

/// Effective force of one pole on the cart.
double effective_pole_force(const CartPoleState& state, const PlaneParams& plane,
                            const PhysicsConstants& consts, int pole_index);

/// Effective (mass-like) contribution of one pole to the cart equation.
double effective_pole_mass(const CartPoleState& state, const PlaneParams& plane,
                           const PhysicsConstants& consts, int pole_index,
                           DynamicsMode mode = DynamicsMode::kPaperLiteral);

/// M_c*cos(alpha) + sum of pole masses.
double effective_cart_mass(const PlaneParams& plane, const PhysicsConstants& consts);

/// Cart acceleration under the given (already clamped) force.
/// Throws DegenerateDenominator if the mass denominator is below 1e-9.
double cart_acceleration(const CartPoleState& state, double applied_force,
                         const PlaneParams& plane, const PhysicsConstants& consts,
                         DynamicsMode mode = DynamicsMode::kPaperLiteral);

/// Angular acceleration of one pole given the cart acceleration of this step.
double pole_acceleration(const CartPoleState& state, double cart_accel,
                         const PlaneParams& plane, const PhysicsConstants& consts,
                         int pole_index);

/// One semi-explicit Euler step: accelerations from the current state,
/// velocities updated first, positions from the updated velocities.
CartPoleState step(const CartPoleState& state, double applied_force,
                   const PlaneParams& plane, const PhysicsConstants& consts,
                   DynamicsMode mode = DynamicsMode::kPaperLiteral);

/// Failure iff |x| or any |theta_i| strictly exceeds its bound; exact
/// boundary values survive.
bool check_failure(const CartPoleState& state, const PhysicsConstants& consts);

}  // namespace polevo
