#include "polevo/physics.hpp"

#include <cmath>

#include "polevo/errors.hpp"

namespace polevo {

namespace {

constexpr double kDenominatorFloor = 1e-9;

// Equation bodies parameterized on precomputed sin/cos so the fused step path
// and the standalone operations evaluate the exact same expressions.

inline double pole_force_expr(double m, double l, double mu_c, double mu_p, double g,
                              double sn, double cs, double theta_dot) {
  return mu_c * (0.75 * m * g * sn * sn -
                 (3.0 * mu_p) / (4.0 * l) * theta_dot * sn +
                 m * l * theta_dot * theta_dot * cs) -
         0.75 * (m * g * sn * cs + mu_p * theta_dot * cs) +
         m * l * theta_dot * theta_dot * sn;
}

inline double pole_mass_expr(double m, double mu_c, double sn, double cs,
                             DynamicsMode mode) {
  if (mode == DynamicsMode::kFlorianCorrected) return m * (1.0 - 0.75 * cs * cs);
  return 0.75 * (cs * cs - mu_c * cs * sn);
}

inline double pole_accel_expr(double m, double l, double mu_p, double g,
                              double cart_accel, double sn, double cs,
                              double theta_dot) {
  return -(3.0 / (4.0 * l)) *
         (cart_accel * cs - g * sn + mu_p * theta_dot / (m * l));
}

inline double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

inline double cart_accel_expr(double applied_force, double x_dot, double mu_c,
                              double alpha, double cart_mass, double g,
                              double eff_cart_mass, double pole_force_sum,
                              double pole_mass_sum, DynamicsMode mode) {
  const double friction = mode == DynamicsMode::kFlorianCorrected
                              ? -mu_c * sign(x_dot) * eff_cart_mass * g
                              : mu_c * eff_cart_mass * g;
  const double denom = cart_mass + pole_mass_sum;
  if (std::fabs(denom) < kDenominatorFloor)
    throw DegenerateDenominator("cart mass denominator below 1e-9");
  return (applied_force + friction + cart_mass * g * std::sin(alpha) +
          pole_force_sum) /
         denom;
}

}  // namespace

double effective_pole_force(const CartPoleState& state, const PlaneParams& plane,
                            const PhysicsConstants& consts, int pole_index) {
  const double th = state.theta[pole_index];
  return pole_force_expr(consts.pole_mass[pole_index],
                         consts.pole_half_length[pole_index], plane.mu_c,
                         plane.mu_p, consts.gravity, std::sin(th), std::cos(th),
                         state.theta_dot[pole_index]);
}

double effective_pole_mass(const CartPoleState& state, const PlaneParams& plane,
                           const PhysicsConstants& consts, int pole_index,
                           DynamicsMode mode) {
  const double th = state.theta[pole_index];
  return pole_mass_expr(consts.pole_mass[pole_index], plane.mu_c, std::sin(th),
                        std::cos(th), mode);
}

double effective_cart_mass(const PlaneParams& plane, const PhysicsConstants& consts) {
  double m = consts.cart_mass * std::cos(plane.alpha);
  for (int i = 0; i < kNumPoles; ++i) m += consts.pole_mass[i];
  return m;
}

double cart_acceleration(const CartPoleState& state, double applied_force,
                         const PlaneParams& plane, const PhysicsConstants& consts,
                         DynamicsMode mode) {
  double force_sum = 0.0;
  double mass_sum = 0.0;
  for (int i = 0; i < kNumPoles; ++i) {
    force_sum += effective_pole_force(state, plane, consts, i);
    mass_sum += effective_pole_mass(state, plane, consts, i, mode);
  }
  return cart_accel_expr(applied_force, state.x_dot, plane.mu_c, plane.alpha,
                         consts.cart_mass, consts.gravity,
                         effective_cart_mass(plane, consts), force_sum, mass_sum,
                         mode);
}

double pole_acceleration(const CartPoleState& state, double cart_accel,
                         const PlaneParams& plane, const PhysicsConstants& consts,
                         int pole_index) {
  const double th = state.theta[pole_index];
  return pole_accel_expr(consts.pole_mass[pole_index],
                         consts.pole_half_length[pole_index], plane.mu_p,
                         consts.gravity, cart_accel, std::sin(th), std::cos(th),
                         state.theta_dot[pole_index]);
}

CartPoleState step(const CartPoleState& state, double applied_force,
                   const PlaneParams& plane, const PhysicsConstants& consts,
                   DynamicsMode mode) {
  // Trig shared across Eqs. 1-4; one sin/cos per pole per step.
  double sn[kNumPoles], cs[kNumPoles], force_i[kNumPoles], mass_i[kNumPoles];
  for (int i = 0; i < kNumPoles; ++i) {
    sn[i] = std::sin(state.theta[i]);
    cs[i] = std::cos(state.theta[i]);
    force_i[i] = pole_force_expr(consts.pole_mass[i], consts.pole_half_length[i],
                                 plane.mu_c, plane.mu_p, consts.gravity, sn[i],
                                 cs[i], state.theta_dot[i]);
    mass_i[i] = pole_mass_expr(consts.pole_mass[i], plane.mu_c, sn[i], cs[i], mode);
  }
  const double x_dd = cart_accel_expr(
      applied_force, state.x_dot, plane.mu_c, plane.alpha, consts.cart_mass,
      consts.gravity, effective_cart_mass(plane, consts),
      force_i[0] + force_i[1], mass_i[0] + mass_i[1], mode);

  CartPoleState next = state;
  next.x_dot = state.x_dot + x_dd * consts.dt;
  next.x = state.x + next.x_dot * consts.dt;
  for (int i = 0; i < kNumPoles; ++i) {
    const double th_dd =
        pole_accel_expr(consts.pole_mass[i], consts.pole_half_length[i],
                        plane.mu_p, consts.gravity, x_dd, sn[i], cs[i],
                        state.theta_dot[i]);
    next.theta_dot[i] = state.theta_dot[i] + th_dd * consts.dt;
    next.theta[i] = state.theta[i] + next.theta_dot[i] * consts.dt;
  }
  return next;
}

bool check_failure(const CartPoleState& state, const PhysicsConstants& consts) {
  if (std::fabs(state.x) > consts.track_half_width) return true;
  for (int i = 0; i < kNumPoles; ++i)
    if (std::fabs(state.theta[i]) > consts.angle_limit) return true;
  return false;
}

}  // namespace polevo
