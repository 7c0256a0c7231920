#include "polevo/controller.hpp"

#include <algorithm>
#include <cmath>

namespace polevo {

namespace {

inline double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

inline double to_sensor(double v, double lo, double hi) {
  v = std::clamp(v, lo, hi);
  return (v - lo) / (hi - lo) - 0.5;
}

}  // namespace

SensorVector normalize_sensors(const CartPoleState& state, const PlaneParams& plane) {
  // Track and angle sensor spans match the failure bounds; alpha and mu_c
  // span their sampling intervals. 36 deg = 0.6283185 rad.
  return {to_sensor(state.x, -2.4, 2.4),
          to_sensor(state.theta[0], -0.6283185, 0.6283185),
          to_sensor(state.theta[1], -0.6283185, 0.6283185),
          to_sensor(plane.alpha, 0.0, kSensorAlphaMax),
          to_sensor(plane.mu_c, 0.0, kSensorMuCMax)};
}

double activate_in_place(const NetworkWeights& weights, NeuralState& neural,
                         const SensorVector& sensors) {
  std::array<double, kNumInternal> next;
  for (int j = 0; j < kNumInternal; ++j) {
    double z = weights.internal_bias[j];
    for (int s = 0; s < kNumSensors; ++s)
      z += weights.sensor_to_internal[j][s] * sensors[s];
    for (int k = 0; k < kNumInternal; ++k)
      z += weights.internal_to_internal[j][k] * neural.activation[k];
    next[j] = logistic(z);
  }
  neural.activation = next;

  double zm = weights.motor_bias;
  for (int j = 0; j < kNumInternal; ++j)
    zm += weights.internal_to_motor[j] * neural.activation[j];
  return -10.0 + 20.0 * logistic(zm);
}

std::pair<NeuralState, double> activate(const NetworkWeights& weights,
                                        const NeuralState& neural,
                                        const SensorVector& sensors) {
  NeuralState out = neural;
  const double force = activate_in_place(weights, out, sensors);
  return {out, force};
}

NeuralState reset_neural_state() { return NeuralState{}; }

}  // namespace polevo
