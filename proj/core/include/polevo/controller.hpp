#pragma once

#include <array>
#include <utility>

#include "polevo/physics.hpp"

namespace polevo {

inline constexpr int kNumSensors = 5;
inline constexpr int kNumInternal = 10;
inline constexpr int kNumParameters = 171;  // 160 weights + 11 biases
inline constexpr double kWeightMin = -5.0;
inline constexpr double kWeightMax = 5.0;

// Fixed affine sensor ranges, each mapped onto [-0.5, 0.5].
inline constexpr double kSensorAlphaMax = 0.2617;
inline constexpr double kSensorMuCMax = 0.30;

/// Parameters of the 5-10-1 recurrent controller.
struct NetworkWeights {
  // [internal][sensor]
  std::array<std::array<double, kNumSensors>, kNumInternal> sensor_to_internal{};
  // [target][source]
  std::array<std::array<double, kNumInternal>, kNumInternal> internal_to_internal{};
  std::array<double, kNumInternal> internal_to_motor{};
  std::array<double, kNumInternal> internal_bias{};
  double motor_bias = 0.0;

  friend bool operator==(const NetworkWeights&, const NetworkWeights&) = default;
};

/// Recurrent activations carried across ticks within one trial.
struct NeuralState {
  std::array<double, kNumInternal> activation{};

  friend bool operator==(const NeuralState&, const NeuralState&) = default;
};

using SensorVector = std::array<double, kNumSensors>;

/// Readings (x, theta1, theta2, alpha, mu_c), each clamped to its range and
/// mapped affinely onto [-0.5, 0.5]. Velocities are not sensed.
SensorVector normalize_sensors(const CartPoleState& state, const PlaneParams& plane);

/// One synchronous tick: internal neurons read sensors and the previous
/// internal activations, the motor reads the new internal activations.
/// Returns the applied force in [-10, 10] N.
double activate_in_place(const NetworkWeights& weights, NeuralState& neural,
                         const SensorVector& sensors);

/// Value-semantics variant of activate_in_place.
std::pair<NeuralState, double> activate(const NetworkWeights& weights,
                                        const NeuralState& neural,
                                        const SensorVector& sensors);

/// Trial-start state: all internal activations zero.
NeuralState reset_neural_state();

}  // namespace polevo
