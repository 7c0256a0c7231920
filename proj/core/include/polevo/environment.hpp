#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "polevo/rng.hpp"

namespace polevo {

/// The eight values defining one trial: plane characteristics plus the
/// initial state of the cart and poles.
struct EnvCondition {
  double alpha = 0.0;
  double mu_c = 0.0;
  double x0 = 0.0;
  double x_dot0 = 0.0;
  double theta1_0 = 0.0;
  double theta2_0 = 0.0;
  double theta1_dot0 = 0.0;
  double theta2_dot0 = 0.0;

  friend bool operator==(const EnvCondition&, const EnvCondition&) = default;
};

/// Uniform sampling bounds used for evolution and post-evaluation trials.
namespace env_ranges {
inline constexpr double kAlphaLo = 0.0, kAlphaHi = 0.2617;
inline constexpr double kMuCLo = 0.0, kMuCHi = 0.30;
inline constexpr double kXLo = -1.5, kXHi = 1.5;
inline constexpr double kXDotLo = -1.2, kXDotHi = 1.2;
inline constexpr double kThetaLo = -0.1047, kThetaHi = 0.1047;
inline constexpr double kThetaDotLo = -0.1350, kThetaDotHi = 0.1350;
}  // namespace env_ranges

/// Immutable NT x 8 trial table shared by every individual of a generation.
struct EnvMatrix {
  std::vector<EnvCondition> conditions;
  std::int64_t epoch = 0;  // number of regenerations so far

  std::size_t size() const { return conditions.size(); }
  bool empty() const { return conditions.empty(); }

  friend bool operator==(const EnvMatrix&, const EnvMatrix&) = default;
};

/// When the matrix is regenerated across generations.
struct VariationSchedule {
  enum class Kind { kFixed, kEveryN };

  Kind kind = Kind::kFixed;
  int every_n = 1;  // period when kind == kEveryN; 1 = every generation

  static VariationSchedule fixed() { return {Kind::kFixed, 1}; }
  static VariationSchedule every_n_generations(int n) { return {Kind::kEveryN, n}; }

  bool regenerates_at(int generation) const {
    return kind == Kind::kEveryN && generation > 0 && generation % every_n == 0;
  }

  friend bool operator==(const VariationSchedule&, const VariationSchedule&) = default;
};

/// One uniform draw per field (alpha, mu_c, x0, x_dot0, theta1_0, theta2_0,
/// theta1_dot0, theta2_dot0): 8 draws total.
EnvCondition sample_condition(RngStream& rng);

/// Fresh matrix for the given epoch, sampled from env_base.derive({epoch}).
EnvMatrix make_matrix(int nt, std::int64_t epoch, const RngStream& env_base);

/// Generation 0 creates the initial matrix (epoch 0). Afterwards the matrix
/// is replaced (epoch + 1) exactly at schedule boundaries and unchanged
/// otherwise.
EnvMatrix regenerate_if_due(const EnvMatrix& matrix, int generation,
                            const VariationSchedule& schedule, int nt,
                            const RngStream& env_base);

/// Shared 1000-trial post-evaluation matrix; depends only on posteval_seed.
EnvMatrix posteval_matrix(std::uint64_t posteval_seed);

/// 3^6 = 729 systematically varied trials: Cartesian product in odometer
/// order (last variable fastest) of alpha, mu_c, x0, x_dot0, theta1_0,
/// theta1_dot0 over {-v, 0, +v}; the second pole always starts at rest.
/// Rows are exempt from the sampling-range bounds (alpha and mu_c take
/// negative values here).
EnvMatrix systematic_grid();

/// CSV with one `# epoch: k` comment line, the fixed header, and one
/// full-precision row per trial.
void write_matrix_csv(const EnvMatrix& matrix, std::ostream& out);
EnvMatrix read_matrix_csv(std::istream& in);

}  // namespace polevo
