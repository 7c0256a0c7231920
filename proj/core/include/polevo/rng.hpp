#pragma once

#include <cstdint>
#include <initializer_list>

namespace polevo {

/// Counter-based random stream: draw i is mix64(key + i*phi), so a stream is
/// fully determined by its key and the number of draws taken so far. Streams
/// for different purposes are derived by hashing tags into the key, which
/// gives every (replication, generation, individual) combination its own
/// pre-assigned, disjoint stream regardless of execution order or threading.
class RngStream {
 public:
  RngStream() = default;
  explicit RngStream(std::uint64_t key) : key_(key) {}

  static constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return mix64(key_ + kPhi * ++pos_); }

  /// Uniform in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_uniform(double lo, double hi) { return lo + next_unit() * (hi - lo); }

  bool next_bit() { return (next_u64() >> 63) != 0; }

  /// Draws consumed so far; lets callers audit exact stream usage.
  std::uint64_t position() const { return pos_; }

  std::uint64_t key() const { return key_; }

  /// Child stream at position 0 whose key folds in the given tags.
  RngStream derive(std::initializer_list<std::uint64_t> tags) const {
    std::uint64_t k = key_;
    for (std::uint64_t t : tags) k = mix64(k ^ mix64(t + kPhi));
    return RngStream(k);
  }

 private:
  static constexpr std::uint64_t kPhi = 0x9E3779B97F4A7C15ull;

  std::uint64_t key_ = 0;
  std::uint64_t pos_ = 0;
};

/// Tags keeping derived streams from colliding across purposes.
enum class StreamDomain : std::uint64_t {
  kReplication = 1,
  kInitGenome = 2,
  kEnvMatrix = 3,
  kMutation = 4,
  kSelectionNoise = 5,
  kPostEval = 6,
  kBranchEnv = 7,
  kBranchRun = 8,
};

inline std::uint64_t tag(StreamDomain d) { return static_cast<std::uint64_t>(d); }

}  // namespace polevo
