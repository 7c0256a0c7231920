#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "polevo/controller.hpp"
#include "polevo/rng.hpp"

namespace polevo {

inline constexpr int kGenomeBlocks = kNumParameters;  // one 8-bit block per parameter
inline constexpr int kGenomeBits = kGenomeBlocks * 8;

/// 1368-bit genotype stored as 171 blocks of 8 bits, MSB-first within a block.
class Genome {
 public:
  Genome() = default;

  bool bit(int i) const { return (blocks_[i >> 3] >> (7 - (i & 7))) & 1; }

  void set_bit(int i, bool v) {
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - (i & 7)));
    if (v)
      blocks_[i >> 3] |= mask;
    else
      blocks_[i >> 3] &= static_cast<std::uint8_t>(~mask);
  }

  void flip_bit(int i) {
    blocks_[i >> 3] ^= static_cast<std::uint8_t>(1u << (7 - (i & 7)));
  }

  std::uint8_t block(int k) const { return blocks_[k]; }
  void set_block(int k, std::uint8_t v) { blocks_[k] = v; }

  /// 342 lowercase hex characters, blocks in order, MSB-first.
  std::string to_hex() const;

  /// Throws MalformedRecord on wrong length or non-hex characters.
  static Genome from_hex(std::string_view hex);

  friend bool operator==(const Genome&, const Genome&) = default;

 private:
  std::array<std::uint8_t, kGenomeBlocks> blocks_{};
};

/// 1368 fair-coin bits; one stream draw per bit.
Genome random_genome(RngStream& rng);

/// Each block read MSB-first as b in [0,255] maps to -5 + (b/255)*10.
/// Parameter order: sensor->internal row-major by internal neuron then
/// sensor, internal->internal row-major by target then source,
/// internal->motor, internal biases, motor bias.
NetworkWeights decode(const Genome& genome);

/// Independent per-bit flip with probability mut_rate; exactly 1368 draws.
Genome mutate(const Genome& genome, double mut_rate, RngStream& rng);

/// Number of 8-bit blocks that differ in at least one bit.
int block_hamming_distance(const Genome& a, const Genome& b);

/// Number of differing bits.
int bit_hamming_distance(const Genome& a, const Genome& b);

/// One member of the evolving population.
struct Individual {
  std::uint64_t id = 0;
  std::int64_t parent_id = -1;  // -1 marks a generation-0 founder
  int birth_generation = 0;
  Genome genome;
  // Raw fitness against the environment matrix the population last saw;
  // absent until evaluated.
  std::optional<double> fitness;
};

}  // namespace polevo
