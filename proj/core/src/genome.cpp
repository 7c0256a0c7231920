#include "polevo/genome.hpp"

#include <bit>

#include "polevo/errors.hpp"

namespace polevo {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

inline double block_to_weight(std::uint8_t b) {
  return kWeightMin + (static_cast<double>(b) / 255.0) * (kWeightMax - kWeightMin);
}

}  // namespace

std::string Genome::to_hex() const {
  std::string out(kGenomeBlocks * 2, '0');
  for (int k = 0; k < kGenomeBlocks; ++k) {
    out[2 * k] = kHexDigits[blocks_[k] >> 4];
    out[2 * k + 1] = kHexDigits[blocks_[k] & 0xF];
  }
  return out;
}

Genome Genome::from_hex(std::string_view hex) {
  if (hex.size() != kGenomeBlocks * 2)
    throw MalformedRecord("genome hex must be " + std::to_string(kGenomeBlocks * 2) +
                          " characters, got " + std::to_string(hex.size()));
  Genome g;
  for (int k = 0; k < kGenomeBlocks; ++k) {
    const int hi = hex_value(hex[2 * k]);
    const int lo = hex_value(hex[2 * k + 1]);
    if (hi < 0 || lo < 0)
      throw MalformedRecord("non-hex character in genome at block " + std::to_string(k));
    g.blocks_[k] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return g;
}

Genome random_genome(RngStream& rng) {
  Genome g;
  for (int i = 0; i < kGenomeBits; ++i) g.set_bit(i, rng.next_bit());
  return g;
}

NetworkWeights decode(const Genome& genome) {
  NetworkWeights w;
  int k = 0;
  for (int j = 0; j < kNumInternal; ++j)
    for (int s = 0; s < kNumSensors; ++s)
      w.sensor_to_internal[j][s] = block_to_weight(genome.block(k++));
  for (int t = 0; t < kNumInternal; ++t)
    for (int s = 0; s < kNumInternal; ++s)
      w.internal_to_internal[t][s] = block_to_weight(genome.block(k++));
  for (int j = 0; j < kNumInternal; ++j)
    w.internal_to_motor[j] = block_to_weight(genome.block(k++));
  for (int j = 0; j < kNumInternal; ++j)
    w.internal_bias[j] = block_to_weight(genome.block(k++));
  w.motor_bias = block_to_weight(genome.block(k++));
  return w;
}

Genome mutate(const Genome& genome, double mut_rate, RngStream& rng) {
  Genome out = genome;
  for (int i = 0; i < kGenomeBits; ++i)
    if (rng.next_unit() < mut_rate) out.flip_bit(i);
  return out;
}

int block_hamming_distance(const Genome& a, const Genome& b) {
  int n = 0;
  for (int k = 0; k < kGenomeBlocks; ++k) n += a.block(k) != b.block(k);
  return n;
}

int bit_hamming_distance(const Genome& a, const Genome& b) {
  int n = 0;
  for (int k = 0; k < kGenomeBlocks; ++k)
    n += std::popcount(static_cast<unsigned>(a.block(k) ^ b.block(k)));
  return n;
}

}  // namespace polevo
