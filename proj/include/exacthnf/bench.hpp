#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exacthnf/int_matrix.hpp"

namespace exacthnf {

/// Deterministic generator (splitmix64) so a seed fully fixes the matrix
/// stream across runs and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [lo, hi] inclusive (exact, by rejection).
  long uniform(long lo, long hi);
  /// Uniform entry in [-2^bits, 2^bits].
  Int entry(unsigned bits);

 private:
  std::uint64_t state_;
};

/// Uniform entries in [-2^bits, 2^bits]; resamples until nonsingular.
IntMatrix randomNonsingular(std::size_t n, unsigned bits, Rng& rng);

struct BenchRow {
  std::size_t n;
  unsigned bits;
  std::string algorithm;
  double wallMillis;
  std::uint64_t limbOps;
};

/// One row per (size, bitlen, algorithm, trial-average): runs the massager
/// pipeline and the classical oracle on the same matrices.
std::vector<BenchRow> runBench(const std::vector<std::size_t>& sizes,
                               const std::vector<unsigned>& bitlens, unsigned trials,
                               std::uint64_t seed);

std::string benchTable(const std::vector<BenchRow>& rows);

}  // namespace exacthnf
