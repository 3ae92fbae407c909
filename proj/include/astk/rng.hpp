#pragma once

#include <cstdint>

namespace astk {

// 64-bit finalizer (splitmix64 style). Pure integer arithmetic, so streams
// are bit-identical across platforms and compilers.
inline std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Counter-based PRNG: output i of stream `key` is mix64(key + i*golden).
// split() derives an independent child stream from a label, which lets one
// master seed fan out deterministically to per-model, per-run generators.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(seed), counter_(0) {}

  std::uint64_t next_u64() {
    return mix64(key_ + (++counter_) * 0x9E3779B97F4A7C15ull);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Lemire's multiply-shift with rejection.
  std::uint64_t next_below(std::uint64_t n) {
    for (;;) {
      std::uint64_t x = next_u64();
      __uint128_t m = static_cast<__uint128_t>(x) * n;
      std::uint64_t lo = static_cast<std::uint64_t>(m);
      if (lo >= n || lo >= (0ull - n) % n) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  bool next_bernoulli(double p) { return next_double() < p; }

  Rng split(std::uint64_t label) const {
    return Rng(mix64(key_ ^ mix64(label + 0xD1B54A32D192ED03ull)));
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

// Child-seed scheme used by the comparison harness: one master seed yields
// a distinct stream per (model index, run index).
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t model_index,
                                std::uint64_t run_index) {
  return mix64(mix64(master ^ (model_index + 1) * 0x9E3779B97F4A7C15ull) +
               (run_index + 1) * 0xC2B2AE3D27D4EB4Full);
}

}  // namespace astk
