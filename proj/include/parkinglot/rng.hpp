#pragma once

#include <cstdint>
#include <random>

namespace parkinglot {

// Deterministic random source. mt19937_64 has a standardized sequence and
// the uniform mappings below avoid std::uniform_real_distribution, whose
// output is implementation defined; results are therefore reproducible
// across platforms for a fixed seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  // Uniform double in [0, 1) with 53 bits of entropy.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Uniform integer in [0, n), n > 0.
  uint64_t below(uint64_t n) { return gen_() % n; }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace parkinglot
