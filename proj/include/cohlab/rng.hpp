#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace cohlab {

// Seeded generator with independent streams. Stream k of seed s is the
// mt19937_64 engine keyed by splitmix64 mixing of (s, k), so trial k of a
// fuzz run can be replayed on its own.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  Rng split(std::uint64_t stream) const { return Rng(seed_, mix(stream_, stream)); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  double uniform() { return unif_(engine_); }
  double gaussian() { return normal_(engine_); }
  // Real and imaginary parts i.i.d. N(0, 1/2), so E|z|^2 = 1.
  std::complex<double> complex_gaussian();
  std::uint64_t next_u64() { return engine_(); }

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b);

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace cohlab
