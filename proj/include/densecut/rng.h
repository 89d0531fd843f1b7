#ifndef DENSECUT_RNG_H_
#define DENSECUT_RNG_H_

#include <cstdint>
#include <random>

namespace densecut {

// SplitMix64 finalizer; used to derive independent child seeds.
inline std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed for a named stream. All randomness in the library is derived
// from one user seed through this function, never from ambient entropy.
inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  return Mix64(Mix64(seed) ^ Mix64(stream + 0x632be59bd9b4e019ULL));
}

// Counted generator: remembers how many 64-bit draws were taken so a run
// can be reported and replayed.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(Mix64(seed)) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }

  result_type operator()() {
    ++draws_;
    return engine_();
  }

  // Uniform integer in [0, bound).
  std::uint64_t Below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(*this);
  }

  // Uniform integer in [lo, hi].
  std::int64_t Between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(*this);
  }

  double Uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(*this); }

  bool Bernoulli(double p) { return Uniform01() < p; }

  Rng Split(std::uint64_t stream) { return Rng(DeriveSeed((*this)(), stream)); }

  std::uint64_t draws() const { return draws_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace densecut

#endif  // DENSECUT_RNG_H_
