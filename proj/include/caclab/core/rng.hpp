#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace caclab {

// Deterministic splitmix64 stream with cheap named sub-stream derivation.
// Everything stochastic in the project draws from one of these, so identical
// seeds give bit-identical runs regardless of platform or standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Multiply-shift bounding; the bias for the
  // n values used here (< 2^32) is far below anything observable.
  int uniform_int(int n) {
    return static_cast<int>((static_cast<unsigned __int128>(next_u64()) *
                             static_cast<unsigned __int128>(n)) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller, one cached spare.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925287 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Derive an independent stream. Derivation depends only on the original
  // seed and the tag, never on how much the parent has been consumed.
  Rng split(std::uint64_t tag) const { return Rng(mix(seed_, tag)); }

  Rng split(std::string_view tag) const { return split(fnv1a(tag)); }

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Weighted pick: probabilities must sum to ~1; returns the chosen index.
inline int sample_index(const std::vector<double>& probs, Rng& rng) {
  double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

}  // namespace caclab
