#ifndef DUALVAR_RNG_HPP
#define DUALVAR_RNG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dualvar/field.hpp"

namespace dualvar {

/// splitmix64: the fixed 64-bit generator used for every randomized probe, so
/// reports reproduce bit-exactly across platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n); the modulo bias is irrelevant here and the
  /// mapping is pinned for reproducibility.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  Scalar scalar(Field f) {
    if (f.is_rational())
      return Scalar(f, static_cast<long>(below(2001)) - 1000);
    return Scalar::residue(f.p, below(f.p));
  }

  Scalar nonzero_scalar(Field f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  std::vector<Scalar> vector(Field f, int n) {
    std::vector<Scalar> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(scalar(f));
    return v;
  }

  std::vector<Scalar> nonzero_vector(Field f, int n) {
    for (;;) {
      auto v = vector(f, n);
      for (const auto& s : v)
        if (!s.is_zero()) return v;
    }
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

/// Derives an independent stream seed from a base seed and an index or label.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  Rng r(seed ^ (0x9E3779B97F4A7C15ull * (salt + 1)));
  return r.next();
}

}  // namespace dualvar

#endif
