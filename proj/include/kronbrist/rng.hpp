#pragma once

#include "kronbrist/field.hpp"

#include <cstdint>
#include <random>

namespace kronbrist {

/// Seeded 64-bit generator (std::mt19937_64). Child streams are derived
/// through std::seed_seq so that a (seed, tag) pair always names the same
/// stream. Bounded draws use plain modular reduction so results do not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  /// Independent child stream for `tag`.
  Rng split(std::uint64_t tag) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return Rng((std::uint64_t{words[1]} << 32) | words[0]);
  }

  /// Uniform element of GF(p); small integers in [-3, 3] over Q.
  Scalar scalar(FieldSpec field) {
    if (field.is_finite()) return Scalar(field, static_cast<long long>(below(field.characteristic())));
    return Scalar(field, static_cast<long long>(below(7)) - 3);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace kronbrist
