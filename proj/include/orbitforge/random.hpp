#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "orbitforge/rat.hpp"

namespace orbitforge {

/// Seeded random stream. Every stream is derived from (seed, name, index), so
/// a sample's draws do not depend on how many other samples ran before it.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view stream, std::uint64_t index = 0);

  /// Uniform integer in [lo, hi], by rejection (identical on every platform).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform integer in [-bound, bound].
  Rat integer(std::int64_t bound) { return Rat(uniform(-bound, bound)); }
  Rat nonzero_integer(std::int64_t bound);
  /// p/q with |p| <= bound, 1 <= q <= bound.
  Rat rational(std::int64_t bound);
  Rat nonzero_rational(std::int64_t bound);

  /// Child stream, deterministic in (this stream's state at creation, name, index).
  Rng child(std::string_view stream, std::uint64_t index = 0) const;

 private:
  std::uint64_t key_;
  std::mt19937_64 engine_;
};

std::uint64_t stream_key(std::uint64_t seed, std::string_view stream, std::uint64_t index);

}  // namespace orbitforge
