#include "orbitforge/rat.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "orbitforge/error.hpp"

namespace orbitforge {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  require(!s.empty(), "rational literal must be nonempty");
  Rat r;
  if (r.set_str(s, 10) != 0) fail_precondition("malformed rational literal '" + s + "'");
  require(r.get_den() != 0, "rational literal '" + s + "' has zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace orbitforge

#include "orbitforge/random.hpp"

namespace orbitforge {

std::uint64_t stream_key(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  // FNV-1a over the stream name, mixed with seed and index by splitmix64.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : stream) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ h) ^ index);
}

Rng::Rng(std::uint64_t seed, std::string_view stream, std::uint64_t index)
    : key_(stream_key(seed, stream, index)), engine_(key_) {}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

Rat Rng::nonzero_integer(std::int64_t bound) {
  std::int64_t v = 0;
  while (v == 0) v = uniform(-bound, bound);
  return Rat(v);
}

Rat Rng::rational(std::int64_t bound) {
  Rat r(uniform(-bound, bound), uniform(1, bound));
  r.canonicalize();
  return r;
}

Rat Rng::nonzero_rational(std::int64_t bound) {
  Rat r;
  while (r == 0) r = rational(bound);
  return r;
}

Rng Rng::child(std::string_view stream, std::uint64_t index) const {
  return Rng(key_, stream, index);
}

}  // namespace orbitforge
