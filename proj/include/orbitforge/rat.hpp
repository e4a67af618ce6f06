#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace orbitforge {

/// Exact rational scalar. GMP keeps every value canonical (reduced, positive
/// denominator) after arithmetic; values built from strings go through
/// parse_rat, which canonicalizes.
using Rat = mpq_class;
using Int = mpz_class;
using QVec = std::vector<Rat>;

Rat parse_rat(std::string_view text);
/// "p/q", or "p" when q = 1.
std::string to_string(const Rat& r);

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_zero(const QVec& v);

}  // namespace orbitforge
