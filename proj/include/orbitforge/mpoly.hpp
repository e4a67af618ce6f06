#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitforge/rat.hpp"

namespace orbitforge {

using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then the exponent of x0,
/// x1, ... The largest monomial in this order is the leading term.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial over Q in num_vars variables x0, x1, ...
/// No zero coefficient is ever stored.
class MPoly {
 public:
  using Terms = std::map<Monomial, Rat, GrlexLess>;

  explicit MPoly(std::size_t num_vars = 0) : nvars_(num_vars) {}
  static MPoly constant(std::size_t num_vars, const Rat& c);
  static MPoly variable(std::size_t num_vars, std::size_t index);
  static MPoly monomial(std::size_t num_vars, Monomial exps, const Rat& c);

  std::size_t num_vars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rat constant_value() const;
  std::size_t total_degree() const;
  std::size_t degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  /// Largest term under GrlexLess; requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rat& leading_coefficient() const;

  /// Adds c * x^exps (c may be zero).
  void add_term(const Monomial& exps, const Rat& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rat& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) { return a *= Rat(-1); }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
  friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Rat evaluate(const QVec& point) const;
  /// Replaces x_i by images[i]; all images share one variable count.
  MPoly substitute(const std::vector<MPoly>& images) const;
  /// Scales to leading coefficient 1 (zero stays zero).
  MPoly monic() const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

enum class ArithKind { add, sub, mul };

/// Ring arithmetic; throws PreconditionError on a variable-count mismatch.
MPoly mpoly_arith(const MPoly& a, const MPoly& b, ArithKind kind);
MPoly pow(const MPoly& p, unsigned k);
MPoly partial_derivative(const MPoly& p, std::size_t var_index);
/// Quotient a / b when b divides a exactly, else nullopt.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);
/// Monic greatest common divisor; throws when both inputs are zero.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

/// "(-2)*x0^2*x1 + 3*x1 + 1", terms in decreasing grlex order.
std::string to_string(const MPoly& p);

}  // namespace orbitforge
