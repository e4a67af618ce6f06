#include "orbitforge/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orbitforge/error.hpp"

namespace orbitforge {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MPoly MPoly::constant(std::size_t num_vars, const Rat& c) {
  MPoly p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t num_vars, std::size_t index) {
  require(index < num_vars, "variable index below the variable count");
  Monomial m(num_vars, 0);
  m[index] = 1;
  return monomial(num_vars, std::move(m), Rat(1));
}

MPoly MPoly::monomial(std::size_t num_vars, Monomial exps, const Rat& c) {
  require(exps.size() == num_vars, "exponent vector length equals variable count");
  MPoly p(num_vars);
  p.add_term(exps, c);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

Rat MPoly::constant_value() const {
  require(is_constant(), "polynomial is constant");
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

std::size_t MPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& m = terms_.rbegin()->first;
  return std::accumulate(m.begin(), m.end(), std::size_t{0});
}

std::size_t MPoly::degree_in(std::size_t var) const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max<std::size_t>(d, m[var]);
  return d;
}

const Monomial& MPoly::leading_monomial() const {
  require(!terms_.empty(), "leading term of a nonzero polynomial");
  return terms_.rbegin()->first;
}

const Rat& MPoly::leading_coefficient() const {
  require(!terms_.empty(), "leading term of a nonzero polynomial");
  return terms_.rbegin()->second;
}

void MPoly::add_term(const Monomial& exps, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require(nvars_ == o.nvars_, "polynomials share the variable count");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require(nvars_ == o.nvars_, "polynomials share the variable count");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  require(a.nvars_ == b.nvars_, "polynomials share the variable count");
  MPoly out(a.nvars_);
  Monomial m(a.nvars_);
  Rat c;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      c = ca * cb;
      out.add_term(m, c);
    }
  return out;
}

Rat MPoly::evaluate(const QVec& point) const {
  require(point.size() == nvars_, "evaluation point has one entry per variable");
  Rat total;
  Rat term;
  Rat pw;
  for (const auto& [m, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < nvars_ && term != 0; ++i) {
      if (m[i] == 0) continue;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), m[i]);
      term *= pw;
    }
    total += term;
  }
  return total;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  require(images.size() == nvars_, "one image per variable");
  const std::size_t out_vars = images.empty() ? 0 : images.front().num_vars();
  for (const auto& im : images) require(im.num_vars() == out_vars, "images share the variable count");
  // Powers are cached per variable since the same exponents recur.
  std::vector<std::vector<MPoly>> powers(nvars_);
  MPoly out(out_vars);
  for (const auto& [m, c] : terms_) {
    MPoly t = MPoly::constant(out_vars, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(MPoly::constant(out_vars, Rat(1)));
      while (cache.size() <= m[i]) cache.push_back(cache.back() * images[i]);
      t = t * cache[m[i]];
    }
    out += t;
  }
  return out;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / leading_coefficient();
  return *this * inv;
}

MPoly mpoly_arith(const MPoly& a, const MPoly& b, ArithKind kind) {
  require(a.num_vars() == b.num_vars(), "polynomials share the variable count");
  switch (kind) {
    case ArithKind::add:
      return a + b;
    case ArithKind::sub:
      return a - b;
    case ArithKind::mul:
      return a * b;
  }
  return MPoly(a.num_vars());
}

MPoly pow(const MPoly& p, unsigned k) {
  MPoly result = MPoly::constant(p.num_vars(), Rat(1));
  MPoly base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

MPoly partial_derivative(const MPoly& p, std::size_t var_index) {
  require(var_index < p.num_vars(), "derivative variable index in range");
  MPoly out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var_index] == 0) continue;
    Monomial d = m;
    d[var_index] -= 1;
    out.add_term(d, c * m[var_index]);
  }
  return out;
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  require(a.num_vars() == b.num_vars(), "polynomials share the variable count");
  require(!b.is_zero(), "divisor is nonzero");
  const std::size_t nv = a.num_vars();
  MPoly q(nv);
  MPoly r = a;
  const Monomial& lb = b.leading_monomial();
  const Rat& cb = b.leading_coefficient();
  Monomial t(nv);
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    for (std::size_t i = 0; i < nv; ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      t[i] = lr[i] - lb[i];
    }
    Rat c = r.leading_coefficient() / cb;
    q.add_term(t, c);
    for (const auto& [m, cm] : b.terms()) {
      Monomial s(nv);
      for (std::size_t i = 0; i < nv; ++i) s[i] = m[i] + t[i];
      r.add_term(s, -c * cm);
    }
  }
  return q;
}

namespace {

// Univariate view: coefficient k of x_var^k, each coefficient free of x_var.
using UPoly = std::vector<MPoly>;

UPoly to_univariate(const MPoly& p, std::size_t var) {
  UPoly u(p.degree_in(var) + 1, MPoly(p.num_vars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial s = m;
    const auto k = s[var];
    s[var] = 0;
    u[k].add_term(s, c);
  }
  while (u.size() > 1 && u.back().is_zero()) u.pop_back();
  return u;
}

MPoly from_univariate(const UPoly& u, std::size_t var, std::size_t nv) {
  MPoly p(nv);
  for (std::size_t k = 0; k < u.size(); ++k)
    for (const auto& [m, c] : u[k].terms()) {
      Monomial s = m;
      s[var] = static_cast<std::uint32_t>(k);
      p.add_term(s, c);
    }
  return p;
}

bool upoly_zero(const UPoly& u) {
  return std::all_of(u.begin(), u.end(), [](const MPoly& c) { return c.is_zero(); });
}

void trim(UPoly& u) {
  while (u.size() > 1 && u.back().is_zero()) u.pop_back();
}

MPoly exact_or_throw(const MPoly& a, const MPoly& b) {
  auto q = divide_exact(a, b);
  ensure(q.has_value(), "exact division inside the subresultant sequence");
  return *q;
}

/// lc(b)^(deg a - deg b + 1) * a  mod  b.
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const MPoly& lb = b.back();
  std::size_t e = a.size() - 1 - db + 1;
  while (!upoly_zero(a) && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    MPoly lead = a.back();
    for (auto& c : a) c = c * lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= lead * b[k];
    a.pop_back();
    if (a.empty()) a.push_back(MPoly(lb.num_vars()));
    trim(a);
    --e;
    if (a.size() == 1 && db == 0) break;
  }
  if (e > 0) {
    MPoly f = pow(lb, static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

MPoly content(const UPoly& u) {
  MPoly g(u.front().num_vars());
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : mpoly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

UPoly primitive_part(const UPoly& u) {
  MPoly c = content(u);
  UPoly out;
  out.reserve(u.size());
  for (const auto& x : u) out.push_back(x.is_zero() ? x : exact_or_throw(x, c));
  return out;
}

/// Primitive gcd of two primitive polynomials in one variable, by the
/// subresultant polynomial remainder sequence.
UPoly subresultant_gcd(UPoly a, UPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t nv = a.front().num_vars();
  MPoly g = MPoly::constant(nv, Rat(1));
  MPoly h = MPoly::constant(nv, Rat(1));
  while (true) {
    const std::size_t delta = a.size() - b.size();
    UPoly r = pseudo_remainder(a, b);
    if (upoly_zero(r)) return primitive_part(b);
    if (r.size() == 1) return UPoly{MPoly::constant(nv, Rat(1))};
    a = std::move(b);
    MPoly div = g * pow(h, static_cast<unsigned>(delta));
    for (auto& c : r) c = c.is_zero() ? c : exact_or_throw(c, div);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_or_throw(pow(g, static_cast<unsigned>(delta)),
                         pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
}

std::optional<std::size_t> main_variable(const MPoly& a, const MPoly& b) {
  for (std::size_t v = a.num_vars(); v-- > 0;)
    if (a.involves(v) || b.involves(v)) return v;
  return std::nullopt;
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
  require(a.num_vars() == b.num_vars(), "polynomials share the variable count");
  require(!(a.is_zero() && b.is_zero()), "gcd arguments are not both zero");
  const std::size_t nv = a.num_vars();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly::constant(nv, Rat(1));
  const std::size_t v = *main_variable(a, b);
  UPoly ua = to_univariate(a, v);
  UPoly ub = to_univariate(b, v);
  if (ua.size() == 1) return mpoly_gcd(a, content(ub));
  if (ub.size() == 1) return mpoly_gcd(content(ua), b);
  MPoly ca = content(ua);
  MPoly cb = content(ub);
  MPoly cg = mpoly_gcd(ca, cb);
  UPoly pa = primitive_part(ua);
  UPoly pb = primitive_part(ub);
  UPoly pg = subresultant_gcd(std::move(pa), std::move(pb));
  return (cg * from_univariate(pg, v, nv)).monic();
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    const bool is_const = std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
    const bool wrap = c < 0 || c.get_den() != 1;
    if (is_const) {
      os << (wrap ? "(" : "") << c << (wrap ? ")" : "");
      continue;
    }
    bool need_star = false;
    if (c != 1) {
      os << (wrap ? "(" : "") << c << (wrap ? ")" : "");
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << (need_star ? "*" : "") << 'x' << i;
      if (m[i] > 1) os << '^' << m[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace orbitforge
