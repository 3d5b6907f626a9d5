#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ints.hpp"

namespace morincob {

// Dense univariate polynomial with exact rational coefficients. The
// coefficient vector never has a trailing zero; the zero polynomial is the
// empty vector (degree -1).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly zero() { return {}; }
  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, std::size_t deg);
  static UniPoly from_roots(const std::vector<Rat>& roots);  // monic
  static UniPoly parse(const std::string& text, const std::string& var = "x");

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(std::size_t i) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Rat& c) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly derivative() const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;

  // Quotient and remainder by a nonzero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly monic() const;

  static UniPoly gcd(UniPoly a, UniPoly b);  // monic result
  UniPoly squarefree_part() const;
  // Yun decomposition: list of (monic squarefree factor, multiplicity) with
  // positive-degree factors only.
  std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition() const;

  // All real roots lie in (-B, B).
  Rat cauchy_root_bound() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

// Signed remainder (Sturm) chain of p.
std::vector<UniPoly> sturm_chain(const UniPoly& p);

// Number of distinct real roots (in (lo, hi] for the interval form).
int count_real_roots(const UniPoly& p);
int count_real_roots_in(const UniPoly& p, const Rat& lo, const Rat& hi);

// All complex roots real, counted with multiplicity. Decided exactly through
// the Sturm count of the squarefree part. Rejects the zero polynomial.
bool is_real_rooted(const UniPoly& p);

// Disjoint intervals (lo, hi] with rational endpoints, one per distinct real
// root, in increasing order.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UniPoly& p);

}  // namespace morincob
