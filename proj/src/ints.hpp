#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace morincob {

// Arbitrary precision throughout: intermediate entries in normal-form
// reductions grow past any fixed width even for small inputs.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Largest divisor of n made of the prime p only.
inline Int p_part(Int n, const Int& p) {
  Int out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

// n with all factors of p removed.
inline Int coprime_part(Int n, const Int& p) {
  while (n % p == 0) n /= p;
  return n;
}

inline std::string rat_str(const Rat& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace morincob
