#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace osculate {

// Exact coefficient arithmetic. cpp_rational keeps values in lowest terms
// with a positive denominator, which is exactly the normal form we rely on
// when serializing and comparing coefficients.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

inline std::string dec(const BigInt& n) { return n.str(); }

// "p/q", or just "p" when q == 1.
inline std::string dec(const Rational& q) { return q.str(); }

inline std::string num_str(const Rational& q) { return numerator(q).str(); }
inline std::string den_str(const Rational& q) { return denominator(q).str(); }

// Binomial coefficient with the combinatorial convention: zero outside
// 0 <= k <= n. Used heavily by the lattice-path determinants.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

}  // namespace osculate
