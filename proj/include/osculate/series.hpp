#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "osculate/errors.hpp"
#include "osculate/rational.hpp"
#include "osculate/upoly.hpp"

namespace osculate {

// Coefficient-ring glue used by the generic series code. A ring here only
// needs +, -, *, a zero/one, a zero test, an embedding of Q, and a partial
// inverse (empty when the element is not a unit).
template <typename C>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& c) { return c.is_zero(); }
  static Rational from_rational(const Rational& q) { return q; }
  static std::optional<Rational> inverse(const Rational& c) {
    if (c.is_zero()) return std::nullopt;
    return Rational(1) / c;
  }
};

template <>
struct ring_traits<UPoly> {
  static UPoly zero() { return UPoly(); }
  static UPoly one() { return UPoly(1); }
  static bool is_zero(const UPoly& c) { return c.is_zero(); }
  static UPoly from_rational(const Rational& q) { return UPoly(q); }
  static std::optional<UPoly> inverse(const UPoly& c) {
    // Units of Q[u] are the nonzero constants.
    if (c.degree() != 0) return std::nullopt;
    return UPoly(Rational(1) / c.coeff(0));
  }
};

// Power series in t truncated at a fixed order N: exactly the coefficients
// of t^0..t^N are stored and meaningful. Binary operations truncate to the
// smaller operand order, so precision loss is always explicit in the type's
// order() and never silent in the values.
template <typename C>
class TruncSeries {
 public:
  explicit TruncSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.assign(static_cast<size_t>(order) + 1, ring_traits<C>::zero());
  }

  static TruncSeries constant(int order, const C& v) {
    TruncSeries s(order);
    s.c_[0] = v;
    return s;
  }
  static TruncSeries one(int order) { return constant(order, ring_traits<C>::one()); }
  static TruncSeries t(int order) {
    TruncSeries s(order);
    if (order >= 1) s.c_[1] = ring_traits<C>::one();
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const C& coeff(int n) const {
    check_index(n);
    return c_[static_cast<size_t>(n)];
  }
  void set_coeff(int n, C v) {
    check_index(n);
    c_[static_cast<size_t>(n)] = std::move(v);
  }
  void add_to_coeff(int n, const C& v) {
    check_index(n);
    c_[static_cast<size_t>(n)] += v;
  }

  bool is_zero() const {
    for (const C& x : c_)
      if (!ring_traits<C>::is_zero(x)) return false;
    return true;
  }

  // Index of the first nonzero coefficient; order()+1 for the zero series.
  int valuation() const {
    for (int n = 0; n <= order(); ++n)
      if (!ring_traits<C>::is_zero(c_[static_cast<size_t>(n)])) return n;
    return order() + 1;
  }

  TruncSeries truncated(int n) const {
    if (n > order()) throw std::invalid_argument("truncated: order would grow");
    TruncSeries r(n);
    std::copy(c_.begin(), c_.begin() + n + 1, r.c_.begin());
    return r;
  }

  // Zero-padded to a higher order. The padding says nothing about the true
  // higher coefficients; only iterative solvers that re-derive them use this.
  TruncSeries padded_to(int n) const {
    if (n < order()) return truncated(n);
    TruncSeries r(n);
    std::copy(c_.begin(), c_.end(), r.c_.begin());
    return r;
  }

  // Multiply by t^k within the same truncation order (top k terms drop).
  TruncSeries shifted_t(int k) const {
    if (k < 0) throw std::invalid_argument("shifted_t: negative shift");
    TruncSeries r(order());
    for (int n = 0; n + k <= order(); ++n) r.c_[static_cast<size_t>(n + k)] = c_[static_cast<size_t>(n)];
    return r;
  }

  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (C& x : r.c_) x = -x;
    return r;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (int k = 0; k <= n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (int i = 0; i <= n; ++i) {
      if (ring_traits<C>::is_zero(a.c_[static_cast<size_t>(i)])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (ring_traits<C>::is_zero(b.c_[static_cast<size_t>(j)])) continue;
        r.c_[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
      }
    }
    return r;
  }
  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  TruncSeries scaled(const Rational& s) const {
    return scaled_by(ring_traits<C>::from_rational(s));
  }
  TruncSeries scaled_by(const C& s) const {
    TruncSeries r(order());
    if (ring_traits<C>::is_zero(s)) return r;
    for (int n = 0; n <= order(); ++n) r.c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)] * s;
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

 private:
  void check_index(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("series coefficient index out of range");
  }

  std::vector<C> c_;
};

template <typename C>
bool equal_up_to(const TruncSeries<C>& a, const TruncSeries<C>& b, int n) {
  if (n > a.order() || n > b.order())
    throw std::invalid_argument("equal_up_to: order exceeds operand order");
  for (int k = 0; k <= n; ++k)
    if (!(a.coeff(k) == b.coeff(k))) return false;
  return true;
}

// 1/s by the standard long-division recurrence. Requires the constant term
// to be a unit of the coefficient ring.
template <typename C>
TruncSeries<C> invert(const TruncSeries<C>& s) {
  auto inv0 = ring_traits<C>::inverse(s.coeff(0));
  if (!inv0)
    throw NonInvertibleConstantTerm("invert: constant term is not a unit of the coefficient ring");
  TruncSeries<C> r(s.order());
  r.set_coeff(0, *inv0);
  for (int n = 1; n <= s.order(); ++n) {
    C acc = ring_traits<C>::zero();
    for (int k = 1; k <= n; ++k) acc += s.coeff(k) * r.coeff(n - k);
    r.set_coeff(n, -(*inv0 * acc));
  }
  return r;
}

// Square root with constant term 1, by Newton/Hensel lifting from the exact
// order-0 root: r <- (r + s/r)/2 doubles the number of correct coefficients
// each pass.
inline TruncSeries<Rational> sqrt_series(const TruncSeries<Rational>& s) {
  if (s.coeff(0) != 1)
    throw BadConstantTerm("sqrt_series: constant term must be 1");
  const int n = s.order();
  TruncSeries<Rational> r(0);
  r.set_coeff(0, Rational(1));
  int cur = 0;
  while (cur < n) {
    cur = std::min(2 * cur + 1, n);
    TruncSeries<Rational> rc = r.padded_to(cur);
    r = (rc + s.truncated(cur) * invert(rc)).scaled(Rational(1, 2));
  }
  return r;
}

// s / t^k, requiring the k low-order coefficients to vanish exactly.
// The result honestly has k fewer known coefficients.
template <typename C>
TruncSeries<C> divide_by_t_power(const TruncSeries<C>& s, int k) {
  if (k < 0) throw std::invalid_argument("divide_by_t_power: negative power");
  if (k > s.order()) throw std::invalid_argument("divide_by_t_power: power exceeds order");
  for (int n = 0; n < k; ++n)
    if (!ring_traits<C>::is_zero(s.coeff(n)))
      throw NonzeroLowOrderTerm("divide_by_t_power: nonzero coefficient below t^" + std::to_string(k));
  TruncSeries<C> r(s.order() - k);
  for (int n = 0; n <= r.order(); ++n) r.set_coeff(n, s.coeff(n + k));
  return r;
}

// Formal d/dt; the top coefficient is no longer known, so the order drops.
template <typename C>
TruncSeries<C> derivative(const TruncSeries<C>& s) {
  if (s.order() == 0) return TruncSeries<C>(0);
  TruncSeries<C> r(s.order() - 1);
  for (int n = 0; n <= r.order(); ++n)
    r.set_coeff(n, s.coeff(n + 1) * ring_traits<C>::from_rational(Rational(n + 1)));
  return r;
}

template <typename To>
TruncSeries<To> promote_series(const TruncSeries<Rational>& s) {
  TruncSeries<To> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, ring_traits<To>::from_rational(s.coeff(n)));
  return r;
}

inline TruncSeries<Rational> specialize_u(const TruncSeries<UPoly>& s, const Rational& u_value) {
  TruncSeries<Rational> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).eval(u_value));
  return r;
}

}  // namespace osculate
