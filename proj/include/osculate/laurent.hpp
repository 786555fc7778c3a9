#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "osculate/series.hpp"

namespace osculate {

// Laurent polynomial in one variable: finite support, exponents in Z,
// no stored zero coefficients. The variable is nameless; context decides
// whether it plays the role of x or y.
template <typename C>
class Laurent1 {
 public:
  using Terms = std::map<int, C>;

  Laurent1() = default;
  explicit Laurent1(const C& c) {
    if (!ring_traits<C>::is_zero(c)) t_[0] = c;
  }

  static Laurent1 monomial(int e, const C& c) {
    Laurent1 p;
    if (!ring_traits<C>::is_zero(c)) p.t_[e] = c;
    return p;
  }
  static Laurent1 var() { return monomial(1, ring_traits<C>::one()); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }

  C coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? ring_traits<C>::zero() : it->second;
  }
  int min_exp() const { return t_.begin()->first; }    // requires !is_zero()
  int max_exp() const { return t_.rbegin()->first; }   // requires !is_zero()

  Laurent1 operator-() const {
    Laurent1 r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
  }

  Laurent1& operator+=(const Laurent1& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  Laurent1& operator-=(const Laurent1& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend Laurent1 operator+(Laurent1 a, const Laurent1& b) { return a += b; }
  friend Laurent1 operator-(Laurent1 a, const Laurent1& b) { return a -= b; }

  friend Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
    Laurent1 r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent1& operator*=(const Laurent1& o) { return *this = *this * o; }

  Laurent1 scaled_by(const C& s) const {
    Laurent1 r;
    if (ring_traits<C>::is_zero(s)) return r;
    for (const auto& [e, c] : t_) r.add_term(e, c * s);
    return r;
  }

  // x -> 1/x.
  Laurent1 mirrored() const {
    Laurent1 r;
    for (const auto& [e, c] : t_) r.t_[-e] = c;
    return r;
  }

  // Multiply by x^k.
  Laurent1 shifted(int k) const {
    Laurent1 r;
    for (const auto& [e, c] : t_) r.t_[e + k] = c;
    return r;
  }

  Laurent1 positive_part() const {
    Laurent1 r;
    for (const auto& [e, c] : t_)
      if (e > 0) r.t_[e] = c;
    return r;
  }
  Laurent1 negative_part() const {
    Laurent1 r;
    for (const auto& [e, c] : t_)
      if (e < 0) r.t_[e] = c;
    return r;
  }
  C zero_part() const { return coeff(0); }

  // Evaluation at 1: just the coefficient sum.
  C eval_one() const {
    C s = ring_traits<C>::zero();
    for (const auto& [e, c] : t_) s += c;
    return s;
  }

  friend bool operator==(const Laurent1& a, const Laurent1& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Laurent1& a, const Laurent1& b) { return !(a == b); }

  void add_term(int e, const C& c) {
    if (ring_traits<C>::is_zero(c)) return;
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (ring_traits<C>::is_zero(it->second)) t_.erase(it);
    }
  }

 private:
  Terms t_;
};

// Laurent polynomial in two variables, same storage conventions. Keys are
// (x-exponent, y-exponent), kept in lexicographic order so iteration (and
// therefore serialization) is deterministic.
template <typename C>
class Laurent2 {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, C>;

  Laurent2() = default;
  explicit Laurent2(const C& c) {
    if (!ring_traits<C>::is_zero(c)) t_[{0, 0}] = c;
  }

  static Laurent2 monomial(int ex, int ey, const C& c) {
    Laurent2 p;
    if (!ring_traits<C>::is_zero(c)) p.t_[{ex, ey}] = c;
    return p;
  }

  static Laurent2 from_x(const Laurent1<C>& p) {
    Laurent2 r;
    for (const auto& [e, c] : p.terms()) r.t_[{e, 0}] = c;
    return r;
  }
  static Laurent2 from_y(const Laurent1<C>& p) {
    Laurent2 r;
    for (const auto& [e, c] : p.terms()) r.t_[{0, e}] = c;
    return r;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }

  C coeff(int ex, int ey) const {
    auto it = t_.find({ex, ey});
    return it == t_.end() ? ring_traits<C>::zero() : it->second;
  }

  Laurent2 operator-() const {
    Laurent2 r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
  }
  Laurent2& operator+=(const Laurent2& o) {
    for (const auto& [e, c] : o.t_) add_term(e.first, e.second, c);
    return *this;
  }
  Laurent2& operator-=(const Laurent2& o) {
    for (const auto& [e, c] : o.t_) add_term(e.first, e.second, -c);
    return *this;
  }
  friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
  friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }

  friend Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
    Laurent2 r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_)
        r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }
  Laurent2& operator*=(const Laurent2& o) { return *this = *this * o; }

  Laurent2 scaled_by(const C& s) const {
    Laurent2 r;
    if (ring_traits<C>::is_zero(s)) return r;
    for (const auto& [e, c] : t_) r.add_term(e.first, e.second, c * s);
    return r;
  }

  Laurent2 shifted(int kx, int ky) const {
    Laurent2 r;
    for (const auto& [e, c] : t_) r.t_[{e.first + kx, e.second + ky}] = c;
    return r;
  }

  Laurent2 mirrored_x() const {
    Laurent2 r;
    for (const auto& [e, c] : t_) r.t_[{-e.first, e.second}] = c;
    return r;
  }
  Laurent2 mirrored_y() const {
    Laurent2 r;
    for (const auto& [e, c] : t_) r.t_[{e.first, -e.second}] = c;
    return r;
  }

  // Coefficient-extraction slices. For polynomial generating functions,
  // keeping the ey == 0 terms is exactly "set y = 0".
  Laurent1<C> at_y_zero() const {
    Laurent1<C> r;
    for (const auto& [e, c] : t_)
      if (e.second == 0) r.add_term(e.first, c);
    return r;
  }
  Laurent1<C> at_x_zero() const {
    Laurent1<C> r;
    for (const auto& [e, c] : t_)
      if (e.first == 0) r.add_term(e.second, c);
    return r;
  }

  Laurent1<C> eval_x_one() const {  // collapse x; remaining variable is y
    Laurent1<C> r;
    for (const auto& [e, c] : t_) r.add_term(e.second, c);
    return r;
  }
  Laurent1<C> eval_y_one() const {
    Laurent1<C> r;
    for (const auto& [e, c] : t_) r.add_term(e.first, c);
    return r;
  }
  C eval_one_one() const {
    C s = ring_traits<C>::zero();
    for (const auto& [e, c] : t_) s += c;
    return s;
  }

  bool min_exps(int& mx, int& my) const {
    if (t_.empty()) return false;
    mx = t_.begin()->first.first;
    my = t_.begin()->first.second;
    for (const auto& [e, c] : t_) {
      mx = std::min(mx, e.first);
      my = std::min(my, e.second);
    }
    return true;
  }

  friend bool operator==(const Laurent2& a, const Laurent2& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Laurent2& a, const Laurent2& b) { return !(a == b); }

  void add_term(int ex, int ey, const C& c) {
    if (ring_traits<C>::is_zero(c)) return;
    auto [it, inserted] = t_.try_emplace(Key{ex, ey}, c);
    if (!inserted) {
      it->second += c;
      if (ring_traits<C>::is_zero(it->second)) t_.erase(it);
    }
  }

 private:
  Terms t_;
};

template <typename C>
struct ring_traits<Laurent1<C>> {
  static Laurent1<C> zero() { return Laurent1<C>(); }
  static Laurent1<C> one() { return Laurent1<C>(ring_traits<C>::one()); }
  static bool is_zero(const Laurent1<C>& p) { return p.is_zero(); }
  static Laurent1<C> from_rational(const Rational& q) {
    return Laurent1<C>(ring_traits<C>::from_rational(q));
  }
  static std::optional<Laurent1<C>> inverse(const Laurent1<C>& p) {
    // Units are single terms with a unit coefficient.
    if (!p.is_monomial()) return std::nullopt;
    int e = p.min_exp();
    auto ci = ring_traits<C>::inverse(p.coeff(e));
    if (!ci) return std::nullopt;
    return Laurent1<C>::monomial(-e, *ci);
  }
};

template <typename C>
struct ring_traits<Laurent2<C>> {
  static Laurent2<C> zero() { return Laurent2<C>(); }
  static Laurent2<C> one() { return Laurent2<C>(ring_traits<C>::one()); }
  static bool is_zero(const Laurent2<C>& p) { return p.is_zero(); }
  static Laurent2<C> from_rational(const Rational& q) {
    return Laurent2<C>(ring_traits<C>::from_rational(q));
  }
  static std::optional<Laurent2<C>> inverse(const Laurent2<C>& p) {
    if (!p.is_monomial()) return std::nullopt;
    const auto& [e, c] = *p.terms().begin();
    auto ci = ring_traits<C>::inverse(c);
    if (!ci) return std::nullopt;
    return Laurent2<C>::monomial(-e.first, -e.second, *ci);
  }
};

using LaurentPoly1 = Laurent1<Rational>;
using LaurentPoly2 = Laurent2<Rational>;

}  // namespace osculate
