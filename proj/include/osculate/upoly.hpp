#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "osculate/rational.hpp"

namespace osculate {

// Polynomial in the contact-marking variable u, dense coefficients, no
// trailing zeros. Degree of the zero polynomial is -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit UPoly(long long c) : UPoly(Rational(c)) {}

  static UPoly u() { return from_coeffs({Rational(0), Rational(1)}); }

  static UPoly from_coeffs(std::vector<Rational> c) {
    UPoly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
  }

  const std::vector<Rational>& coeffs() const { return c_; }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  UPoly& operator+=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) { return *this += -o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return from_coeffs(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  UPoly scaled(const Rational& s) const {
    if (s.is_zero()) return UPoly();
    UPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  // Multiply by u^k.
  UPoly shifted(int k) const {
    if (is_zero()) return UPoly();
    UPoly r;
    r.c_.assign(static_cast<size_t>(k), Rational(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  Rational eval(const Rational& u_value) const {
    Rational r(0);
    for (size_t k = c_.size(); k-- > 0;) r = r * u_value + c_[k];
    return r;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      if (!first) os << " + ";
      os << c_[k].str();
      if (k == 1) os << "*u";
      if (k > 1) os << "*u^" << k;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace osculate
