#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osculate/laurent.hpp"
#include "osculate/series.hpp"
#include "osculate/upoly.hpp"

namespace osculate {

// Location and value of the first offending coefficient of a residual series,
// in increasing (t, x, y, u) order. Fields beyond t_power are filled only when
// the coefficient ring carries that variable.
struct FailurePoint {
  int t_power = -1;
  std::optional<int> x_exp;
  std::optional<int> y_exp;
  std::optional<int> u_deg;
  std::string value;
};

struct IdentityReport {
  std::string identity;
  int order_checked = 0;
  bool residual_zero = true;
  std::optional<FailurePoint> first_nonzero;
};

struct CheckReport {
  std::string check_name;
  std::optional<int> i;
  std::optional<int> j;
  int order = 0;
  bool passed = true;
  std::vector<IdentityReport> identities;
  std::optional<FailurePoint> first_failure;

  void add(IdentityReport r) {
    if (!r.residual_zero) {
      passed = false;
      if (!first_failure) first_failure = r.first_nonzero;
    }
    identities.push_back(std::move(r));
  }

  void merge(const CheckReport& other) {
    for (const auto& r : other.identities) add(r);
  }
};

inline std::string rational_str(const Rational& q) { return dec(q); }

inline void describe_coeff(const Rational& c, FailurePoint& fp) { fp.value = rational_str(c); }

inline void describe_coeff(const UPoly& c, FailurePoint& fp) {
  for (int d = 0; d <= c.degree(); ++d)
    if (!(c.coeff(d) == Rational(0))) {
      fp.u_deg = d;
      fp.value = rational_str(c.coeff(d));
      return;
    }
}

template <class C>
void describe_coeff(const Laurent1<C>& c, FailurePoint& fp) {
  const auto& [e, inner] = *c.terms().begin();
  fp.x_exp = e;
  describe_coeff(inner, fp);
}

template <class C>
void describe_coeff(const Laurent2<C>& c, FailurePoint& fp) {
  const auto& [e, inner] = *c.terms().begin();
  fp.x_exp = e.first;
  fp.y_exp = e.second;
  describe_coeff(inner, fp);
}

template <class C>
std::optional<FailurePoint> first_nonzero_term(const TruncSeries<C>& s) {
  for (int n = 0; n <= s.order(); ++n)
    if (!ring_traits<C>::is_zero(s.coeff(n))) {
      FailurePoint fp;
      fp.t_power = n;
      describe_coeff(s.coeff(n), fp);
      return fp;
    }
  return std::nullopt;
}

// Residual-is-zero witness for one identity.
template <class C>
IdentityReport expect_zero(std::string name, const TruncSeries<C>& residual) {
  IdentityReport r;
  r.identity = std::move(name);
  r.order_checked = residual.order();
  r.first_nonzero = first_nonzero_term(residual);
  r.residual_zero = !r.first_nonzero.has_value();
  return r;
}

// Two-sided form; operands of different orders are compared at the smaller.
template <class C>
IdentityReport expect_equal(std::string name, const TruncSeries<C>& lhs,
                            const TruncSeries<C>& rhs) {
  return expect_zero(std::move(name), lhs - rhs);
}

}  // namespace osculate
