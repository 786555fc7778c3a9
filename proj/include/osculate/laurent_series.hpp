#pragma once

#include <string>
#include <utility>

#include "osculate/laurent.hpp"
#include "osculate/series.hpp"

namespace osculate {

// Helpers for series in t whose coefficients are Laurent polynomials in a
// catalytic variable. These are the pieces the kernel-method checks lean on:
// splitting by exponent sign, mirroring, and substituting a series with
// positive t-valuation for the catalytic variable.

template <typename C>
TruncSeries<Laurent1<C>> laurent1_const_series(int order, const Laurent1<C>& p) {
  return TruncSeries<Laurent1<C>>::constant(order, p);
}

template <typename C>
TruncSeries<Laurent1<C>> monomial_series(int order, int e) {
  return TruncSeries<Laurent1<C>>::constant(order, Laurent1<C>::monomial(e, ring_traits<C>::one()));
}

// A scalar series viewed as a Laurent series supported on exponent zero.
template <typename C>
TruncSeries<Laurent1<C>> as_laurent1(const TruncSeries<C>& s) {
  TruncSeries<Laurent1<C>> r(s.order());
  for (int n = 0; n <= s.order(); ++n)
    if (!ring_traits<C>::is_zero(s.coeff(n))) r.set_coeff(n, Laurent1<C>(s.coeff(n)));
  return r;
}

template <typename C>
TruncSeries<Laurent2<C>> as_laurent2(const TruncSeries<C>& s) {
  TruncSeries<Laurent2<C>> r(s.order());
  for (int n = 0; n <= s.order(); ++n)
    if (!ring_traits<C>::is_zero(s.coeff(n))) r.set_coeff(n, Laurent2<C>(s.coeff(n)));
  return r;
}

template <typename C>
TruncSeries<Laurent1<C>> positive_part(const TruncSeries<Laurent1<C>>& s) {
  TruncSeries<Laurent1<C>> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).positive_part());
  return r;
}

template <typename C>
TruncSeries<Laurent1<C>> negative_part(const TruncSeries<Laurent1<C>>& s) {
  TruncSeries<Laurent1<C>> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).negative_part());
  return r;
}

// The constant-in-x slice, as a plain series over the inner ring.
template <typename C>
TruncSeries<C> x_zero_part(const TruncSeries<Laurent1<C>>& s) {
  TruncSeries<C> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).zero_part());
  return r;
}

// Splits s into its strictly positive and strictly negative exponent parts.
// Callers use this when the two halves are known series whose supports cannot
// overlap; a surviving x-zero slice means that premise is wrong, so it raises
// NonzeroConstantPart instead of silently attributing it to either half.
template <typename C>
std::pair<TruncSeries<Laurent1<C>>, TruncSeries<Laurent1<C>>> split_signed(
    const TruncSeries<Laurent1<C>>& s) {
  for (int n = 0; n <= s.order(); ++n)
    if (!ring_traits<C>::is_zero(s.coeff(n).zero_part()))
      throw NonzeroConstantPart("split_signed: x^0 slice survives at t^" +
                                std::to_string(n));
  return {positive_part(s), negative_part(s)};
}

template <typename C>
TruncSeries<Laurent1<C>> mirror(const TruncSeries<Laurent1<C>>& s) {
  TruncSeries<Laurent1<C>> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).mirrored());
  return r;
}

template <typename C>
TruncSeries<C> eval_one(const TruncSeries<Laurent1<C>>& s) {
  TruncSeries<C> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).eval_one());
  return r;
}

template <typename C>
TruncSeries<C> coeff_at(const TruncSeries<Laurent1<C>>& s, int e) {
  TruncSeries<C> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).coeff(e));
  return r;
}

// Substitute `inner` for the catalytic variable of `outer`. The outer series
// must be polynomial in that variable (no negative exponents) and the inner
// series must vanish at t = 0, otherwise every truncated coefficient of the
// result would depend on infinitely many terms.
template <typename C>
TruncSeries<Laurent1<C>> substitute(const TruncSeries<Laurent1<C>>& outer,
                                    const TruncSeries<Laurent1<C>>& inner) {
  if (!inner.coeff(0).is_zero())
    throw NonzeroValuation("substitute: inner series must have t-valuation >= 1");
  const int n = std::min(outer.order(), inner.order());

  int max_deg = 0;
  for (int m = 0; m <= n; ++m) {
    const auto& p = outer.coeff(m);
    if (p.is_zero()) continue;
    if (p.min_exp() < 0)
      throw std::domain_error("substitute: outer series has negative exponents");
    max_deg = std::max(max_deg, p.max_exp());
  }

  // inner^k has t-valuation k, so powers above n cannot contribute.
  max_deg = std::min(max_deg, n);
  std::vector<TruncSeries<Laurent1<C>>> pw;
  pw.reserve(static_cast<size_t>(max_deg) + 1);
  pw.push_back(TruncSeries<Laurent1<C>>::one(n));
  for (int k = 1; k <= max_deg; ++k) pw.push_back(pw.back() * inner.truncated(n));

  TruncSeries<Laurent1<C>> r(n);
  for (int m = 0; m <= n; ++m) {
    for (const auto& [e, c] : outer.coeff(m).terms()) {
      if (e > n - m) continue;  // valuation e plus shift m exceeds the order
      const auto& pk = pw[static_cast<size_t>(e)];
      for (int a = 0; a + m <= n; ++a) {
        if (pk.coeff(a).is_zero()) continue;
        r.add_to_coeff(a + m, pk.coeff(a).scaled_by(c));
      }
    }
  }
  return r;
}

// Two-variable counterparts.

template <typename C>
TruncSeries<Laurent2<C>> embed_x(const TruncSeries<Laurent1<C>>& s) {
  TruncSeries<Laurent2<C>> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, Laurent2<C>::from_x(s.coeff(n)));
  return r;
}

template <typename C>
TruncSeries<Laurent2<C>> embed_y(const TruncSeries<Laurent1<C>>& s) {
  TruncSeries<Laurent2<C>> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, Laurent2<C>::from_y(s.coeff(n)));
  return r;
}

template <typename C>
TruncSeries<Laurent1<C>> at_y_zero(const TruncSeries<Laurent2<C>>& s) {
  TruncSeries<Laurent1<C>> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).at_y_zero());
  return r;
}

template <typename C>
TruncSeries<Laurent1<C>> at_x_zero(const TruncSeries<Laurent2<C>>& s) {
  TruncSeries<Laurent1<C>> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).at_x_zero());
  return r;
}

template <typename C>
TruncSeries<Laurent1<C>> eval_x_one(const TruncSeries<Laurent2<C>>& s) {
  TruncSeries<Laurent1<C>> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).eval_x_one());
  return r;
}

template <typename C>
TruncSeries<Laurent1<C>> eval_y_one(const TruncSeries<Laurent2<C>>& s) {
  TruncSeries<Laurent1<C>> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).eval_y_one());
  return r;
}

template <typename C>
TruncSeries<C> eval_one_one(const TruncSeries<Laurent2<C>>& s) {
  TruncSeries<C> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).eval_one_one());
  return r;
}

template <typename C>
TruncSeries<C> coeff_at(const TruncSeries<Laurent2<C>>& s, int ex, int ey) {
  TruncSeries<C> r(s.order());
  for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).coeff(ex, ey));
  return r;
}

// Throws if any coefficient carries a negative exponent; used after
// assembling generating functions that must be honest polynomials.
template <typename C>
void require_polynomial(const TruncSeries<Laurent2<C>>& s, const std::string& what) {
  for (int n = 0; n <= s.order(); ++n) {
    int mx, my;
    if (s.coeff(n).min_exps(mx, my) && (mx < 0 || my < 0))
      throw NegativeExponentSurvived(what + ": negative exponent at t^" + std::to_string(n));
  }
}

inline TruncSeries<Laurent2<Rational>> specialize_u(const TruncSeries<Laurent2<UPoly>>& s,
                                                    const Rational& u_value) {
  TruncSeries<Laurent2<Rational>> r(s.order());
  for (int n = 0; n <= s.order(); ++n)
    for (const auto& [e, c] : s.coeff(n).terms()) {
      Rational v = c.eval(u_value);
      if (!v.is_zero()) {
        auto cur = r.coeff(n);
        cur.add_term(e.first, e.second, v);
        r.set_coeff(n, cur);
      }
    }
  return r;
}

inline TruncSeries<Laurent1<Rational>> specialize_u(const TruncSeries<Laurent1<UPoly>>& s,
                                                    const Rational& u_value) {
  TruncSeries<Laurent1<Rational>> r(s.order());
  for (int n = 0; n <= s.order(); ++n)
    for (const auto& [e, c] : s.coeff(n).terms()) {
      Rational v = c.eval(u_value);
      if (!v.is_zero()) {
        auto cur = r.coeff(n);
        cur.add_term(e, v);
        r.set_coeff(n, cur);
      }
    }
  return r;
}

}  // namespace osculate
