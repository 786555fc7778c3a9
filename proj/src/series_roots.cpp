#include "osculate/series_roots.hpp"

namespace osculate {

TruncSeries<Rational> solve_T(int order) {
  using S = TruncSeries<Rational>;
  S t = S::t(order);
  S T(order);
  // Each substitution pass fixes one more coefficient (the right side carries
  // an explicit factor of t), so order+1 passes converge exactly.
  for (int pass = 0; pass <= order; ++pass) {
    S onep = S::one(order) + T;
    T = t.scaled(Rational(2)) * onep * onep;
  }
  return T;
}

TruncSeries<Rational> solve_T_radical(int order) {
  using S = TruncSeries<Rational>;
  // Work one order higher so the division by t keeps `order` coefficients.
  S one = S::one(order + 1);
  S t = S::t(order + 1);
  S num = one - t.scaled(Rational(4)) - sqrt_series(one - t.scaled(Rational(8)));
  return divide_by_t_power(num, 1).scaled(Rational(1, 4));
}

TruncSeries<Laurent1<Rational>> solve_Y0(int order, int window) {
  using L = Laurent1<Rational>;
  using S = TruncSeries<L>;
  if (window == -1) window = order + 2;
  if (window < order)
    throw std::invalid_argument("solve_Y0: exponent window must be >= order");

  const L x = L::var();
  const L xbar_1px = L::monomial(-1, Rational(1)) + L(Rational(1));  // (1+x)/x
  S xs = laurent1_const_series(order, x);
  S m = laurent1_const_series(order, xbar_1px);
  S one = S::one(order);

  S y(order);
  for (int pass = 0; pass <= order; ++pass)
    y = (m * (one + y) * (xs + y)).shifted_t(1);

  for (int n = 0; n <= order; ++n) {
    const L& c = y.coeff(n);
    if (c.is_zero()) continue;
    int lo = std::max(-(n + 2), -window);
    int hi = std::min(n + 2, window);
    if (c.min_exp() < lo || c.max_exp() > hi)
      throw SupportWindowExceeded("solve_Y0: t^" + std::to_string(n) +
                                  " coefficient escaped its x-exponent window");
  }
  return y;
}

TruncSeries<Rational> solve_X(int order) {
  using S = TruncSeries<Rational>;
  S t = S::t(order);
  S X(order);
  for (int pass = 0; pass <= order; ++pass) {
    S onep = S::one(order) + X;
    X = t * onep * onep;
  }
  return X;
}

}  // namespace osculate
