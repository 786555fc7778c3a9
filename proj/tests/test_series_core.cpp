#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "osculate/laurent_series.hpp"
#include "osculate/series_roots.hpp"

using namespace osculate;

namespace {

using S = TruncSeries<Rational>;
using L1 = Laurent1<Rational>;
using L2 = Laurent2<Rational>;
using SL1 = TruncSeries<L1>;

// Independent oracle for T: its coefficients are 2^n times the Catalan
// numbers, computed here by the elementary convolution recurrence.
std::vector<BigInt> catalan(int n) {
  std::vector<BigInt> c(static_cast<size_t>(n) + 1);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt s(0);
    for (int k = 0; k < m; ++k) s += c[static_cast<size_t>(k)] * c[static_cast<size_t>(m - 1 - k)];
    c[static_cast<size_t>(m)] = s;
  }
  return c;
}

// Independent oracle for sqrt(1+at): binomial series with exponent 1/2,
// successive coefficients by the falling-factorial ratio.
std::vector<Rational> sqrt_binomial_coeffs(const Rational& a, int n) {
  std::vector<Rational> out(static_cast<size_t>(n) + 1);
  Rational binom(1);  // C(1/2, k) * a^k
  out[0] = 1;
  for (int k = 1; k <= n; ++k) {
    binom *= (Rational(1, 2) - Rational(k - 1)) * a / Rational(k);
    out[static_cast<size_t>(k)] = binom;
  }
  return out;
}

S rand_series(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  S s(order);
  for (int n = 0; n <= order; ++n) s.set_coeff(n, Rational(num(rng), den(rng)));
  return s;
}

L1 rand_laurent(std::mt19937& rng, int spread) {
  std::uniform_int_distribution<int> e(-spread, spread);
  std::uniform_int_distribution<int> num(-5, 5);
  L1 p;
  for (int k = 0; k < 4; ++k) p.add_term(e(rng), Rational(num(rng)));
  return p;
}

}  // namespace

TEST_CASE("series ring basics") {
  S one = S::one(6), t = S::t(6);
  CHECK((one + t) * (one - t) == one - t * t);
  CHECK(t.valuation() == 1);
  CHECK(S(6).valuation() == 7);
  CHECK(t.shifted_t(2) == t * t * t);

  // Truncation to the smaller operand order is explicit in the result type.
  S a = S::one(8), b = S::one(5);
  CHECK((a * b).order() == 5);
  CHECK((a + b).order() == 5);
}

TEST_CASE("geometric series inversion") {
  S one = S::one(10), t = S::t(10);
  S inv = invert(one - t);
  for (int n = 0; n <= 10; ++n) CHECK(inv.coeff(n) == 1);
  CHECK(invert(inv) == one - t);
  CHECK((inv * (one - t)) == one);
}

TEST_CASE("inversion requires a unit constant term") {
  CHECK_THROWS_AS(invert(S::t(4)), NonInvertibleConstantTerm);
  // 1 + x is not a unit in the Laurent ring: only monomials invert.
  SL1 s = laurent1_const_series(3, L1(Rational(1)) + L1::var());
  CHECK_THROWS_AS(invert(s), NonInvertibleConstantTerm);
  // x itself is a unit, so a constant term x is fine.
  SL1 xs = monomial_series<Rational>(3, 1);
  CHECK(invert(xs).coeff(0) == L1::monomial(-1, Rational(1)));
}

TEST_CASE("sqrt of 1-8t matches the binomial expansion") {
  const int N = 12;
  S s = S::one(N) - S::t(N).scaled(Rational(8));
  S r = sqrt_series(s);
  auto expect = sqrt_binomial_coeffs(Rational(-8), N);
  for (int n = 0; n <= N; ++n) CHECK(r.coeff(n) == expect[static_cast<size_t>(n)]);
  // Frozen leading values from the expansion oracle.
  CHECK(r.coeff(1) == -4);
  CHECK(r.coeff(2) == -8);
  CHECK(r.coeff(3) == -32);
  CHECK(r.coeff(4) == -160);
  CHECK(r * r == s);
}

TEST_CASE("sqrt requires constant term 1") {
  CHECK_THROWS_AS(sqrt_series(S::one(4).scaled(Rational(4))), BadConstantTerm);
}

TEST_CASE("divide_by_t_power shifts exactly and checks low terms") {
  std::mt19937 rng(7);
  S s = rand_series(rng, 8);
  S shifted(11);
  for (int n = 0; n <= 8; ++n) shifted.set_coeff(n + 3, s.coeff(n));
  S back = divide_by_t_power(shifted, 3);
  CHECK(back == s);

  S bad = S::one(4);
  CHECK_THROWS_AS(divide_by_t_power(bad, 1), NonzeroLowOrderTerm);
}

TEST_CASE("derivative") {
  // d/dt (1 + 3t + 5t^3) = 3 + 15t^2
  S s(4);
  s.set_coeff(0, Rational(1));
  s.set_coeff(1, Rational(3));
  s.set_coeff(3, Rational(5));
  S d = derivative(s);
  CHECK(d.order() == 3);
  CHECK(d.coeff(0) == 3);
  CHECK(d.coeff(1) == 0);
  CHECK(d.coeff(2) == 15);
}

TEST_CASE("T fixed point matches the Catalan oracle and the radical form") {
  const int N = 12;
  S T = solve_T(N);
  auto cat = catalan(N);
  CHECK(T.coeff(0) == 0);
  for (int n = 1; n <= N; ++n) {
    BigInt expect = cat[static_cast<size_t>(n)] << n;  // 2^n Cat(n)
    CHECK(T.coeff(n) == Rational(expect));
  }
  CHECK(T.coeff(1) == 2);
  CHECK(T.coeff(2) == 8);
  CHECK(T.coeff(3) == 40);
  CHECK(T.coeff(4) == 224);

  CHECK(T == solve_T_radical(N));

  // Defining equation and two classical consequences.
  S one = S::one(N), t = S::t(N);
  S onep = one + T;
  CHECK(T == t.scaled(Rational(2)) * onep * onep);
  CHECK((one - t.scaled(Rational(8))) * onep * onep == (one - T) * (one - T));
  CHECK(divide_by_t_power(T, 1).scaled(Rational(1, 2)) == (onep * onep).truncated(N - 1));
}

TEST_CASE("invert(2+T) long division values") {
  // Long division by hand: (2 + 2t + 8t^2)^-1 = 1/2 - t/2 - 3t^2/2 + ...
  // and multiplying back gives exactly 1.
  S T = solve_T(2);
  S s = S::constant(2, Rational(2)) + T;
  S inv = invert(s);
  CHECK(inv.coeff(0) == Rational(1, 2));
  CHECK(inv.coeff(1) == Rational(-1, 2));
  CHECK(inv.coeff(2) == Rational(-3, 2));
  CHECK(s * inv == S::one(2));
}

TEST_CASE("two-walker root X") {
  const int N = 10;
  S X = solve_X(N);
  auto cat = catalan(N);
  for (int n = 1; n <= N; ++n) CHECK(X.coeff(n) == Rational(cat[static_cast<size_t>(n)]));
  CHECK(X.coeff(1) == 1);
  CHECK(X.coeff(2) == 2);
  CHECK(X.coeff(3) == 5);
  CHECK(X.coeff(4) == 14);

  // Quadratic: tX^2 - (1-2t)X + t = 0.
  S one = S::one(N), t = S::t(N);
  CHECK((t * X * X - (one - t.scaled(Rational(2))) * X + t).is_zero());

  // Radical form (1 - 2t - sqrt(1-4t)) / (2t).
  S num = S::one(N + 1) - S::t(N + 1).scaled(Rational(2)) -
          sqrt_series(S::one(N + 1) - S::t(N + 1).scaled(Rational(4)));
  CHECK(X == divide_by_t_power(num, 1).scaled(Rational(1, 2)));
}

TEST_CASE("kernel root Y0") {
  const int N = 10;
  SL1 y = solve_Y0(N);

  CHECK(y.coeff(0).is_zero());
  // t^1: 1 + x.
  L1 c1;
  c1.add_term(0, Rational(1));
  c1.add_term(1, Rational(1));
  CHECK(y.coeff(1) == c1);
  // t^2: (1+x)^2 (1+1/x) = 1/x + 3 + 3x + x^2.
  L1 c2;
  c2.add_term(-1, Rational(1));
  c2.add_term(0, Rational(3));
  c2.add_term(1, Rational(3));
  c2.add_term(2, Rational(1));
  CHECK(y.coeff(2) == c2);

  // K(x, Y0) = 0: x Y0 - t(1+x)(1+Y0)(x+Y0) vanishes identically.
  SL1 xs = monomial_series<Rational>(N, 1);
  SL1 one = SL1::one(N);
  SL1 k = xs * y - ((one + xs) * (one + y) * (xs + y)).shifted_t(1);
  CHECK(k.is_zero());

  // At x = 1 the kernel becomes the T equation, so Y0(1) = T.
  CHECK(eval_one(y) == solve_T(N));

  CHECK_THROWS_AS(solve_Y0(6, 3), std::invalid_argument);
}

TEST_CASE("Laurent split into sign parts is exact") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    L1 p = rand_laurent(rng, 5);
    L1 back = p.positive_part() + p.negative_part() + L1(p.zero_part());
    CHECK(back == p);
    CHECK(p.mirrored().mirrored() == p);
    if (!p.is_zero()) {
      CHECK(p.positive_part().is_zero() == (p.max_exp() <= 0));
      CHECK(p.negative_part().is_zero() == (p.min_exp() >= 0));
    }
  }
}

TEST_CASE("substitution replaces the catalytic variable") {
  const int N = 8;
  SL1 y0 = solve_Y0(N);

  // outer = y^2 as a constant-in-t polynomial: result must be Y0^2.
  SL1 outer = monomial_series<Rational>(N, 2);
  CHECK(substitute(outer, y0) == y0 * y0);

  // outer = 3 + y: affine case.
  SL1 aff = laurent1_const_series(N, L1(Rational(3)) + L1::var());
  CHECK(substitute(aff, y0) == SL1::constant(N, L1(Rational(3))) + y0);

  // Substituting a series with nonzero constant term is rejected.
  CHECK_THROWS_AS(substitute(outer, SL1::one(N)), NonzeroValuation);
  // Negative powers of the outer variable cannot take a series argument.
  SL1 neg = monomial_series<Rational>(N, -1);
  CHECK_THROWS_AS(substitute(neg, y0), std::domain_error);
}

TEST_CASE("series over Laurent coefficients: parts and mirror") {
  const int N = 6;
  SL1 y0 = solve_Y0(N);
  SL1 split = positive_part(y0) + negative_part(y0);
  SL1 zp(N);
  for (int n = 0; n <= N; ++n) zp.set_coeff(n, L1(y0.coeff(n).zero_part()));
  CHECK(split + zp == y0);
  CHECK(mirror(mirror(y0)) == y0);
}

TEST_CASE("UPoly arithmetic and evaluation") {
  UPoly u = UPoly::u();
  UPoly p = UPoly(Rational(1)) + u.scaled(Rational(-4)) + (u * u).scaled(Rational(3));
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(1)) == 0);
  CHECK(p.eval(Rational(0)) == 1);
  CHECK(p.eval(Rational(2)) == 5);
  CHECK((p - p).is_zero());
  CHECK(p.shifted(2) == (u * u) * p);

  TruncSeries<UPoly> s(2);
  s.set_coeff(1, p);
  CHECK(specialize_u(s, Rational(2)).coeff(1) == 5);
}

TEST_CASE("ring axioms hold on random inputs") {
  std::mt19937 rng(42);
  for (int rep = 0; rep < 30; ++rep) {
    S a = rand_series(rng, 6), b = rand_series(rng, 6), c = rand_series(rng, 6);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == S(6));

    if (!a.coeff(0).is_zero()) {
      CHECK(a * invert(a) == S::one(6));
      CHECK(invert(invert(a)) == a);
    }

    S sq = a;
    sq.set_coeff(0, Rational(1));
    CHECK(sqrt_series(sq * sq) == sq);
  }
}

TEST_CASE("Laurent ring axioms on random inputs") {
  std::mt19937 rng(43);
  for (int rep = 0; rep < 30; ++rep) {
    L1 a = rand_laurent(rng, 4), b = rand_laurent(rng, 4), c = rand_laurent(rng, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a.mirrored() * b.mirrored() == (a * b).mirrored());
    CHECK(a.eval_one() + b.eval_one() == (a + b).eval_one());
    CHECK(a.eval_one() * b.eval_one() == (a * b).eval_one());
  }
}

TEST_CASE("two-variable Laurent slices") {
  L2 p;
  p.add_term(0, 0, Rational(7));
  p.add_term(2, 0, Rational(1));
  p.add_term(1, 3, Rational(-2));
  p.add_term(0, 1, Rational(5));

  L1 px = p.at_y_zero();
  CHECK(px.coeff(0) == 7);
  CHECK(px.coeff(2) == 1);
  CHECK(px.coeff(1) == 0);

  L1 py = p.at_x_zero();
  CHECK(py.coeff(0) == 7);
  CHECK(py.coeff(1) == 5);

  CHECK(p.eval_one_one() == 11);
  CHECK(p.eval_x_one().coeff(3) == -2);
  CHECK(p.mirrored_x().mirrored_x() == p);

  L2 q = L2::from_x(px) * L2::from_y(py);
  CHECK(q.coeff(2, 1) == 5);
}
