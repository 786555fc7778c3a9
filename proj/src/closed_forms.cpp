#include "osculate/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "osculate/enumerator.hpp"

namespace osculate {

namespace {

using S = TruncSeries<Rational>;
using SU = TruncSeries<UPoly>;
using SL = TruncSeries<Laurent1<Rational>>;
using SLu = TruncSeries<Laurent1<UPoly>>;
using S2 = TruncSeries<Laurent2<Rational>>;

template <class C>
TruncSeries<C> pow_series(const TruncSeries<C>& b, int e) {
  TruncSeries<C> r = TruncSeries<C>::one(b.order());
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

void check_start(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("start gaps must be nonnegative");
}

void check_osculating_start(int i, int j) {
  check_start(i, j);
  if (i == 0 && j == 0)
    throw BadStart(
        "start (0,0) puts all three walkers on one site; no step can separate "
        "both touching pairs at once, so the osculating closed forms exclude it");
}

S one_minus_8t(int order) { return S::one(order) - S::t(order).scaled(Rational(8)); }

// 3t/(1+t), used by the second length form.
S three_t_over_1pt(int order) {
  return (invert(S::one(order) + S::t(order)) * S::t(order)).scaled(Rational(3));
}

SLu to_upoly_coeffs(const SL& s) {
  SLu r(s.order());
  for (int n = 0; n <= s.order(); ++n) {
    Laurent1<UPoly> c;
    for (const auto& [e, q] : s.coeff(n).terms()) c.add_term(e, UPoly(q));
    r.set_coeff(n, c);
  }
  return r;
}

// Per-endpoint length series [x^k y^l] of a three-walker table, contact
// statistic summed out.
S slice_series(const CountTable& t, int k, int l, int order) {
  S r(order);
  for (const auto& [key, c] : t.cells())
    if (key[0] <= order && key[1] == k && key[2] == l) r.add_to_coeff(key[0], Rational(c));
  return r;
}

}  // namespace

TruncSeries<Rational> osculating_length_gf(int i, int j, int order) {
  check_osculating_start(i, j);
  const int N = order;
  S T = solve_T(N), one = S::one(N);
  S inv12T = invert(one + T.scaled(Rational(2)));
  S inv2T = invert(S::constant(N, Rational(2)) + T);

  S rhs1 = one - (pow_series(T, j + 1) * inv12T).scaled(Rational(3)) +
           (pow_series(T, i + j + 1) * inv2T).scaled(Rational(3)) -
           (pow_series(T, i + 1) * inv12T).scaled(Rational(3));

  S two_plus_T = S::constant(N, Rational(2)) + T;
  S one_plus_2T = one + T.scaled(Rational(2));
  S rhs2 = one - three_t_over_1pt(N) * (pow_series(T, j) * two_plus_T -
                                        pow_series(T, i + j) * one_plus_2T +
                                        pow_series(T, i) * two_plus_T);
  if (rhs1 != rhs2)
    throw std::logic_error("the two equivalent length-series forms disagree");

  return rhs1 * invert(one_minus_8t(N));
}

TruncSeries<Rational> osculating_length_radical_11(int order) {
  const int M = order + 2;
  S one = S::one(M), t = S::t(M);
  S numer = S::constant(M, Rational(3)) - t.scaled(Rational(15)) -
            (t * t).scaled(Rational(4)) -
            (one - t) * sqrt_series(one - t.scaled(Rational(8))).scaled(Rational(3));
  S reduced = divide_by_t_power(numer, 2);  // exact: valuation 2
  const int N = order;
  return reduced * invert((S::one(N) + S::t(N)).scaled(Rational(8)));
}

TruncSeries<Rational> vicious_length_gf(int i, int j, int order) {
  check_start(i, j);
  S T = solve_T(order), one = S::one(order);
  return (one - pow_series(T, i)) * (one - pow_series(T, j)) * invert(one_minus_8t(order));
}

TruncSeries<UPoly> osculation_refined_gf(int i, int j, int order) {
  check_osculating_start(i, j);
  const int N = order;
  SU T = promote_series<UPoly>(solve_T(N));
  SU one = SU::one(N);
  UPoly u = UPoly::u();

  SU one_plus_T = one + T;
  SU d1 = one_plus_T * one_plus_T - (T * T).scaled_by(u);      // (1+T)^2 - uT^2
  SU d2 = one_plus_T.scaled(Rational(2)) - T.scaled_by(u);     // 2(1+T) - uT
  SU num_mid = one_plus_T.scaled(Rational(2)) - SU::constant(N, u);  // 2(1+T) - u

  SU inner = pow_series(T, j + 1) - pow_series(T, i + j + 1) * num_mid * invert(d2) +
             pow_series(T, i + 1);
  SU four_minus_u = SU::constant(N, UPoly(Rational(4)) - u);
  SU rhs = one - four_minus_u * invert(d1) * inner;
  return rhs * invert(promote_series<UPoly>(one_minus_8t(N)));
}

BigInt gv_determinant(int i, int j, int k, int l, int r, int n) {
  const int col[3] = {0, k, k + l};
  const int row[3] = {0, i, i + j};
  BigInt m[3][3];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) m[a][b] = binomial(n, r + col[b] - row[a]);
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

TruncSeries<Laurent2<Rational>> vicious_complete_gf(int i, int j, int order) {
  check_start(i, j);
  S2 s(order);
  for (int n = 0; n <= order; ++n) {
    Laurent2<Rational> c;
    for (int k = 0; k <= i + n; ++k)
      for (int l = 0; l <= j + n; ++l)
        for (int r = 0; r <= n; ++r) {
          BigInt d = gv_determinant(i, j, k, l, r, n);
          if (!d.is_zero()) c.add_term(k, l, Rational(d));
        }
    s.set_coeff(n, c);
  }
  return s;
}

TruncSeries<Laurent2<Rational>> osculating_complete_gf(int i, int j, int order) {
  check_osculating_start(i, j);
  const int N = order;
  S2 vsum = vicious_complete_gf(i, j, N) + vicious_complete_gf(i + 1, j, N) +
            vicious_complete_gf(i, j + 1, N);
  Laurent2<Rational> pref;  // (x+y+xy)/(xy) = 1/x + 1/y + 1
  pref.add_term(-1, 0, Rational(1));
  pref.add_term(0, -1, Rational(1));
  pref.add_term(0, 0, Rational(1));
  S2 numer = S2::constant(N, Laurent2<Rational>::monomial(i, j, Rational(1))) +
             vsum.scaled_by(pref).shifted_t(1);
  S2 result = numer * as_laurent2(invert(S::one(N) + S::t(N)));
  require_polynomial(result, "osculating complete series");
  return result;
}

std::vector<BigInt> baxter_numbers(int count) {
  std::vector<BigInt> b;
  b.reserve(static_cast<size_t>(count));
  for (int n = 0; n + 1 <= count; ++n) {
    BigInt s(0);
    for (int r = 0; r <= n; ++r)
      s += binomial(n + 2, r) * binomial(n + 2, r + 1) * binomial(n + 2, r + 2);
    BigInt numer = 2 * s;
    BigInt denom = BigInt(n + 1) * BigInt(n + 2) * BigInt(n + 2);
    if (numer % denom != 0)
      throw std::logic_error("watermelon count sum is not divisible as expected");
    b.push_back(numer / denom);
  }
  return b;
}

TruncSeries<Rational> baxter_gf(int order) {
  auto b = baxter_numbers(order);
  S s(order);
  for (int n = 1; n <= order; ++n) s.set_coeff(n, Rational(b[static_cast<size_t>(n - 1)]));
  return s;
}

TruncSeries<Rational> baxter_ode_residual(const TruncSeries<Rational>& B) {
  const int N = B.order();
  if (N < 2) throw std::invalid_argument("need order >= 2 to form the second derivative");
  S B1 = derivative(B);       // order N-1
  S B2 = derivative(B1);      // order N-2
  const int M = N - 2;
  S t = S::t(M), one = S::one(M);

  S term0 = t.scaled(Rational(12));
  S term1 = (one - t.scaled(Rational(2))) * B.truncated(M) * S::constant(M, Rational(6));
  // 2t(3 - 14t - 8t^2) B'
  S poly1 = S::constant(M, Rational(3)) - t.scaled(Rational(14)) - (t * t).scaled(Rational(8));
  S term2 = (poly1 * B1.truncated(M).shifted_t(1)).scaled(Rational(2));
  // t^2 (1+t)(1-8t) B''
  S poly2 = (one + t) * (one - t.scaled(Rational(8)));
  S term3 = poly2 * B2.shifted_t(2);
  return term0 - term1 - term2 - term3;
}

namespace {

// The coefficient identities connecting the smallest stars to the Baxter
// series, run for one source of complete generating functions.
void baxter_identity_block(CheckReport& rep, const std::string& tag, const S2& o01,
                           const S2& o10, const S2& o11, const S2& v11, int N) {
  S B = baxter_gf(N + 2);
  S inv1pt = invert(S::one(N) + S::t(N));

  S w01 = coeff_at(o01, 1, 0);
  S w10 = coeff_at(o10, 1, 0);
  S w11 = coeff_at(o11, 1, 1);
  S w11x = coeff_at(o11, 1, 0);
  S w11y = coeff_at(o11, 0, 1);
  S melon = coeff_at(v11, 1, 1);

  rep.add(expect_equal("near-watermelon series of the (0,1) start equals B/(1+t) " + tag,
                       w01, B.truncated(N) * inv1pt));

  S alt(N);  // alternating partial sums of the b_n
  Rational prev(0);
  for (int n = 1; n <= N; ++n) {
    prev = B.coeff(n) - prev;
    alt.set_coeff(n, prev);
  }
  rep.add(expect_equal("its coefficients are alternating partial sums of b " + tag, w01, alt));

  rep.add(expect_equal("(1,0) and (0,1) near-watermelons differ by 1/(1+t) " + tag, w10,
                       w01 + inv1pt));

  rep.add(expect_equal("watermelon counts are the shifted Baxter numbers " + tag,
                       B.truncated(N), melon.shifted_t(1)));

  rep.add(expect_equal("first-step split of the (0,1) near-watermelon " + tag, w01,
                       (w10 + w11x).shifted_t(1)));

  rep.add(expect_equal("last-step split of the (1,1) near-watermelon " + tag, w11x,
                       (w11y + w11).shifted_t(1)));

  rep.add(expect_equal("reflection symmetry of the (1,1) near-watermelons " + tag, w11y, w11x));

  S numer_e = (S::one(N + 2) - S::t(N + 2)) *
              ((S::one(N + 2) - S::t(N + 2)) * B - S::t(N + 2));
  S rhs_e = divide_by_t_power(numer_e, 2) * inv1pt;
  rep.add(expect_equal("osculating watermelons from B " + tag, w11, rhs_e));

  S numer_f = (S::one(N + 1) - S::t(N + 1)) * B.truncated(N + 1) - S::t(N + 1);
  S rhs_f = divide_by_t_power(numer_f, 1).truncated(N) * inv1pt;
  rep.add(expect_equal("(1,1) near-watermelons from B " + tag, w11x, rhs_f));
}

}  // namespace

CheckReport baxter_identities(int order) {
  CheckReport rep;
  rep.check_name = "baxter";
  rep.order = order;
  const int N = order;

  {
    auto gf = [&](int i, int j) {
      return complete_gf(enumerate_dp(WalkerSystem{3, {i, j}, Mode::Osculating}, N), N);
    };
    S2 v11 = complete_gf(enumerate_dp(WalkerSystem{3, {1, 1}, Mode::Vicious}, N), N);
    baxter_identity_block(rep, "(counted)", gf(0, 1), gf(1, 0), gf(1, 1), v11, N);
  }
  {
    baxter_identity_block(rep, "(assembled)", osculating_complete_gf(0, 1, N),
                          osculating_complete_gf(1, 0, N), osculating_complete_gf(1, 1, N),
                          vicious_complete_gf(1, 1, N), N);
  }
  return rep;
}

CheckReport two_walker_suite(int i, int order) {
  if (i < 0) throw std::invalid_argument("start gap must be nonnegative");
  CheckReport rep;
  rep.check_name = "two-walker";
  rep.i = i;
  rep.order = order;
  const int N = order;
  const UPoly u = UPoly::u();
  const UPoly one_u = UPoly(Rational(1));

  S X = solve_X(N + 2);
  auto table = [&](int gap, Mode m) {
    return enumerate_dp(WalkerSystem{2, {gap, 0}, m}, N);
  };
  SLu O = complete_gf_single_weighted(table(i, Mode::Osculating), N);
  SL W = complete_gf_single(table(i, Mode::QuasiVicious), N);
  SL W1 = complete_gf_single(table(i + 1, Mode::QuasiVicious), N);
  SL V = complete_gf_single(table(i, Mode::Vicious), N);
  SL V1 = complete_gf_single(table(i + 1, Mode::Vicious), N);

  S W0 = x_zero_part(W);
  S W10 = x_zero_part(W1);
  SU O0 = x_zero_part(O);

  SL xs = monomial_series<Rational>(N, 1);
  SL one_l = SL::one(N);
  // 1 - t(1+x)(1+1/x)
  SL kernel2 = one_l - ((one_l + xs) * (one_l + mirror(xs))).shifted_t(1);

  rep.add(expect_equal("separating the contact-free two-walker series", V,
                       W - as_laurent1(W0)));
  rep.add(expect_equal("separating the contact-free series, widened start", V1,
                       W1 - as_laurent1(W10)));

  rep.add(expect_equal("final-contact functional equation", kernel2 * V,
                       pow_series(xs, i) - as_laurent1(W0)));

  // Weighted pieces.
  SLu Ou = O;
  SLu xs_u = monomial_series<UPoly>(N, 1);
  SLu one_lu = SLu::one(N);
  SLu kernel2u = one_lu - ((one_lu + xs_u) * (one_lu + mirror(xs_u))).shifted_t(1);
  Laurent1<UPoly> split_mult;  // 2 + 1/x + x(1-u)
  split_mult.add_term(0, UPoly(Rational(2)));
  split_mult.add_term(-1, one_u);
  split_mult.add_term(1, one_u - u);
  rep.add(expect_equal(
      "contact-splitting functional equation", kernel2u * Ou,
      pow_series(xs_u, i) -
          (laurent1_const_series(N, split_mult) * as_laurent1(O0)).shifted_t(1)));

  S Xi = pow_series(X.truncated(N), i);
  rep.add(expect_equal("final-contact boundary value is a power of the kernel root", W0, Xi));

  SU Xu = promote_series<UPoly>(X.truncated(N));
  SU tuX = Xu.scaled_by(u).shifted_t(1);
  SU inv_1_tuX = invert(SU::one(N) - tuX);
  SU Xiu = promote_series<UPoly>(Xi);
  rep.add(expect_equal("contact-splitting boundary closed form", O0, Xiu * inv_1_tuX));

  {
    // Same value through the other printed route: X^{i+1} / (t((1+X)^2 - uX^2)).
    const int M = N + 1;
    SU XuM = promote_series<UPoly>(X.truncated(M));
    SU denom = (SU::one(M) + XuM) * (SU::one(M) + XuM) - (XuM * XuM).scaled_by(u);
    SU alt = divide_by_t_power(pow_series(XuM, i + 1) * invert(denom), 1);
    rep.add(expect_equal("equivalent form of the boundary closed form", O0, alt));
  }

  S one_s = S::one(N);
  S disc = one_s - S::t(N).scaled(Rational(4));  // 1 - 4t
  rep.add(expect_equal("vicious length series under the discriminant",
                       disc * eval_one(V), one_s - Xi));

  SU four_minus_u = SU::constant(N, UPoly(Rational(4)) - u);
  rep.add(expect_equal("osculating length series under the discriminant",
                       promote_series<UPoly>(disc) * eval_one(O),
                       SU::one(N) - four_minus_u * (Xiu * inv_1_tuX).shifted_t(1)));

  // (1-tuX)(1-u+2tu+tuX) = (1+ut)^2 - u.
  SU left_a = SU::one(N) - tuX;
  SU mid(N);
  mid.set_coeff(0, one_u - u);
  mid.set_coeff(1, u.scaled(Rational(2)));
  SU mid_full = mid + tuX;
  SU weight_denom(N);
  weight_denom.set_coeff(0, one_u - u);
  weight_denom.set_coeff(1, u.scaled(Rational(2)));
  weight_denom.set_coeff(2, u * u);
  rep.add(expect_equal("factoring the weight denominator", left_a * mid_full, weight_denom));

  rep.add(expect_equal("boundary recombination", weight_denom * O0,
                       mid * promote_series<UPoly>(W0) +
                           promote_series<UPoly>(W10).scaled_by(u).shifted_t(1)));

  {
    // ((1+ut)^2 - u) O_i(x) = x^i (1-u+2tu+xtu(1-u))
    //   + t (1+2x+x^2(1-u))/x ((1-u+2tu) V_i(x) + tu V_{i+1}(x)).
    SLu lhs = as_laurent1(weight_denom) * Ou;
    SLu head(N);
    head.set_coeff(0, Laurent1<UPoly>::monomial(i, one_u - u));
    Laurent1<UPoly> h1 = Laurent1<UPoly>::monomial(i, u.scaled(Rational(2))) +
                         Laurent1<UPoly>::monomial(i + 1, u * (one_u - u));
    head.set_coeff(1, h1);
    Laurent1<UPoly> bracket;  // (1+2x+x^2(1-u))/x
    bracket.add_term(-1, one_u);
    bracket.add_term(0, UPoly(Rational(2)));
    bracket.add_term(1, one_u - u);
    SLu vmix = as_laurent1(mid) * to_upoly_coeffs(V) +
               to_upoly_coeffs(V1).scaled_by(Laurent1<UPoly>(u)).shifted_t(1);
    SLu rhs = head + (laurent1_const_series(N, bracket) * vmix).shifted_t(1);
    rep.add(expect_equal("complete-series linear relation", lhs, rhs));
  }

  {
    // u = 1: (2+t) O_i(x) = 2x^i + t(1+2x)/x (2V_i(x) + V_{i+1}(x)).
    SL O1 = specialize_u(O, Rational(1));
    SL lhs = (SL::constant(N, Laurent1<Rational>(Rational(2))) + as_laurent1(S::t(N))) * O1;
    Laurent1<Rational> br;
    br.add_term(-1, Rational(1));
    br.add_term(0, Rational(2));
    SL rhs = laurent1_const_series(N, Laurent1<Rational>::monomial(i, Rational(2))) +
             (laurent1_const_series(N, br) * (V.scaled(Rational(2)) + V1)).shifted_t(1);
    rep.add(expect_equal("linear relation at unit weight", lhs, rhs));
  }

  rep.add(expect_equal("weight-free slice is the final-contact series",
                       specialize_u(O, Rational(0)), W));

  return rep;
}

}  // namespace osculate
