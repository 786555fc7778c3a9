#include "osculate/kernel_checks.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "osculate/closed_forms.hpp"
#include "osculate/enumerator.hpp"
#include "osculate/series_roots.hpp"

namespace osculate {

namespace {

using S = TruncSeries<Rational>;
using SU = TruncSeries<UPoly>;
using SL = TruncSeries<Laurent1<Rational>>;
using S2 = TruncSeries<Laurent2<Rational>>;
using S2u = TruncSeries<Laurent2<UPoly>>;

template <class C>
TruncSeries<C> pow_series(const TruncSeries<C>& b, int e) {
  TruncSeries<C> r = TruncSeries<C>::one(b.order());
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

void guard_start(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("start gaps must be nonnegative");
  if (i == 0 && j == 0)
    throw BadStart(
        "start (0,0) puts all three walkers on one site and admits only the "
        "empty walk; the boundary decompositions assume a separated pair");
}

template <typename C>
TruncSeries<Laurent2<C>> kernel_series_t(int order) {
  const C one = ring_traits<C>::one();
  TruncSeries<Laurent2<C>> k(order);
  k.set_coeff(0, Laurent2<C>::monomial(1, 1, one));
  if (order >= 1) {
    // -(1+x)(1+y)(x+y) expanded.
    Laurent2<C> m;
    for (auto [ex, ey] : {std::pair{1, 0}, {0, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}})
      m.add_term(ex, ey, -one);
    m.add_term(1, 1, -(one + one));
    k.set_coeff(1, m);
  }
  return k;
}

// Boundary series of a complete generating function: t(1+x) times the y = 0
// slice, and t(1+y) times the x = 0 slice.
template <typename C>
std::pair<TruncSeries<Laurent1<C>>, TruncSeries<Laurent1<C>>> boundary_series(
    const TruncSeries<Laurent2<C>>& o) {
  const int n = o.order();
  Laurent1<C> opx(ring_traits<C>::one());
  opx.add_term(1, ring_traits<C>::one());
  auto opx_s = laurent1_const_series(n, opx);
  return {(opx_s * at_y_zero(o)).shifted_t(1), (opx_s * at_x_zero(o)).shifted_t(1)};
}

CountTable walk_table(int walkers, int i, int j, Mode m, int n) {
  return enumerate_dp(WalkerSystem{walkers, {i, j}, m}, n);
}

// Cached nonnegative powers of one series. Backed by a deque so references
// handed out stay valid while later powers are still being grown inside the
// same expression.
class Powers {
 public:
  explicit Powers(SL base) : base_(std::move(base)) {
    pw_.push_back(SL::one(base_.order()));
  }
  const SL& operator()(int e) {
    while (static_cast<int>(pw_.size()) <= e) pw_.push_back(pw_.back() * base_);
    return pw_[static_cast<size_t>(e)];
  }

 private:
  SL base_;
  std::deque<SL> pw_;
};

// The three on-kernel products t X^i Y^j (1 + X + Y) for the framed orbit
// elements (x, Y0), (Y0/x, Y0) and (Y0/x, 1/x), each exact at order n.
struct FramedProducts {
  SL a, b, c;
};

FramedProducts framed_products(int i, int j, int n, Powers& y0) {
  SL one = SL::one(n);
  SL xs = monomial_series<Rational>(n, 1);
  SL xbar = mirror(xs);
  FramedProducts f{
      (monomial_series<Rational>(n, i) * y0(j) * (one + xs + y0(1))).shifted_t(1),
      (monomial_series<Rational>(n, -i) * y0(i + j) * (one + xbar * y0(1) + y0(1)))
          .shifted_t(1),
      (monomial_series<Rational>(n, -(i + j)) * y0(i) * (one + xbar + xbar * y0(1)))
          .shifted_t(1)};
  return f;
}

}  // namespace

TruncSeries<Laurent2<Rational>> kernel_series(int order) {
  return kernel_series_t<Rational>(order);
}

TruncSeries<Laurent2<UPoly>> kernel_series_weighted(int order) {
  return kernel_series_t<UPoly>(order);
}

CheckReport check_main_equation(int i, int j, int order) {
  guard_start(i, j);
  CheckReport rep;
  rep.check_name = "main-eq";
  rep.i = i;
  rep.j = j;
  rep.order = order;
  const int n = order;

  S2 o = complete_gf(walk_table(3, i, j, Mode::Osculating, n), n);
  auto [p, q] = boundary_series(o);
  Laurent2<Rational> pref;  // x + y + xy
  pref.add_term(1, 0, Rational(1));
  pref.add_term(0, 1, Rational(1));
  pref.add_term(1, 1, Rational(1));
  S2 rhs = S2::constant(n, Laurent2<Rational>::monomial(i + 1, j + 1, Rational(1))) -
           S2::constant(n, pref) * (embed_x(p) + embed_y(q));
  rep.add(expect_equal("kernel annihilates the complete series up to boundary terms",
                       kernel_series(n) * o, rhs));
  return rep;
}

namespace {

// Orbit elements are pairs of monomials x^a Y0^b, closed under the two
// reflections (X, Y) -> (Y/X, Y) and (X, Y) -> (X, X/Y).
struct OrbitMono {
  int a = 0, b = 0;
  bool operator==(const OrbitMono&) const = default;
};
struct OrbitPair {
  OrbitMono x, y;
  bool operator==(const OrbitPair&) const = default;
};

OrbitPair reflect_first(const OrbitPair& e) {
  return {{e.y.a - e.x.a, e.y.b - e.x.b}, e.y};
}
OrbitPair reflect_second(const OrbitPair& e) {
  return {e.x, {e.x.a - e.y.a, e.x.b - e.y.b}};
}

// K(X, Y) as monomials in X and Y with a t-degree: XY - t(X + Y + X^2 + 2XY
// + Y^2 + X^2 Y + X Y^2).
struct KernelTerm {
  int p, q, tdeg, coeff;
};
constexpr KernelTerm kKernelTerms[] = {{1, 1, 0, 1},  {1, 0, 1, -1}, {0, 1, 1, -1},
                                       {2, 0, 1, -1}, {0, 2, 1, -1}, {2, 1, 1, -1},
                                       {1, 2, 1, -1}, {1, 1, 1, -2}};

}  // namespace

CheckReport check_orbit(int order) {
  CheckReport rep;
  rep.check_name = "orbit";
  rep.order = order;
  const int n = order;

  OrbitPair start{{1, 0}, {0, 1}};  // (x, Y0)
  std::vector<OrbitPair> orbit{start};
  for (int k = 1; k < 6; ++k)
    orbit.push_back(k % 2 == 1 ? reflect_first(orbit.back())
                               : reflect_second(orbit.back()));

  bool involutive = true;
  for (const auto& e : orbit) {
    involutive = involutive && reflect_first(reflect_first(e)) == e &&
                 reflect_second(reflect_second(e)) == e;
  }
  rep.add(IdentityReport{"both reflections are involutions", 0, involutive, {}});
  rep.add(IdentityReport{"alternating reflections close after six elements", 0,
                         reflect_second(orbit.back()) == start, {}});
  bool distinct = true;
  for (size_t a = 0; a < orbit.size(); ++a)
    for (size_t b = a + 1; b < orbit.size(); ++b)
      if (orbit[a] == orbit[b]) distinct = false;
  rep.add(IdentityReport{"the six orbit elements are distinct", 0, distinct, {}});

  Powers y0(solve_Y0(n));
  for (size_t k = 0; k < orbit.size(); ++k) {
    const auto& e = orbit[k];
    int min_b = 0;
    for (const auto& t : kKernelTerms)
      min_b = std::min(min_b, t.p * e.x.b + t.q * e.y.b);
    // Clear negative powers of Y0 by multiplying the whole identity by
    // Y0^(-min_b); the residual must still vanish identically.
    SL acc(n);
    for (const auto& t : kKernelTerms) {
      int a = t.p * e.x.a + t.q * e.y.a;
      int b = t.p * e.x.b + t.q * e.y.b - min_b;
      SL piece = monomial_series<Rational>(n, a) * y0(b);
      if (t.tdeg) piece = piece.shifted_t(t.tdeg);
      acc += piece.scaled(Rational(t.coeff));
    }
    rep.add(expect_zero("kernel vanishes on orbit element " + std::to_string(k), acc));
  }

  // The small root solves the kernel quadratic directly...
  SL one = SL::one(n), xs = monomial_series<Rational>(n, 1);
  SL direct = xs * y0(1) - ((one + xs) * (one + y0(1)) * (xs + y0(1))).shifted_t(1);
  rep.add(expect_zero("small root satisfies the kernel quadratic", direct));
  // ...and so does x/Y0, by the product-of-roots relation: substituting it
  // and clearing Y0^2 leaves x^2 a + x Y0 b + Y0^2 c with the quadratic's own
  // coefficients a, b, c.
  SL x2 = monomial_series<Rational>(n, 2), x3 = monomial_series<Rational>(n, 3);
  SL vieta = x2 * y0(1) - ((x2 + x3) + (xs + x2.scaled(Rational(2)) + x3) * y0(1) +
                           (xs + x2) * y0(2))
                              .shifted_t(1);
  rep.add(expect_zero("reflected root x over Y0 satisfies the kernel quadratic", vieta));
  return rep;
}

CheckReport check_framed_system(int i, int j, int order_univariate) {
  guard_start(i, j);
  CheckReport rep;
  rep.check_name = "framed-system";
  rep.i = i;
  rep.j = j;
  rep.order = order_univariate;
  const int n = order_univariate;

  auto tbl = walk_table(3, i, j, Mode::Osculating, n);
  S2 o = complete_gf(tbl, n);
  auto [p, q] = boundary_series(o);

  Powers y0(solve_Y0(n));
  SL one = SL::one(n), xs = monomial_series<Rational>(n, 1);
  SL xbar = mirror(xs);
  SL q_y0 = substitute(q, y0(1));
  SL p_xbar_y0 = substitute(p, xbar * y0(1));
  SL q_xbar = mirror(q);

  SL denom_a = xs + y0(1) + xs * y0(1);
  SL inv_a = invert(denom_a);
  rep.add(expect_equal("first framed equation", p + q_y0,
                       monomial_series<Rational>(n, i + 1) * y0(j + 1) * inv_a));
  rep.add(expect_equal("second framed equation", (p_xbar_y0 + q_y0) * (one + xs + y0(1)),
                       monomial_series<Rational>(n, -i) * y0(i + j + 1)));
  rep.add(expect_equal("third framed equation", p_xbar_y0 + q_xbar,
                       monomial_series<Rational>(n, -(i + j)) * y0(i + 1) * inv_a));

  // On the kernel, 1/(X + Y + XY) = t(1 + X + Y)/((1+t) XY), which turns each
  // equation into a division-free product form.
  SL onept = as_laurent1(S::one(n) + S::t(n));
  auto f = framed_products(i, j, n, y0);
  rep.add(expect_equal("first framed equation, product form", (p + q_y0) * onept, f.a));
  rep.add(expect_equal("second framed equation, product form",
                       (p_xbar_y0 + q_y0) * onept, f.b));
  rep.add(expect_equal("third framed equation, product form",
                       (p_xbar_y0 + q_xbar) * onept, f.c));
  rep.add(expect_equal("combined boundary equation", (p + q_xbar) * onept,
                       f.a - f.b + f.c));

  // x = 1 collapses Y0 to T and the system to scalar series.
  S t_root = solve_T(n);
  S sone = S::one(n);
  S inv_12t = invert(sone + t_root.scaled(Rational(2)));
  S inv_2t = invert(S::constant(n, Rational(2)) + t_root);
  S sum1 = eval_one(p) + eval_one(q);
  S rhs1 = pow_series(t_root, j + 1) * inv_12t - pow_series(t_root, i + j + 1) * inv_2t +
           pow_series(t_root, i + 1) * inv_12t;
  rep.add(expect_equal("boundary values at x equal to one", sum1, rhs1));
  rep.add(expect_equal("length series from the boundary values",
                       (sone - S::t(n).scaled(Rational(8))) * length_series(tbl, n),
                       sone - sum1.scaled(Rational(3))));
  return rep;
}

CheckReport check_boundary_reconstruction(int i, int j, int order,
                                          int order_univariate) {
  guard_start(i, j);
  CheckReport rep;
  rep.check_name = "boundary";
  rep.i = i;
  rep.j = j;
  rep.order = order;
  const int nu = order_univariate;
  const int n = order;

  auto tbl = walk_table(3, i, j, Mode::Osculating, nu);
  S2 o = complete_gf(tbl, nu);
  auto [p_cnt, q_cnt] = boundary_series(o);
  rep.add(expect_zero("origin slice of the first boundary series", x_zero_part(p_cnt)));
  rep.add(expect_zero("origin slice of the second boundary series", x_zero_part(q_cnt)));

  Powers y0(solve_Y0(nu));
  auto f = framed_products(i, j, nu, y0);
  SL r = (f.a - f.b + f.c) * as_laurent1(invert(S::one(nu) + S::t(nu)));

  bool splits = true;
  SL p_rec(nu), q_rec(nu);
  try {
    auto [pos, neg] = split_signed(r);
    p_rec = pos;
    q_rec = mirror(neg);
  } catch (const NonzeroConstantPart&) {
    splits = false;
  }
  rep.add(IdentityReport{"combined boundary equation splits by exponent sign", nu,
                         splits, {}});
  if (!splits) return rep;

  rep.add(expect_equal("positive part recovers the first boundary series", p_rec, p_cnt));
  rep.add(expect_equal("mirrored negative part recovers the second boundary series",
                       q_rec, q_cnt));

  // Full circle: feed the reconstructed boundary back through the functional
  // equation and divide by the kernel.
  Laurent2<Rational> pref;
  pref.add_term(1, 0, Rational(1));
  pref.add_term(0, 1, Rational(1));
  pref.add_term(1, 1, Rational(1));
  S2 rhs = S2::constant(n, Laurent2<Rational>::monomial(i + 1, j + 1, Rational(1))) -
           S2::constant(n, pref) *
               (embed_x(p_rec.truncated(n)) + embed_y(q_rec.truncated(n)));
  bool polynomial = true;
  S2 o_rec = rhs * invert(kernel_series(n));
  try {
    require_polynomial(o_rec, "reconstructed complete series");
  } catch (const NegativeExponentSurvived&) {
    polynomial = false;
  }
  rep.add(IdentityReport{"reconstructed complete series stays polynomial", n,
                         polynomial, {}});
  rep.add(expect_equal("complete series rebuilt from the reconstructed boundary",
                       o_rec, o.truncated(n)));
  return rep;
}

CheckReport check_quasivicious(int i, int j, int order, int order_univariate) {
  guard_start(i, j);
  CheckReport rep;
  rep.check_name = "quasivicious";
  rep.i = i;
  rep.j = j;
  rep.order = order;
  const int nu = order_univariate;
  const int n = order;

  S2 w = complete_gf(walk_table(3, i, j, Mode::QuasiVicious, nu), nu);
  S2 v = complete_gf(walk_table(3, i, j, Mode::Vicious, nu), nu);
  SL wx0 = at_y_zero(w), w0y = at_x_zero(w);

  rep.add(expect_equal("contact-free series from the first-touch slices",
                       v.truncated(n),
                       w.truncated(n) - embed_x(wx0.truncated(n)) -
                           embed_y(w0y.truncated(n))));

  S2 rhs = S2::constant(n, Laurent2<Rational>::monomial(i + 1, j + 1, Rational(1))) -
           S2::constant(n, Laurent2<Rational>::monomial(1, 1, Rational(1))) *
               (embed_x(wx0.truncated(n)) + embed_y(w0y.truncated(n)));
  rep.add(expect_equal("first-touch functional equation",
                       kernel_series(n) * v.truncated(n), rhs));

  Powers y0(solve_Y0(nu));
  SL rhs_u = monomial_series<Rational>(nu, i) * y0(j) -
             monomial_series<Rational>(nu, -i) * y0(i + j) +
             monomial_series<Rational>(nu, -(i + j)) * y0(i);
  rep.add(expect_equal("first-touch boundary equation", wx0 + mirror(w0y), rhs_u));
  rep.add(expect_zero("origin slice of the boundary equation", x_zero_part(rhs_u)));

  bool splits = true;
  SL pos(nu), neg(nu);
  try {
    std::tie(pos, neg) = split_signed(rhs_u);
  } catch (const NonzeroConstantPart&) {
    splits = false;
  }
  rep.add(IdentityReport{"boundary equation splits by exponent sign", nu, splits, {}});
  if (splits) {
    rep.add(expect_equal("positive part is the y = 0 slice", pos, wx0));
    rep.add(expect_equal("mirrored negative part is the x = 0 slice", mirror(neg), w0y));
  }

  S t_root = solve_T(nu);
  rep.add(expect_equal("boundary equation at x equal to one",
                       eval_one(wx0) + eval_one(w0y),
                       pow_series(t_root, j) - pow_series(t_root, i + j) +
                           pow_series(t_root, i)));
  return rep;
}

CheckReport check_refined_equation(int i, int j, int order) {
  guard_start(i, j);
  CheckReport rep;
  rep.check_name = "refined";
  rep.i = i;
  rep.j = j;
  rep.order = order;
  const int n = order;
  const UPoly u = UPoly::u();
  const UPoly one_u = UPoly(Rational(1));

  auto tbl = walk_table(3, i, j, Mode::Osculating, n);
  S2u o = complete_gf_weighted(tbl, n);
  auto [p, q] = boundary_series(o);

  // Steps that leave a touching pair together carry weight u, which shifts
  // one unit of each boundary corrector onto the square terms.
  Laurent2<UPoly> pref_p, pref_q;
  for (auto [ex, ey] : {std::pair{1, 0}, {0, 1}, {1, 1}}) {
    pref_p.add_term(ex, ey, one_u);
    pref_q.add_term(ex, ey, one_u);
  }
  pref_p.add_term(0, 2, one_u - u);
  pref_q.add_term(2, 0, one_u - u);

  S2u rhs = S2u::constant(n, Laurent2<UPoly>::monomial(i + 1, j + 1, one_u)) -
            S2u::constant(n, pref_p) * embed_x(p) -
            S2u::constant(n, pref_q) * embed_y(q);
  rep.add(expect_equal("contact-weighted transfer identity",
                       kernel_series_weighted(n) * o, rhs));

  SU t_root = promote_series<UPoly>(solve_T(n));
  SU sone = SU::one(n);
  SU opt = sone + t_root;
  SU d1 = opt * opt - (t_root * t_root).scaled_by(u);
  SU d2 = opt.scaled(Rational(2)) - t_root.scaled_by(u);
  SU num_mid = SU::constant(n, UPoly(Rational(2)) - u) + t_root.scaled(Rational(2));
  SU sum1 = eval_one(p) + eval_one(q);
  rep.add(expect_equal("boundary values at x equal to one", sum1 * d1 * d2,
                       (pow_series(t_root, j + 1) + pow_series(t_root, i + 1)) * d2 -
                           pow_series(t_root, i + j + 1) * num_mid));

  SU disc = promote_series<UPoly>(S::one(n) - S::t(n).scaled(Rational(8)));
  SU four_minus_u = SU::constant(n, UPoly(Rational(4)) - u);
  rep.add(expect_equal("weighted length series from the boundary values",
                       disc * length_series_weighted(tbl, n),
                       sone - four_minus_u * sum1));
  return rep;
}

CheckReport check_length_closed_forms(int i, int j, int order) {
  guard_start(i, j);
  CheckReport rep;
  rep.check_name = "prop1";
  rep.i = i;
  rep.j = j;
  rep.order = order;
  const int n = order;

  auto tbl_o = walk_table(3, i, j, Mode::Osculating, n);
  auto tbl_v = walk_table(3, i, j, Mode::Vicious, n);
  rep.add(expect_equal("touch-and-go length series closed form",
                       length_series(tbl_o, n), osculating_length_gf(i, j, n)));
  if (i == 1 && j == 1)
    rep.add(expect_equal("radical form of the unit-start length series",
                         osculating_length_radical_11(n), length_series(tbl_o, n)));
  rep.add(expect_equal("contact-free length series closed form",
                       length_series(tbl_v, n), vicious_length_gf(i, j, n)));

  S t_root = solve_T(n);
  S sone = S::one(n);
  S disc = sone - S::t(n).scaled(Rational(8));
  S opt = sone + t_root, omt = sone - t_root;
  rep.add(expect_equal("discriminant factors through the root", disc * opt * opt,
                       omt * omt));
  S root_quot = divide_by_t_power(solve_T(n + 1), 1);  // T/t, exact at order n
  rep.add(expect_equal("discriminant from the root quotient",
                       omt * omt * invert(root_quot).scaled(Rational(2)), disc));
  rep.add(expect_equal("unit-start contact-free series as the root quotient",
                       root_quot.scaled(Rational(1, 2)), vicious_length_gf(1, 1, n)));
  rep.add(expect_equal("unit-start contact-free series as the squared factor",
                       opt * opt, vicious_length_gf(1, 1, n)));
  return rep;
}

CheckReport check_complete_assembly(int i, int j, int order) {
  guard_start(i, j);
  CheckReport rep;
  rep.check_name = "prop2";
  rep.i = i;
  rep.j = j;
  rep.order = order;
  const int n = order;

  S2 o = complete_gf(walk_table(3, i, j, Mode::Osculating, n), n);
  S2 vs = complete_gf(walk_table(3, i, j, Mode::Vicious, n), n) +
          complete_gf(walk_table(3, i + 1, j, Mode::Vicious, n), n) +
          complete_gf(walk_table(3, i, j + 1, Mode::Vicious, n), n);
  Laurent2<Rational> pref;  // (x + y + xy)/(xy)
  pref.add_term(-1, 0, Rational(1));
  pref.add_term(0, -1, Rational(1));
  pref.add_term(0, 0, Rational(1));
  S2 onept2 = as_laurent2(S::one(n) + S::t(n));
  rep.add(expect_equal(
      "one-step contact decomposition", o * onept2,
      S2::constant(n, Laurent2<Rational>::monomial(i, j, Rational(1))) +
          (S2::constant(n, pref) * vs).shifted_t(1)));

  auto [p, q] = boundary_series(o);
  S2 w_ij = complete_gf(walk_table(3, i, j, Mode::QuasiVicious, n), n);
  S2 w_i1j = complete_gf(walk_table(3, i + 1, j, Mode::QuasiVicious, n), n);
  S2 w_ij1 = complete_gf(walk_table(3, i, j + 1, Mode::QuasiVicious, n), n);
  SL onept1 = as_laurent1(S::one(n) + S::t(n));
  rep.add(expect_equal(
      "first boundary series from first-touch slices", p * onept1,
      (at_y_zero(w_ij) + at_y_zero(w_i1j) + at_y_zero(w_ij1)).shifted_t(1)));
  rep.add(expect_equal(
      "second boundary series from first-touch slices", q * onept1,
      (at_x_zero(w_ij) + at_x_zero(w_i1j) + at_x_zero(w_ij1)).shifted_t(1)));

  rep.add(expect_equal("assembled complete series matches the enumeration",
                       osculating_complete_gf(i, j, n), o));
  return rep;
}

CheckReport check_refined_closed_form(int i, int j, int order) {
  guard_start(i, j);
  CheckReport rep;
  rep.check_name = "prop3";
  rep.i = i;
  rep.j = j;
  rep.order = order;
  const int n = order;

  auto tbl = walk_table(3, i, j, Mode::Osculating, n);
  SU closed = osculation_refined_gf(i, j, n);
  rep.add(expect_equal("contact-weighted length series closed form",
                       length_series_weighted(tbl, n), closed));
  rep.add(expect_equal("unit weight collapses to the plain length series",
                       specialize_u(closed, Rational(1)),
                       osculating_length_gf(i, j, n)));
  rep.add(expect_equal("zero weight keeps walks with no early contact",
                       specialize_u(closed, Rational(0)),
                       length_series(walk_table(3, i, j, Mode::QuasiVicious, n), n)));
  return rep;
}

CheckReport check_determinant_counts(int i, int j, int n_max) {
  if (i < 0 || j < 0) throw std::invalid_argument("start gaps must be nonnegative");
  CheckReport rep;
  rep.check_name = "gv";
  rep.i = i;
  rep.j = j;
  rep.order = n_max;

  auto abs = enumerate_dp_absolute(WalkerSystem{3, {i, j}, Mode::Vicious}, n_max);
  IdentityReport pointwise{"determinant table matches the endpoint-resolved counts",
                           n_max, true, {}};
  // The margin of two beyond the reachable window checks that the determinant
  // vanishes where no walk can end.
  for (int n = 0; n <= n_max && pointwise.residual_zero; ++n)
    for (int r = 0; r <= n && pointwise.residual_zero; ++r)
      for (int k = 0; k <= i + n + 2 && pointwise.residual_zero; ++k)
        for (int l = 0; l <= j + n + 2; ++l) {
          BigInt det = gv_determinant(i, j, k, l, r, n);
          BigInt cnt = abs.at(n, r, k, l);
          if (det != cnt) {
            pointwise.residual_zero = false;
            FailurePoint fp;
            fp.t_power = n;
            fp.x_exp = k;
            fp.y_exp = l;
            fp.value = "r=" + std::to_string(r) + ": determinant " + det.str() +
                       " vs count " + cnt.str();
            pointwise.first_nonzero = fp;
            break;
          }
        }
  rep.add(pointwise);

  rep.add(expect_equal("summed determinants match the length series",
                       eval_one_one(vicious_complete_gf(i, j, n_max)),
                       length_series(walk_table(3, i, j, Mode::Vicious, n_max), n_max)));
  return rep;
}

CheckReport baxter_ode_check(int order) {
  if (order < 4)
    throw std::invalid_argument("need order >= 4 to exercise the differential equation");
  CheckReport rep;
  rep.check_name = "ode";
  rep.order = order;

  S b = baxter_gf(order);
  rep.add(expect_zero("differential equation residual", baxter_ode_residual(b)));

  // Rebuild the series from enumerated touch-and-go watermelons and check the
  // reconstruction satisfies the same equation.
  const int m = order - 2;
  S w11 = coeff_at(complete_gf(walk_table(3, 1, 1, Mode::Osculating, m), m), 1, 1);
  S t = S::t(order), one = S::one(order);
  S omt = one - t;
  S b_rec = w11.padded_to(order).shifted_t(2) * (one + t) * invert(omt * omt) +
            t * invert(omt);
  rep.add(expect_equal("series rebuilt from enumerated watermelons", b_rec, b));
  rep.add(expect_zero("differential equation residual of the rebuilt series",
                      baxter_ode_residual(b_rec)));
  return rep;
}

}  // namespace osculate
