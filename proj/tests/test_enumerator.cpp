#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "osculate/enumerator.hpp"
#include "osculate/series_roots.hpp"

using namespace osculate;

namespace {

const std::vector<Mode> kAllModes = {Mode::NonCrossing, Mode::Osculating, Mode::Vicious,
                                     Mode::QuasiVicious};

std::vector<std::array<int, 2>> sorted_deltas(const std::vector<StepOption>& opts) {
  std::vector<std::array<int, 2>> ds;
  for (const auto& o : opts) ds.push_back(o.delta);
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Sum a gap table over the contact statistic: (n,g1,g2) -> count.
std::map<std::array<int, 3>, BigInt> gap_marginal(const CountTable& t) {
  std::map<std::array<int, 3>, BigInt> out;
  for (const auto& [k, c] : t.cells()) out[{k[0], k[1], k[2]}] += c;
  return out;
}

// Sum an endpoint table over r the same way.
std::map<std::array<int, 3>, BigInt> end_marginal(const AbsoluteCountTable& t) {
  std::map<std::array<int, 3>, BigInt> out;
  for (const auto& [k, c] : t.cells()) out[{k[0], k[2], k[3]}] += c;
  return out;
}

}  // namespace

TEST_CASE("system validation") {
  CHECK_THROWS_AS(validate(WalkerSystem{4, {1, 1}, Mode::Osculating}), std::invalid_argument);
  CHECK_THROWS_AS(validate(WalkerSystem{3, {-1, 1}, Mode::Osculating}), std::invalid_argument);
  CHECK_NOTHROW(validate(WalkerSystem{2, {0, -5}, Mode::Vicious}));  // g2 unused for 2 walkers

  CHECK(start_is_enumerable(WalkerSystem{3, {1, 1}, Mode::Vicious}));
  CHECK_FALSE(start_is_enumerable(WalkerSystem{3, {0, 1}, Mode::Vicious}));
  CHECK(start_is_enumerable(WalkerSystem{3, {0, 1}, Mode::QuasiVicious}));
  CHECK_FALSE(start_is_enumerable(WalkerSystem{2, {0, 0}, Mode::Vicious}));
}

TEST_CASE("legal step counts from small states") {
  // Away from contacts all 2^3 step vectors are fine.
  CHECK(legal_steps({1, 1}, 3, Mode::NonCrossing).size() == 8);
  CHECK(legal_steps({1, 1}, 3, Mode::Osculating).size() == 8);
  // Strict ordering kills the four steps that close a unit gap.
  CHECK(legal_steps({1, 1}, 3, Mode::Vicious).size() == 4);
  CHECK(legal_steps({1, 1}, 3, Mode::QuasiVicious).size() == 4);
  // A contact in osculating mode must split: only the two gap-opening steps.
  CHECK(legal_steps({0, 1}, 3, Mode::Osculating).size() == 2);
  CHECK(legal_steps({1, 0}, 3, Mode::Osculating).size() == 2);
  // Triple contact cannot split (no step opens both gaps), so it is stuck.
  CHECK(legal_steps({0, 0}, 3, Mode::Osculating).empty());
  CHECK(legal_steps({0, 0}, 3, Mode::NonCrossing).size() == 4);

  CHECK(legal_steps({1, 0}, 2, Mode::Osculating).size() == 4);
  CHECK(legal_steps({0, 0}, 2, Mode::Osculating).size() == 1);
  CHECK(legal_steps({1, 0}, 2, Mode::Vicious).size() == 3);

  CHECK_THROWS_AS(legal_steps({1, 1}, 4, Mode::Osculating), std::invalid_argument);
}

TEST_CASE("step deltas and contact flag") {
  auto all = sorted_deltas(legal_steps({1, 1}, 3, Mode::NonCrossing));
  std::vector<std::array<int, 2>> expect = {{-1, 0}, {-1, 1}, {0, -1}, {0, 0},
                                            {0, 0},  {0, 1},  {1, -1}, {1, 0}};
  std::sort(expect.begin(), expect.end());
  CHECK(all == expect);

  for (const auto& o : legal_steps({1, 1}, 3, Mode::Osculating)) CHECK_FALSE(o.departs_contact);
  auto from_contact = legal_steps({0, 1}, 3, Mode::Osculating);
  for (const auto& o : from_contact) {
    CHECK(o.departs_contact);
    CHECK(o.delta[0] == 1);  // the touching pair opens
  }
}

TEST_CASE("dynamic programming agrees with exhaustive generation") {
  for (Mode mode : kAllModes)
    for (std::array<int, 2> start : {std::array<int, 2>{1, 1}, {0, 1}, {1, 0}, {2, 2}, {0, 0}}) {
      WalkerSystem sys{3, start, mode};
      CAPTURE(to_string(mode));
      CAPTURE(start[0]);
      CAPTURE(start[1]);
      CHECK(enumerate_dp(sys, 6) == enumerate_naive(sys, 6));
    }
  for (Mode mode : kAllModes)
    for (int g : {0, 1, 2}) {
      WalkerSystem sys{2, {g, 0}, mode};
      CAPTURE(to_string(mode));
      CAPTURE(g);
      CHECK(enumerate_dp(sys, 8) == enumerate_naive(sys, 8));
    }
}

TEST_CASE("threaded DP is identical to sequential") {
  for (Mode mode : kAllModes) {
    WalkerSystem sys{3, {1, 1}, mode};
    CHECK(enumerate_dp(sys, 9, 3) == enumerate_dp(sys, 9, 1));
  }
}

TEST_CASE("frozen totals for the unit-gap start") {
  // Counted by hand from the step table: 8 successors of (1,1); their own
  // step counts are 8,8,8,8,2,2,2,2 summing to 40.
  CountTable osc = enumerate_dp(WalkerSystem{3, {1, 1}, Mode::Osculating}, 3);
  CHECK(osc.total(0) == 1);
  CHECK(osc.total(1) == 8);
  CHECK(osc.total(2) == 40);

  // Vicious: successors (1,1),(1,1),(1,2),(2,1) with 4,4,6,6 continuations.
  CountTable vic = enumerate_dp(WalkerSystem{3, {1, 1}, Mode::Vicious}, 3);
  CHECK(vic.total(0) == 1);
  CHECK(vic.total(1) == 4);
  CHECK(vic.total(2) == 20);
}

TEST_CASE("vicious length counts follow T") {
  // The canonical identity: the vicious unit-gap length series is T/(2t),
  // i.e. coefficient n equals 2^n Cat(n+1).
  const int N = 8;
  CountTable vic = enumerate_dp(WalkerSystem{3, {1, 1}, Mode::Vicious}, N);
  TruncSeries<Rational> got = length_series(vic, N);
  TruncSeries<Rational> expect = divide_by_t_power(solve_T(N + 1), 1).scaled(Rational(1, 2));
  CHECK(got == expect);
  CHECK(got.coeff(3) == 112);
  CHECK(got.coeff(4) == 672);
}

TEST_CASE("a vicious system starting at a contact has no configurations") {
  WalkerSystem sys{3, {0, 1}, Mode::Vicious};
  CHECK(enumerate_dp(sys, 4).cells().empty());
  CHECK(enumerate_naive(sys, 4).cells().empty());
  CHECK(enumerate_dp_absolute(sys, 4).cells().empty());
}

TEST_CASE("a contact-at-the-end system starting at a contact stops immediately") {
  WalkerSystem sys{3, {0, 1}, Mode::QuasiVicious};
  CountTable t = enumerate_dp(sys, 4);
  CHECK(t.cells().size() == 1);
  CHECK(t.at(0, 0, 1, 0) == 1);
  CHECK(enumerate_naive(sys, 4) == t);
}

TEST_CASE("reflection symmetry swaps the two gaps") {
  for (Mode mode : kAllModes) {
    CountTable a = enumerate_dp(WalkerSystem{3, {1, 2}, mode}, 5);
    CountTable b = enumerate_dp(WalkerSystem{3, {2, 1}, mode}, 5);
    for (const auto& [k, c] : a.cells()) CHECK(b.at(k[0], k[2], k[1], k[3]) == c);
    for (const auto& [k, c] : b.cells()) CHECK(a.at(k[0], k[2], k[1], k[3]) == c);
  }
}

TEST_CASE("mode containments cell by cell") {
  const int N = 6;
  CountTable nc = enumerate_dp(WalkerSystem{3, {1, 1}, Mode::NonCrossing}, N);
  CountTable os = enumerate_dp(WalkerSystem{3, {1, 1}, Mode::Osculating}, N);
  CountTable qv = enumerate_dp(WalkerSystem{3, {1, 1}, Mode::QuasiVicious}, N);
  CountTable vi = enumerate_dp(WalkerSystem{3, {1, 1}, Mode::Vicious}, N);

  auto m_nc = gap_marginal(nc), m_os = gap_marginal(os), m_qv = gap_marginal(qv),
       m_vi = gap_marginal(vi);
  for (const auto& [k, c] : m_vi) {
    CHECK(c <= m_qv[k]);
    CHECK(m_qv[k] <= m_os[k]);
    CHECK(m_os[k] <= m_nc[k]);
  }

  // Contact-free configurations are exactly the contact-at-the-end ones.
  for (const auto& [k, c] : qv.cells()) {
    CHECK(k[3] == 0);
    CHECK(os.at(k[0], k[1], k[2], 0) == c);
  }
  for (const auto& [k, c] : os.cells())
    if (k[3] == 0) CHECK(qv.at(k[0], k[1], k[2], 0) == c);

  // ... and those that also end contact-free are exactly the vicious ones.
  for (const auto& [k, c] : qv.cells())
    if (k[1] > 0 && k[2] > 0) CHECK(vi.at(k[0], k[1], k[2], 0) == c);
  for (const auto& [k, c] : vi.cells()) CHECK(qv.at(k[0], k[1], k[2], k[3]) == c);
}

TEST_CASE("endpoint-resolved tables") {
  for (Mode mode : kAllModes) {
    WalkerSystem sys{3, {1, 1}, mode};
    AbsoluteCountTable abs_dp = enumerate_dp_absolute(sys, 6);
    CHECK(abs_dp == enumerate_naive_absolute(sys, 6));
    // Forgetting r must reproduce the gap table with contacts summed out.
    CHECK(end_marginal(abs_dp) == gap_marginal(enumerate_dp(sys, 6)));
  }
  WalkerSystem two{2, {1, 0}, Mode::Vicious};
  CHECK(enumerate_dp_absolute(two, 8) == enumerate_naive_absolute(two, 8));
}

TEST_CASE("three-walker generating function views") {
  const int N = 4;
  CountTable os = enumerate_dp(WalkerSystem{3, {1, 1}, Mode::Osculating}, N);
  auto gf = complete_gf(os, N);

  Laurent2<Rational> c0;
  c0.add_term(1, 1, Rational(1));
  CHECK(gf.coeff(0) == c0);

  Laurent2<Rational> c1;  // the eight length-1 endpoints, two of them equal
  c1.add_term(1, 1, Rational(2));
  c1.add_term(1, 2, Rational(1));
  c1.add_term(2, 0, Rational(1));
  c1.add_term(2, 1, Rational(1));
  c1.add_term(0, 1, Rational(1));
  c1.add_term(0, 2, Rational(1));
  c1.add_term(1, 0, Rational(1));
  CHECK(gf.coeff(1) == c1);

  CHECK(eval_one_one(gf) == length_series(os, N));

  // The contact-weighted view collapses correctly at u = 1 and u = 0.
  auto wgf = complete_gf_weighted(os, N);
  CHECK(specialize_u(wgf, Rational(1)) == gf);
  CountTable qv = enumerate_dp(WalkerSystem{3, {1, 1}, Mode::QuasiVicious}, N);
  CHECK(specialize_u(wgf, Rational(0)) == complete_gf(qv, N));

  CHECK(specialize_u(length_series_weighted(os, N), Rational(1)) == length_series(os, N));

  CHECK_THROWS_AS(complete_gf(os, N + 1), std::invalid_argument);
  CountTable two = enumerate_dp(WalkerSystem{2, {1, 0}, Mode::Osculating}, N);
  CHECK_THROWS_AS(complete_gf(two, N), std::invalid_argument);
  CHECK_THROWS_AS(complete_gf_single(os, N), std::invalid_argument);
}

TEST_CASE("two-walker generating function views") {
  const int N = 6;
  CountTable os = enumerate_dp(WalkerSystem{2, {1, 0}, Mode::Osculating}, N);
  auto gf = complete_gf_single(os, N);
  CHECK(gf.coeff(0) == Laurent1<Rational>::monomial(1, Rational(1)));
  // Length-1 endpoints from gap 1: deltas 0,0,+1,-1.
  Laurent1<Rational> c1;
  c1.add_term(1, Rational(2));
  c1.add_term(2, Rational(1));
  c1.add_term(0, Rational(1));
  CHECK(gf.coeff(1) == c1);
  CHECK(eval_one(gf) == length_series(os, N));

  auto wgf = complete_gf_single_weighted(os, N);
  CHECK(specialize_u(wgf, Rational(1)) == gf);
  CountTable qv = enumerate_dp(WalkerSystem{2, {1, 0}, Mode::QuasiVicious}, N);
  CHECK(specialize_u(wgf, Rational(0)) == complete_gf_single(qv, N));
}

TEST_CASE("naive enumeration rejects lengths past its cap") {
  CHECK_THROWS_AS(enumerate_naive(WalkerSystem{3, {1, 1}, Mode::Osculating}, 11),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_naive_absolute(WalkerSystem{2, {1, 0}, Mode::Osculating}, 15),
                  std::invalid_argument);
}
