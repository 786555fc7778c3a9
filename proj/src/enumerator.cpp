#include "osculate/enumerator.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>

namespace osculate {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::NonCrossing: return "noncrossing";
    case Mode::Osculating: return "osculating";
    case Mode::Vicious: return "vicious";
    case Mode::QuasiVicious: return "quasivicious";
  }
  return "?";
}

std::optional<Mode> mode_from_string(std::string_view s) {
  if (s == "noncrossing") return Mode::NonCrossing;
  if (s == "osculating") return Mode::Osculating;
  if (s == "vicious") return Mode::Vicious;
  if (s == "quasivicious") return Mode::QuasiVicious;
  return std::nullopt;
}

void validate(const WalkerSystem& sys) {
  if (sys.walkers != 2 && sys.walkers != 3)
    throw std::invalid_argument("walker count must be 2 or 3");
  int ngaps = sys.walkers - 1;
  for (int k = 0; k < ngaps; ++k)
    if (sys.start[static_cast<size_t>(k)] < 0)
      throw std::invalid_argument("start gaps must be nonnegative");
}

bool start_is_enumerable(const WalkerSystem& sys) {
  if (sys.mode != Mode::Vicious) return true;
  int ngaps = sys.walkers - 1;
  for (int k = 0; k < ngaps; ++k)
    if (sys.start[static_cast<size_t>(k)] == 0) return false;
  return true;
}

namespace {

// Simultaneous +-1 steps described by (bottom walker's step, gap deltas).
struct Move {
  int d_bottom;
  std::array<int, 2> d{0, 0};
};

// All 2^3 step vectors in a fixed order. The two stay-put deltas (0,0) come
// from all-down and all-up.
const std::array<Move, 8> kMoves3 = {{
    {-1, {0, 0}},    // (-,-,-)
    {-1, {0, 1}},    // (-,-,+)
    {-1, {1, -1}},   // (-,+,-)
    {-1, {1, 0}},    // (-,+,+)
    {+1, {-1, 0}},   // (+,-,-)
    {+1, {-1, 1}},   // (+,-,+)
    {+1, {0, -1}},   // (+,+,-)
    {+1, {0, 0}},    // (+,+,+)
}};

const std::array<Move, 4> kMoves2 = {{
    {-1, {0, 0}},   // (-,-)
    {-1, {1, 0}},   // (-,+)
    {+1, {-1, 0}},  // (+,-)
    {+1, {0, 0}},   // (+,+)
}};

// Is the step from `g` with delta `d` legal under `mode`? QuasiVicious here
// is the transition rule used inside the DP: a state containing a contact
// never extends (contacts are only allowed at the final time), and otherwise
// any non-crossing step is fine, including one that creates the final
// contact.
bool dp_step_legal(const std::array<int, 2>& g, const std::array<int, 2>& d, int ngaps, Mode mode) {
  for (int k = 0; k < ngaps; ++k) {
    int h = g[static_cast<size_t>(k)] + d[static_cast<size_t>(k)];
    switch (mode) {
      case Mode::NonCrossing:
        if (h < 0) return false;
        break;
      case Mode::Osculating:
        if (h < 0) return false;
        if (g[static_cast<size_t>(k)] == 0 && d[static_cast<size_t>(k)] != 1) return false;
        break;
      case Mode::Vicious:
        if (h < 1) return false;
        break;
      case Mode::QuasiVicious:
        if (g[static_cast<size_t>(k)] == 0) return false;
        if (h < 0) return false;
        break;
    }
  }
  return true;
}

int contacts(const std::array<int, 2>& g, int ngaps) {
  int z = 0;
  for (int k = 0; k < ngaps; ++k)
    if (g[static_cast<size_t>(k)] == 0) ++z;
  return z;
}

// Dense (g1, g2, osc) layer.
struct Grid {
  int G1, G2, OSC;
  std::vector<BigInt> v;
  Grid(int g1, int g2, int osc)
      : G1(g1), G2(g2), OSC(osc), v(static_cast<size_t>((g1 + 1) * (g2 + 1) * (osc + 1))) {}
  BigInt& at(int a, int b, int c) {
    return v[(static_cast<size_t>(a) * (G2 + 1) + b) * (OSC + 1) + c];
  }
  const BigInt& at(int a, int b, int c) const {
    return v[(static_cast<size_t>(a) * (G2 + 1) + b) * (OSC + 1) + c];
  }
  void clear() {
    for (auto& x : v) x = 0;
  }
};

}  // namespace

std::vector<StepOption> legal_steps(const std::array<int, 2>& gaps, int walkers, Mode mode) {
  if (walkers != 2 && walkers != 3)
    throw std::invalid_argument("walker count must be 2 or 3");
  int ngaps = walkers - 1;
  // The public contract answers QuasiVicious with the no-contact rule; where
  // a final contact is allowed is the enumerator's business.
  Mode rule = (mode == Mode::QuasiVicious) ? Mode::Vicious : mode;
  bool from_contact = contacts(gaps, ngaps) > 0;
  std::vector<StepOption> out;
  auto consider = [&](const Move& m) {
    if (dp_step_legal(gaps, m.d, ngaps, rule)) out.push_back({m.d, from_contact});
  };
  if (walkers == 3)
    for (const Move& m : kMoves3) consider(m);
  else
    for (const Move& m : kMoves2) consider(m);
  return out;
}

CountTable enumerate_dp(const WalkerSystem& sys, int n_max, int threads) {
  validate(sys);
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  if (threads < 1) threads = 1;

  const int ngaps = sys.walkers - 1;
  const int G1 = sys.start[0] + n_max;
  const int G2 = (ngaps == 2) ? sys.start[1] + n_max : 0;
  const int OSC = ngaps * n_max;  // up to one contact per gap per time step

  CountTable table(sys.walkers, n_max);
  if (!start_is_enumerable(sys)) return table;

  Grid cur(G1, G2, OSC);
  cur.at(sys.start[0], ngaps == 2 ? sys.start[1] : 0, 0) = 1;
  table.add(0, sys.start[0], ngaps == 2 ? sys.start[1] : 0, 0, BigInt(1));

  const Move* moves = (sys.walkers == 3) ? kMoves3.data() : kMoves2.data();
  const int n_moves = (sys.walkers == 3) ? 8 : 4;

  Grid nxt(G1, G2, OSC);
  std::vector<Grid> partial;  // per-thread accumulators, allocated on demand

  for (int m = 0; m < n_max; ++m) {
    auto advance_range = [&](Grid& dst, int g1_lo, int g1_hi) {
      for (int g1 = g1_lo; g1 < g1_hi; ++g1)
        for (int g2 = 0; g2 <= G2; ++g2) {
          std::array<int, 2> g{g1, g2};
          int z = contacts(g, ngaps);
          for (int mi = 0; mi < n_moves; ++mi) {
            const Move& mv = moves[mi];
            if (!dp_step_legal(g, mv.d, ngaps, sys.mode)) continue;
            int h1 = g1 + mv.d[0];
            int h2 = g2 + mv.d[1];
            if (h1 > G1 || h2 > G2) continue;  // unreachable given remaining steps
            for (int osc = 0; osc + z <= OSC; ++osc) {
              const BigInt& c = cur.at(g1, g2, osc);
              if (c.is_zero()) continue;
              dst.at(h1, h2, osc + z) += c;
            }
          }
        }
    };

    nxt.clear();
    if (threads == 1 || G1 < 2 * threads) {
      advance_range(nxt, 0, G1 + 1);
    } else {
      if (partial.empty())
        for (int i = 0; i < threads; ++i) partial.emplace_back(G1, G2, OSC);
      std::vector<std::thread> pool;
      int chunk = (G1 + threads) / threads;
      for (int i = 0; i < threads; ++i) {
        int lo = i * chunk, hi = std::min(G1 + 1, lo + chunk);
        partial[static_cast<size_t>(i)].clear();
        if (lo < hi)
          pool.emplace_back(advance_range, std::ref(partial[static_cast<size_t>(i)]), lo, hi);
      }
      for (auto& th : pool) th.join();
      for (const Grid& p : partial)
        for (size_t k = 0; k < nxt.v.size(); ++k)
          if (!p.v[k].is_zero()) nxt.v[k] += p.v[k];
    }
    std::swap(cur, nxt);

    for (int g1 = 0; g1 <= G1; ++g1)
      for (int g2 = 0; g2 <= G2; ++g2)
        for (int osc = 0; osc <= OSC; ++osc) {
          const BigInt& c = cur.at(g1, g2, osc);
          if (!c.is_zero()) table.add(m + 1, g1, g2, osc, c);
        }
  }
  return table;
}

namespace {

struct NaiveRecorder {
  // Dense uint64 accumulators; counts stay below 2^63 for the permitted
  // lengths (at most 8^10 step sequences in total).
  int n_max, G1, G2, OSC, R;
  std::vector<uint64_t> by_gap;   // [n][g1][g2][osc]
  std::vector<uint64_t> by_end;   // [n][r][g1][g2]
  NaiveRecorder(int n, int g1, int g2, int osc_max)
      : n_max(n), G1(g1), G2(g2), OSC(osc_max), R(n),
        by_gap(static_cast<size_t>(n + 1) * (g1 + 1) * (g2 + 1) * (osc_max + 1), 0),
        by_end(static_cast<size_t>(n + 1) * (n + 1) * (g1 + 1) * (g2 + 1), 0) {}
  void gap(int n, int g1, int g2, int osc) {
    by_gap[((static_cast<size_t>(n) * (G1 + 1) + g1) * (G2 + 1) + g2) * (OSC + 1) + osc] += 1;
  }
  void end(int n, int r, int g1, int g2) {
    by_end[((static_cast<size_t>(n) * (R + 1) + r) * (G1 + 1) + g1) * (G2 + 1) + g2] += 1;
  }
};

// Walk the tree of step sequences, keeping the literal ordinate vector and
// checking the defining conditions of each mode on it directly. A prefix that
// already violates its mode can never be extended to a legal configuration,
// so pruning loses nothing.
void naive_walk(const WalkerSystem& sys, int n_max, NaiveRecorder& rec) {
  const int p = sys.walkers;
  std::array<long long, 3> j{0, 0, 0};
  j[0] = 0;
  j[1] = 2LL * sys.start[0];
  if (p == 3) j[2] = j[1] + 2LL * sys.start[1];

  auto weakly_ordered = [&](const std::array<long long, 3>& a) {
    for (int k = 0; k + 1 < p; ++k)
      if (a[static_cast<size_t>(k)] > a[static_cast<size_t>(k + 1)]) return false;
    return true;
  };
  auto strictly_ordered = [&](const std::array<long long, 3>& a) {
    for (int k = 0; k + 1 < p; ++k)
      if (a[static_cast<size_t>(k)] >= a[static_cast<size_t>(k + 1)]) return false;
    return true;
  };
  auto equal_pairs = [&](const std::array<long long, 3>& a) {
    int z = 0;
    for (int k = 0; k + 1 < p; ++k)
      if (a[static_cast<size_t>(k)] == a[static_cast<size_t>(k + 1)]) ++z;
    return z;
  };
  auto extension_legal = [&](const std::array<long long, 3>& prev,
                             const std::array<long long, 3>& next) {
    switch (sys.mode) {
      case Mode::NonCrossing:
        return weakly_ordered(next);
      case Mode::Osculating:
        if (!weakly_ordered(next)) return false;
        for (int k = 0; k + 1 < p; ++k)
          if (prev[static_cast<size_t>(k)] == prev[static_cast<size_t>(k + 1)] &&
              next[static_cast<size_t>(k)] >= next[static_cast<size_t>(k + 1)])
            return false;
        return true;
      case Mode::Vicious:
        return strictly_ordered(next);
      case Mode::QuasiVicious:
        return strictly_ordered(prev) && weakly_ordered(next);
    }
    return false;
  };
  auto record = [&](int n, const std::array<long long, 3>& a, int osc, int ups) {
    int g1 = static_cast<int>((a[1] - a[0]) / 2);
    int g2 = (p == 3) ? static_cast<int>((a[2] - a[1]) / 2) : 0;
    rec.gap(n, g1, g2, osc);
    rec.end(n, ups, g1, g2);
  };

  // Start legality: the length-0 configuration itself must satisfy the mode.
  if (sys.mode == Mode::Vicious && !strictly_ordered(j)) return;

  std::function<void(int, std::array<long long, 3>&, int, int)> go =
      [&](int m, std::array<long long, 3>& cur_j, int osc, int ups) {
        record(m, cur_j, osc, ups);
        if (m == n_max) return;
        int z = equal_pairs(cur_j);
        int n_steps = 1 << p;
        for (int mask = 0; mask < n_steps; ++mask) {
          std::array<long long, 3> nj = cur_j;
          for (int k = 0; k < p; ++k) nj[static_cast<size_t>(k)] += (mask >> k & 1) ? 1 : -1;
          if (!extension_legal(cur_j, nj)) continue;
          go(m + 1, nj, osc + z, ups + (mask & 1));
        }
      };
  go(0, j, 0, 0);
}

void check_naive_cap(const WalkerSystem& sys, int n_max) {
  int cap = (sys.walkers == 3) ? 10 : 14;
  if (n_max > cap)
    throw std::invalid_argument("enumerate_naive: n_max capped at " + std::to_string(cap) +
                                " for " + std::to_string(sys.walkers) + " walkers");
}

}  // namespace

CountTable enumerate_naive(const WalkerSystem& sys, int n_max) {
  validate(sys);
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  check_naive_cap(sys, n_max);

  const int ngaps = sys.walkers - 1;
  const int G1 = sys.start[0] + n_max;
  const int G2 = (ngaps == 2) ? sys.start[1] + n_max : 0;
  NaiveRecorder rec(n_max, G1, G2, ngaps * n_max);
  naive_walk(sys, n_max, rec);

  CountTable table(sys.walkers, n_max);
  for (int n = 0; n <= n_max; ++n)
    for (int g1 = 0; g1 <= G1; ++g1)
      for (int g2 = 0; g2 <= G2; ++g2)
        for (int osc = 0; osc <= rec.OSC; ++osc) {
          uint64_t c = rec.by_gap[((static_cast<size_t>(n) * (G1 + 1) + g1) * (G2 + 1) + g2) *
                                      (rec.OSC + 1) +
                                  osc];
          if (c) table.add(n, g1, g2, osc, BigInt(c));
        }
  return table;
}

AbsoluteCountTable enumerate_naive_absolute(const WalkerSystem& sys, int n_max) {
  validate(sys);
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  check_naive_cap(sys, n_max);

  const int ngaps = sys.walkers - 1;
  const int G1 = sys.start[0] + n_max;
  const int G2 = (ngaps == 2) ? sys.start[1] + n_max : 0;
  NaiveRecorder rec(n_max, G1, G2, ngaps * n_max);
  naive_walk(sys, n_max, rec);

  AbsoluteCountTable table(sys.walkers, n_max);
  for (int n = 0; n <= n_max; ++n)
    for (int r = 0; r <= n_max; ++r)
      for (int g1 = 0; g1 <= G1; ++g1)
        for (int g2 = 0; g2 <= G2; ++g2) {
          uint64_t c = rec.by_end[((static_cast<size_t>(n) * (rec.R + 1) + r) * (G1 + 1) + g1) *
                                      (G2 + 1) +
                                  g2];
          if (c) table.add(n, r, g1, g2, BigInt(c));
        }
  return table;
}

AbsoluteCountTable enumerate_dp_absolute(const WalkerSystem& sys, int n_max) {
  validate(sys);
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");

  const int ngaps = sys.walkers - 1;
  const int G1 = sys.start[0] + n_max;
  const int G2 = (ngaps == 2) ? sys.start[1] + n_max : 0;
  const int R = n_max;

  AbsoluteCountTable table(sys.walkers, n_max);
  if (!start_is_enumerable(sys)) return table;

  // Layers over (r, g1, g2); the contact statistic is not tracked here.
  auto idx = [&](int r, int g1, int g2) {
    return (static_cast<size_t>(r) * (G1 + 1) + g1) * (G2 + 1) + g2;
  };
  std::vector<BigInt> cur(static_cast<size_t>(R + 1) * (G1 + 1) * (G2 + 1));
  std::vector<BigInt> nxt(cur.size());

  cur[idx(0, sys.start[0], ngaps == 2 ? sys.start[1] : 0)] = 1;
  table.add(0, 0, sys.start[0], ngaps == 2 ? sys.start[1] : 0, BigInt(1));

  const Move* moves = (sys.walkers == 3) ? kMoves3.data() : kMoves2.data();
  const int n_moves = (sys.walkers == 3) ? 8 : 4;

  for (int m = 0; m < n_max; ++m) {
    for (auto& x : nxt) x = 0;
    for (int r = 0; r <= m; ++r)
      for (int g1 = 0; g1 <= G1; ++g1)
        for (int g2 = 0; g2 <= G2; ++g2) {
          const BigInt& c = cur[idx(r, g1, g2)];
          if (c.is_zero()) continue;
          std::array<int, 2> g{g1, g2};
          for (int mi = 0; mi < n_moves; ++mi) {
            const Move& mv = moves[mi];
            if (!dp_step_legal(g, mv.d, ngaps, sys.mode)) continue;
            int h1 = g1 + mv.d[0], h2 = g2 + mv.d[1];
            if (h1 > G1 || h2 > G2) continue;
            nxt[idx(r + (mv.d_bottom > 0 ? 1 : 0), h1, h2)] += c;
          }
        }
    std::swap(cur, nxt);
    for (int r = 0; r <= m + 1; ++r)
      for (int g1 = 0; g1 <= G1; ++g1)
        for (int g2 = 0; g2 <= G2; ++g2) {
          const BigInt& c = cur[idx(r, g1, g2)];
          if (!c.is_zero()) table.add(m + 1, r, g1, g2, c);
        }
  }
  return table;
}

namespace {

void check_gf_args(const CountTable& t, int order, int want_walkers) {
  if (t.walkers() != want_walkers)
    throw std::invalid_argument("count table has the wrong walker count for this view");
  if (order > t.n_max())
    throw std::invalid_argument("requested order exceeds the table's n_max");
}

}  // namespace

TruncSeries<Laurent2<Rational>> complete_gf(const CountTable& t, int order) {
  check_gf_args(t, order, 3);
  TruncSeries<Laurent2<Rational>> s(order);
  for (const auto& [k, c] : t.cells()) {
    if (k[0] > order) continue;
    auto cur = s.coeff(k[0]);
    cur.add_term(k[1], k[2], Rational(c));
    s.set_coeff(k[0], cur);
  }
  return s;
}

TruncSeries<Laurent2<UPoly>> complete_gf_weighted(const CountTable& t, int order) {
  check_gf_args(t, order, 3);
  TruncSeries<Laurent2<UPoly>> s(order);
  for (const auto& [k, c] : t.cells()) {
    if (k[0] > order) continue;
    auto cur = s.coeff(k[0]);
    cur.add_term(k[1], k[2], UPoly(Rational(c)).shifted(k[3]));
    s.set_coeff(k[0], cur);
  }
  return s;
}

TruncSeries<Laurent1<Rational>> complete_gf_single(const CountTable& t, int order) {
  check_gf_args(t, order, 2);
  TruncSeries<Laurent1<Rational>> s(order);
  for (const auto& [k, c] : t.cells()) {
    if (k[0] > order) continue;
    auto cur = s.coeff(k[0]);
    cur.add_term(k[1], Rational(c));
    s.set_coeff(k[0], cur);
  }
  return s;
}

TruncSeries<Laurent1<UPoly>> complete_gf_single_weighted(const CountTable& t, int order) {
  check_gf_args(t, order, 2);
  TruncSeries<Laurent1<UPoly>> s(order);
  for (const auto& [k, c] : t.cells()) {
    if (k[0] > order) continue;
    auto cur = s.coeff(k[0]);
    cur.add_term(k[1], UPoly(Rational(c)).shifted(k[3]));
    s.set_coeff(k[0], cur);
  }
  return s;
}

TruncSeries<Rational> length_series(const CountTable& t, int order) {
  if (order > t.n_max()) throw std::invalid_argument("requested order exceeds the table's n_max");
  TruncSeries<Rational> s(order);
  for (const auto& [k, c] : t.cells())
    if (k[0] <= order) s.add_to_coeff(k[0], Rational(c));
  return s;
}

TruncSeries<UPoly> length_series_weighted(const CountTable& t, int order) {
  if (order > t.n_max()) throw std::invalid_argument("requested order exceeds the table's n_max");
  TruncSeries<UPoly> s(order);
  for (const auto& [k, c] : t.cells())
    if (k[0] <= order) s.add_to_coeff(k[0], UPoly(Rational(c)).shifted(k[3]));
  return s;
}

}  // namespace osculate
