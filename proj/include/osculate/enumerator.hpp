#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osculate/laurent_series.hpp"
#include "osculate/rational.hpp"

namespace osculate {

// Interaction rule for p directed walkers stepping +-1 simultaneously,
// ordered bottom to top. All four rules forbid crossing; they differ in what
// happens when neighbouring walkers share a site ("contact"):
//   NonCrossing   contacts and shared edges both allowed
//   Osculating    contact forces the pair to split apart on the next step
//   Vicious       contacts never allowed
//   QuasiVicious  contacts allowed only at the final time
enum class Mode { NonCrossing, Osculating, Vicious, QuasiVicious };

std::string to_string(Mode m);
std::optional<Mode> mode_from_string(std::string_view s);

// A walker system is determined by the number of walkers (2 or 3), the start
// gaps (in units of 2, since ordinate differences stay even) and the mode.
// For walkers == 2 only start[0] is meaningful.
struct WalkerSystem {
  int walkers = 3;
  std::array<int, 2> start{1, 1};
  Mode mode = Mode::Osculating;
};

// Throws std::invalid_argument on malformed systems (bad walker count,
// negative gaps). A Vicious system with a zero start gap is well formed but
// admits no configurations at all; the enumerators return an empty table for
// it, and the CLI rejects it up front as a usage error.
void validate(const WalkerSystem& sys);
bool start_is_enumerable(const WalkerSystem& sys);

// One of the 2^p simultaneous steps, described by its effect on the gap
// vector. Two distinct step vectors can share the same delta (both all-up and
// all-down leave the gaps unchanged), so deltas repeat in the legal list.
struct StepOption {
  std::array<int, 2> delta{0, 0};
  bool departs_contact = false;  // some gap is 0 in the current state
};

// The subset of the 2^p step vectors legal from `gaps` under `mode`.
// QuasiVicious is answered with the Vicious rule here: reaching a zero gap is
// only legal as a final state, which is the enumerator's bookkeeping, not a
// property of the step itself.
std::vector<StepOption> legal_steps(const std::array<int, 2>& gaps, int walkers, Mode mode);

// Exact counts indexed by (length n, gap vector, number of contacts at times
// before n). Keys are lexicographic, so iteration order is deterministic.
// For 2 walkers the g2 slot is always 0.
class CountTable {
 public:
  using Key = std::array<int, 4>;  // n, g1, g2, osc

  CountTable(int walkers, int n_max) : walkers_(walkers), n_max_(n_max) {}

  int walkers() const { return walkers_; }
  int n_max() const { return n_max_; }

  void add(int n, int g1, int g2, int osc, const BigInt& c) {
    if (c.is_zero()) return;
    cells_[{n, g1, g2, osc}] += c;
  }

  BigInt at(int n, int g1, int g2, int osc) const {
    auto it = cells_.find({n, g1, g2, osc});
    return it == cells_.end() ? BigInt(0) : it->second;
  }

  BigInt total(int n) const {
    BigInt s(0);
    for (const auto& [k, c] : cells_)
      if (k[0] == n) s += c;
    return s;
  }

  const std::map<Key, BigInt>& cells() const { return cells_; }

  friend bool operator==(const CountTable& a, const CountTable& b) {
    return a.walkers_ == b.walkers_ && a.cells_ == b.cells_;
  }

 private:
  int walkers_;
  int n_max_;
  std::map<Key, BigInt> cells_;
};

// Gap-vector dynamic programming over layers n = 0..n_max. `threads` > 1
// splits each layer across a small worker pool; results are identical either
// way since the per-state updates commute.
CountTable enumerate_dp(const WalkerSystem& sys, int n_max, int threads = 1);

// Independent oracle: exhaustive generation of step sequences, with legality
// and the contact statistic read off the literal ordinate sequences. Capped
// at small lengths (10 for three walkers, 14 for two) since the tree has
// 2^(p n) leaves.
CountTable enumerate_naive(const WalkerSystem& sys, int n_max);

// Fixed-endpoint variant: also records r, the number of up-steps of the
// bottom walker, so the final ordinates are fully determined. This is the
// shape the lattice-path determinant counts, keyed (n, r, g1, g2).
class AbsoluteCountTable {
 public:
  using Key = std::array<int, 4>;  // n, r, g1, g2

  AbsoluteCountTable(int walkers, int n_max) : walkers_(walkers), n_max_(n_max) {}

  int walkers() const { return walkers_; }
  int n_max() const { return n_max_; }

  void add(int n, int r, int g1, int g2, const BigInt& c) {
    if (c.is_zero()) return;
    cells_[{n, r, g1, g2}] += c;
  }
  BigInt at(int n, int r, int g1, int g2) const {
    auto it = cells_.find({n, r, g1, g2});
    return it == cells_.end() ? BigInt(0) : it->second;
  }
  const std::map<Key, BigInt>& cells() const { return cells_; }

  friend bool operator==(const AbsoluteCountTable& a, const AbsoluteCountTable& b) {
    return a.walkers_ == b.walkers_ && a.cells_ == b.cells_;
  }

 private:
  int walkers_;
  int n_max_;
  std::map<Key, BigInt> cells_;
};

AbsoluteCountTable enumerate_dp_absolute(const WalkerSystem& sys, int n_max);
AbsoluteCountTable enumerate_naive_absolute(const WalkerSystem& sys, int n_max);

// Generating-function views of a count table. The contact-weighted variants
// carry the statistic in a u-polynomial coefficient ring.

TruncSeries<Laurent2<Rational>> complete_gf(const CountTable& t, int order);
TruncSeries<Laurent2<UPoly>> complete_gf_weighted(const CountTable& t, int order);

// Two-walker views (single catalytic variable).
TruncSeries<Laurent1<Rational>> complete_gf_single(const CountTable& t, int order);
TruncSeries<Laurent1<UPoly>> complete_gf_single_weighted(const CountTable& t, int order);

TruncSeries<Rational> length_series(const CountTable& t, int order);
TruncSeries<UPoly> length_series_weighted(const CountTable& t, int order);

}  // namespace osculate
