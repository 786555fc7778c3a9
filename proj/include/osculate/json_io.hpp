#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "osculate/enumerator.hpp"
#include "osculate/reports.hpp"

namespace osculate {

using ordered_json = nlohmann::ordered_json;

// All serialisers below are deterministic: coefficients live in std::map
// containers, rationals are kept in lowest terms with positive denominators,
// and integers are rendered as decimal strings, so identical inputs always
// produce identical bytes.

// Series objects: {"ring": ..., "order": N, "coeffs": [terms for t^0, ...]}.
// A term is a list of exponents followed by numerator and denominator
// strings; scalar rings have no exponent slots, so the rational series over Q
// uses ["num", "den"], the u-weighted one [u_deg, "num", "den"], the
// one-variable Laurent rings [x_exp, ...] and the two-variable ones
// [x_exp, y_exp, ...]. Zero terms are omitted; a zero slice is [].
ordered_json series_json(const TruncSeries<Rational>& s);
ordered_json series_json(const TruncSeries<UPoly>& s);
ordered_json series_json(const TruncSeries<Laurent1<Rational>>& s);
ordered_json series_json(const TruncSeries<Laurent2<Rational>>& s);
ordered_json series_json(const TruncSeries<Laurent1<UPoly>>& s);
ordered_json series_json(const TruncSeries<Laurent2<UPoly>>& s);

// CSV: one row per nonzero term (scalar series keep zero slices so every
// t-power appears). Columns mirror the JSON term layout.
std::string series_csv(const TruncSeries<Rational>& s);
std::string series_csv(const TruncSeries<UPoly>& s);
std::string series_csv(const TruncSeries<Laurent1<Rational>>& s);
std::string series_csv(const TruncSeries<Laurent2<Rational>>& s);
std::string series_csv(const TruncSeries<Laurent1<UPoly>>& s);
std::string series_csv(const TruncSeries<Laurent2<UPoly>>& s);

// Human-oriented rendering: the scalar series on a single comma-separated
// line, structured ones as one "t^n: ..." line per power.
std::string series_text(const TruncSeries<Rational>& s);
std::string series_text(const TruncSeries<UPoly>& s);
std::string series_text(const TruncSeries<Laurent1<Rational>>& s);
std::string series_text(const TruncSeries<Laurent2<Rational>>& s);
std::string series_text(const TruncSeries<Laurent1<UPoly>>& s);
std::string series_text(const TruncSeries<Laurent2<UPoly>>& s);

// Count tables. Rows are ordered lexicographically by (n, gap1, gap2, osc);
// two-walker tables drop the gap2 column.
ordered_json table_json(const CountTable& t, const std::string& mode,
                        const std::array<int, 2>& start);
std::string table_csv(const CountTable& t);
std::string table_text(const CountTable& t);

// Verification reports.
ordered_json failure_json(const FailurePoint& fp);
ordered_json report_json(const CheckReport& r);
ordered_json reports_json(const std::vector<CheckReport>& rs);
std::string report_text(const CheckReport& r);
std::string reports_text(const std::vector<CheckReport>& rs);
std::string reports_csv(const std::vector<CheckReport>& rs);

}  // namespace osculate
