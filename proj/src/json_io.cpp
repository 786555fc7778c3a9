#include "osculate/json_io.hpp"

#include <sstream>

namespace osculate {

namespace {

// One term of a coefficient: exponent tuple (in the ring's variable order)
// plus a rational value. Flattening through this shape lets every ring share
// the same JSON/CSV/text emitters.
struct Term {
  std::vector<int> exps;
  Rational value;
};

void collect(const Rational& c, std::vector<int>& prefix, std::vector<Term>& out) {
  if (c != Rational(0)) out.push_back({prefix, c});
}

void collect(const UPoly& c, std::vector<int>& prefix, std::vector<Term>& out) {
  for (int d = 0; d <= c.degree(); ++d)
    if (!(c.coeff(d) == Rational(0))) {
      prefix.push_back(d);
      out.push_back({prefix, c.coeff(d)});
      prefix.pop_back();
    }
}

template <class C>
void collect(const Laurent1<C>& c, std::vector<int>& prefix, std::vector<Term>& out) {
  for (const auto& [e, inner] : c.terms()) {
    prefix.push_back(e);
    collect(inner, prefix, out);
    prefix.pop_back();
  }
}

template <class C>
void collect(const Laurent2<C>& c, std::vector<int>& prefix, std::vector<Term>& out) {
  for (const auto& [e, inner] : c.terms()) {
    prefix.push_back(e.first);
    prefix.push_back(e.second);
    collect(inner, prefix, out);
    prefix.pop_back();
    prefix.pop_back();
  }
}

template <class C>
std::vector<Term> slice_terms(const C& c) {
  std::vector<Term> out;
  std::vector<int> prefix;
  collect(c, prefix, out);
  return out;
}

template <class C>
ordered_json series_json_impl(const TruncSeries<C>& s, const std::string& ring) {
  ordered_json j;
  j["ring"] = ring;
  j["order"] = s.order();
  ordered_json coeffs = ordered_json::array();
  for (int n = 0; n <= s.order(); ++n) {
    ordered_json slice = ordered_json::array();
    for (const Term& t : slice_terms(s.coeff(n))) {
      ordered_json term = ordered_json::array();
      for (int e : t.exps) term.push_back(e);
      term.push_back(num_str(t.value));
      term.push_back(den_str(t.value));
      slice.push_back(std::move(term));
    }
    coeffs.push_back(std::move(slice));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

template <class C>
std::string series_csv_impl(const TruncSeries<C>& s, const std::string& header) {
  std::ostringstream out;
  out << header << "\n";
  for (int n = 0; n <= s.order(); ++n)
    for (const Term& t : slice_terms(s.coeff(n))) {
      out << n;
      for (int e : t.exps) out << "," << e;
      out << "," << num_str(t.value) << "," << den_str(t.value) << "\n";
    }
  return out.str();
}

// Scalar series keep zero coefficients so the row list covers every power.
std::string series_csv_scalar(const TruncSeries<Rational>& s) {
  std::ostringstream out;
  out << "n,numerator,denominator\n";
  for (int n = 0; n <= s.order(); ++n)
    out << n << "," << num_str(s.coeff(n)) << "," << den_str(s.coeff(n)) << "\n";
  return out.str();
}

// Variable names follow the exponent tuple layout: all structured rings start
// with their Laurent exponents and end with the optional u-degree.
std::string render_term(const Term& t, const std::vector<std::string>& vars) {
  std::ostringstream out;
  out << dec(t.value);
  for (std::size_t k = 0; k < t.exps.size(); ++k)
    if (t.exps[k] != 0) out << " " << vars[k] << "^" << t.exps[k];
  return out.str();
}

template <class C>
std::string series_text_impl(const TruncSeries<C>& s, const std::vector<std::string>& vars) {
  std::ostringstream out;
  for (int n = 0; n <= s.order(); ++n) {
    out << "t^" << n << ":";
    auto terms = slice_terms(s.coeff(n));
    if (terms.empty()) {
      out << " 0\n";
      continue;
    }
    for (std::size_t k = 0; k < terms.size(); ++k)
      out << (k ? " + " : " ") << render_term(terms[k], vars);
    out << "\n";
  }
  return out.str();
}

std::string format_failure(const FailurePoint& fp) {
  std::ostringstream out;
  out << "t^" << fp.t_power;
  if (fp.x_exp) out << ", x^" << *fp.x_exp;
  if (fp.y_exp) out << ", y^" << *fp.y_exp;
  if (fp.u_deg) out << ", u^" << *fp.u_deg;
  out << ": " << fp.value;
  return out.str();
}

}  // namespace

ordered_json series_json(const TruncSeries<Rational>& s) { return series_json_impl(s, "Q"); }
ordered_json series_json(const TruncSeries<UPoly>& s) { return series_json_impl(s, "Q[u]"); }
ordered_json series_json(const TruncSeries<Laurent1<Rational>>& s) {
  return series_json_impl(s, "Q[x,1/x]");
}
ordered_json series_json(const TruncSeries<Laurent2<Rational>>& s) {
  return series_json_impl(s, "Q[x,1/x,y,1/y]");
}
ordered_json series_json(const TruncSeries<Laurent1<UPoly>>& s) {
  return series_json_impl(s, "Q[x,1/x][u]");
}
ordered_json series_json(const TruncSeries<Laurent2<UPoly>>& s) {
  return series_json_impl(s, "Q[x,1/x,y,1/y][u]");
}

std::string series_csv(const TruncSeries<Rational>& s) { return series_csv_scalar(s); }
std::string series_csv(const TruncSeries<UPoly>& s) {
  return series_csv_impl(s, "n,u_deg,numerator,denominator");
}
std::string series_csv(const TruncSeries<Laurent1<Rational>>& s) {
  return series_csv_impl(s, "n,x_exp,numerator,denominator");
}
std::string series_csv(const TruncSeries<Laurent2<Rational>>& s) {
  return series_csv_impl(s, "n,x_exp,y_exp,numerator,denominator");
}
std::string series_csv(const TruncSeries<Laurent1<UPoly>>& s) {
  return series_csv_impl(s, "n,x_exp,u_deg,numerator,denominator");
}
std::string series_csv(const TruncSeries<Laurent2<UPoly>>& s) {
  return series_csv_impl(s, "n,x_exp,y_exp,u_deg,numerator,denominator");
}

std::string series_text(const TruncSeries<Rational>& s) {
  std::ostringstream out;
  for (int n = 0; n <= s.order(); ++n) out << (n ? ", " : "") << dec(s.coeff(n));
  out << "\n";
  return out.str();
}
std::string series_text(const TruncSeries<UPoly>& s) { return series_text_impl(s, {"u"}); }
std::string series_text(const TruncSeries<Laurent1<Rational>>& s) {
  return series_text_impl(s, {"x"});
}
std::string series_text(const TruncSeries<Laurent2<Rational>>& s) {
  return series_text_impl(s, {"x", "y"});
}
std::string series_text(const TruncSeries<Laurent1<UPoly>>& s) {
  return series_text_impl(s, {"x", "u"});
}
std::string series_text(const TruncSeries<Laurent2<UPoly>>& s) {
  return series_text_impl(s, {"x", "y", "u"});
}

ordered_json table_json(const CountTable& t, const std::string& mode,
                        const std::array<int, 2>& start) {
  ordered_json j;
  j["walkers"] = t.walkers();
  j["mode"] = mode;
  if (t.walkers() == 2)
    j["start"] = ordered_json::array({start[0]});
  else
    j["start"] = ordered_json::array({start[0], start[1]});
  j["max_length"] = t.n_max();
  ordered_json columns = ordered_json::array();
  columns.push_back("n");
  columns.push_back("gap1");
  if (t.walkers() == 3) columns.push_back("gap2");
  columns.push_back("osc");
  columns.push_back("count");
  j["columns"] = std::move(columns);
  ordered_json rows = ordered_json::array();
  for (const auto& [key, count] : t.cells()) {
    ordered_json row = ordered_json::array();
    row.push_back(key[0]);
    row.push_back(key[1]);
    if (t.walkers() == 3) row.push_back(key[2]);
    row.push_back(key[3]);
    row.push_back(dec(count));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string table_csv(const CountTable& t) {
  std::ostringstream out;
  out << (t.walkers() == 3 ? "n,gap1,gap2,osc,count" : "n,gap1,osc,count") << "\n";
  for (const auto& [key, count] : t.cells()) {
    out << key[0] << "," << key[1] << ",";
    if (t.walkers() == 3) out << key[2] << ",";
    out << key[3] << "," << dec(count) << "\n";
  }
  return out.str();
}

std::string table_text(const CountTable& t) {
  std::ostringstream out;
  out << (t.walkers() == 3 ? "   n gap1 gap2  osc  count" : "   n gap1  osc  count") << "\n";
  for (const auto& [key, count] : t.cells()) {
    char buf[64];
    if (t.walkers() == 3)
      std::snprintf(buf, sizeof buf, "%4d %4d %4d %4d  ", key[0], key[1], key[2], key[3]);
    else
      std::snprintf(buf, sizeof buf, "%4d %4d %4d  ", key[0], key[1], key[3]);
    out << buf << dec(count) << "\n";
  }
  return out.str();
}

ordered_json failure_json(const FailurePoint& fp) {
  ordered_json j;
  j["t_power"] = fp.t_power;
  j["x_exp"] = fp.x_exp ? ordered_json(*fp.x_exp) : ordered_json(nullptr);
  j["y_exp"] = fp.y_exp ? ordered_json(*fp.y_exp) : ordered_json(nullptr);
  j["u_deg"] = fp.u_deg ? ordered_json(*fp.u_deg) : ordered_json(nullptr);
  j["value"] = fp.value;
  return j;
}

ordered_json report_json(const CheckReport& r) {
  ordered_json j;
  j["check_name"] = r.check_name;
  j["i"] = r.i ? ordered_json(*r.i) : ordered_json(nullptr);
  j["j"] = r.j ? ordered_json(*r.j) : ordered_json(nullptr);
  j["order"] = r.order;
  j["passed"] = r.passed;
  ordered_json ids = ordered_json::array();
  for (const auto& id : r.identities) {
    ordered_json ij;
    ij["identity"] = id.identity;
    ij["order_checked"] = id.order_checked;
    ij["residual_zero"] = id.residual_zero;
    ij["first_nonzero"] = id.first_nonzero ? failure_json(*id.first_nonzero) : ordered_json(nullptr);
    ids.push_back(std::move(ij));
  }
  j["identities"] = std::move(ids);
  j["first_failure"] = r.first_failure ? failure_json(*r.first_failure) : ordered_json(nullptr);
  return j;
}

ordered_json reports_json(const std::vector<CheckReport>& rs) {
  ordered_json j;
  bool passed = true;
  for (const auto& r : rs) passed = passed && r.passed;
  j["passed"] = passed;
  ordered_json checks = ordered_json::array();
  for (const auto& r : rs) checks.push_back(report_json(r));
  j["checks"] = std::move(checks);
  return j;
}

std::string report_text(const CheckReport& r) {
  std::ostringstream out;
  out << r.check_name;
  if (r.i && r.j)
    out << " (i=" << *r.i << ", j=" << *r.j << ")";
  else if (r.i)
    out << " (i=" << *r.i << ")";
  out << " order " << r.order << ": " << (r.passed ? "PASS" : "FAIL") << ", "
      << r.identities.size() << (r.identities.size() == 1 ? " identity" : " identities") << "\n";
  for (const auto& id : r.identities) {
    out << "  " << (id.residual_zero ? "ok   " : "FAIL ") << id.identity << " [t^"
        << id.order_checked << "]";
    if (id.first_nonzero) out << " — first nonzero at " << format_failure(*id.first_nonzero);
    out << "\n";
  }
  return out.str();
}

std::string reports_text(const std::vector<CheckReport>& rs) {
  std::ostringstream out;
  int failed = 0;
  for (const auto& r : rs) {
    out << report_text(r);
    if (!r.passed) ++failed;
  }
  if (failed == 0)
    out << rs.size() << (rs.size() == 1 ? " check" : " checks") << ", all passed\n";
  else
    out << failed << " of " << rs.size() << " checks FAILED\n";
  return out.str();
}

std::string reports_csv(const std::vector<CheckReport>& rs) {
  std::ostringstream out;
  out << "check,i,j,order,passed\n";
  for (const auto& r : rs) {
    out << r.check_name << ",";
    if (r.i) out << *r.i;
    out << ",";
    if (r.j) out << *r.j;
    out << "," << r.order << "," << (r.passed ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace osculate
