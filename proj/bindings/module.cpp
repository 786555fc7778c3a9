// Python face of the toolkit. Structured results cross the boundary as plain
// dicts and lists in the same schemas the command-line tool emits as JSON,
// with counts as exact Python integers where that is the natural type.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "osculate/closed_forms.hpp"
#include "osculate/enumerator.hpp"
#include "osculate/json_io.hpp"
#include "osculate/series_roots.hpp"
#include "osculate/verify.hpp"

namespace py = pybind11;
using namespace osculate;

namespace {

py::object big(const BigInt& n) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(dec(n).c_str(), nullptr, 10));
}

py::object json_to_py(const ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::array<int, 2> start_pair(const std::vector<int>& start, int walkers) {
  if (walkers == 2) {
    if (start.size() != 1) throw std::invalid_argument("two walkers take a single start gap");
    return {start[0], 0};
  }
  if (start.size() != 2) throw std::invalid_argument("three walkers take two start gaps");
  return {start[0], start[1]};
}

py::object py_enumerate(const std::string& mode_name, const std::vector<int>& start, int n,
                        int walkers, int jobs) {
  auto mode = mode_from_string(mode_name);
  if (!mode) throw std::invalid_argument("unknown mode: " + mode_name);
  WalkerSystem sys{walkers, start_pair(start, walkers), *mode};
  validate(sys);
  if (!start_is_enumerable(sys))
    throw std::invalid_argument(
        "vicious walkers need positive start gaps: a shared starting site is already a contact");
  CountTable table = enumerate_dp(sys, n, jobs);
  py::dict out = json_to_py(table_json(table, to_string(*mode), sys.start));
  // Replace the decimal count strings with exact Python integers.
  py::list rows = out["rows"];
  for (auto row : rows) {
    py::list r = row.cast<py::list>();
    r[py::len(r) - 1] = py::int_(r[py::len(r) - 1]);
  }
  return out;
}

py::object py_series(const std::string& name, int order, const std::vector<int>& start) {
  if (name == "T") return json_to_py(series_json(solve_T(order)));
  if (name == "X") return json_to_py(series_json(solve_X(order)));
  if (name == "baxter") return json_to_py(series_json(baxter_gf(order)));
  auto s = start_pair(start, 3);
  if (name == "osculating-length")
    return json_to_py(series_json(osculating_length_gf(s[0], s[1], order)));
  if (name == "vicious-length")
    return json_to_py(series_json(vicious_length_gf(s[0], s[1], order)));
  if (name == "osculating-refined")
    return json_to_py(series_json(osculation_refined_gf(s[0], s[1], order)));
  if (name == "vicious-complete")
    return json_to_py(series_json(vicious_complete_gf(s[0], s[1], order)));
  if (name == "osculating-complete")
    return json_to_py(series_json(osculating_complete_gf(s[0], s[1], order)));
  throw std::invalid_argument("unknown series name: " + name);
}

py::object py_verify(const std::string& check, const std::vector<int>& start,
                     std::optional<int> order, int jobs) {
  auto s = start_pair(start, 3);
  VerifyOptions opt;
  opt.i = s[0];
  opt.j = s[1];
  opt.order = order.value_or(-1);
  opt.jobs = jobs;
  std::vector<CheckReport> reports;
  if (check == "all") {
    reports = run_all(opt);
  } else {
    if (!is_check_name(check)) throw std::invalid_argument("unknown check: " + check);
    reports.push_back(run_check(check, opt));
  }
  return json_to_py(reports_json(reports));
}

py::list py_baxter_numbers(int count) {
  py::list out;
  for (const auto& b : baxter_numbers(count)) out.append(big(b));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "exact enumeration and closed-form series for interacting directed walkers "
      "(dicts mirror the command-line JSON schemas)";

  m.def("enumerate_walks", &py_enumerate, py::arg("mode"), py::arg("start"), py::arg("n"),
        py::arg("walkers") = 3, py::arg("jobs") = 1,
        "Exact counts keyed by (length, end gaps, contact number). Counts are Python ints.");

  m.def("series", &py_series, py::arg("name"), py::arg("order"),
        py::arg("start") = std::vector<int>{1, 1},
        "A closed-form series as {'ring', 'order', 'coeffs'}; term lists carry exponents "
        "followed by numerator and denominator strings.");

  m.def("verify", &py_verify, py::arg("check") = std::string("all"),
        py::arg("start") = std::vector<int>{1, 1}, py::arg("order") = py::none(),
        py::arg("jobs") = 1,
        "Run one named identity check, or all of them, and return the report dict.");

  m.def("check_names", [] { return check_names(); },
        "Names accepted by verify(), in suite order.");

  m.def("baxter_numbers", &py_baxter_numbers, py::arg("count"),
        "The first `count` Baxter numbers as exact Python ints.");

  m.def("modes", [] {
    return std::vector<std::string>{"noncrossing", "osculating", "vicious", "quasivicious"};
  });
}
