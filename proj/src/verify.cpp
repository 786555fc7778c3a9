#include "osculate/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "osculate/closed_forms.hpp"
#include "osculate/kernel_checks.hpp"

namespace osculate {

namespace {

struct CheckEntry {
  std::string name;
  int default_order;
  // Univariate companion order for checks that verify both a bivariate
  // identity and its one-variable specialisations; -1 when not applicable.
  int default_order_univariate;
  std::function<CheckReport(const VerifyOptions&, int, int)> run;  // (opt, N, N1)
};

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries = {
      {"main-eq", 8, -1,
       [](const VerifyOptions& o, int n, int) { return check_main_equation(o.i, o.j, n); }},
      {"orbit", 25, -1, [](const VerifyOptions&, int n, int) { return check_orbit(n); }},
      {"framed-system", 25, -1,
       [](const VerifyOptions& o, int n, int) { return check_framed_system(o.i, o.j, n); }},
      {"boundary", 8, 25,
       [](const VerifyOptions& o, int n, int n1) {
         return check_boundary_reconstruction(o.i, o.j, n, n1);
       }},
      {"quasivicious", 8, 25,
       [](const VerifyOptions& o, int n, int n1) { return check_quasivicious(o.i, o.j, n, n1); }},
      {"refined", 8, -1,
       [](const VerifyOptions& o, int n, int) { return check_refined_equation(o.i, o.j, n); }},
      {"prop1", 20, -1,
       [](const VerifyOptions& o, int n, int) { return check_length_closed_forms(o.i, o.j, n); }},
      {"prop2", 10, -1,
       [](const VerifyOptions& o, int n, int) { return check_complete_assembly(o.i, o.j, n); }},
      {"prop3", 14, -1,
       [](const VerifyOptions& o, int n, int) { return check_refined_closed_form(o.i, o.j, n); }},
      {"gv", 8, -1,
       [](const VerifyOptions& o, int n, int) { return check_determinant_counts(o.i, o.j, n); }},
      {"baxter", 12, -1, [](const VerifyOptions&, int n, int) { return baxter_identities(n); }},
      {"ode", 30, -1, [](const VerifyOptions&, int n, int) { return baxter_ode_check(n); }},
      {"two-walker", 25, -1,
       [](const VerifyOptions& o, int n, int) { return two_walker_suite(o.i, n); }},
  };
  return entries;
}

const CheckEntry& entry_for(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown check name: " + name);
}

CheckReport run_entry(const CheckEntry& e, const VerifyOptions& options) {
  int n = options.order >= 0 ? options.order : e.default_order;
  int n1 = e.default_order_univariate;
  if (n1 >= 0 && options.order >= 0) n1 = options.order;
  return e.run(options, n, n1);
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.name);
    return v;
  }();
  return names;
}

bool is_check_name(const std::string& name) {
  const auto& ns = check_names();
  return std::find(ns.begin(), ns.end(), name) != ns.end();
}

int default_order(const std::string& name) { return entry_for(name).default_order; }

CheckReport run_check(const std::string& name, const VerifyOptions& options) {
  if (options.order == 0 || options.order < -1)
    throw std::invalid_argument("order must be positive");
  return run_entry(entry_for(name), options);
}

std::vector<CheckReport> run_all(const VerifyOptions& options) {
  if (options.order == 0 || options.order < -1)
    throw std::invalid_argument("order must be positive");
  const auto& entries = registry();
  std::vector<CheckReport> reports(entries.size());
  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t k = 0; k < entries.size(); ++k) reports[k] = run_entry(entries[k], options);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= entries.size()) return;
      try {
        reports[k] = run_entry(entries[k], options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < std::min<int>(jobs, int(entries.size())); ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return reports;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

}  // namespace osculate
