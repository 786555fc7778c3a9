// Command-line front end: exact walk enumeration, closed-form series, and
// identity verification, with byte-stable json/csv/text output.
//
// Exit codes: 0 success, 1 a verification found a nonzero residual (or an
// internal error), 2 malformed invocation (bad flags, bad start, bad mode).

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "osculate/closed_forms.hpp"
#include "osculate/enumerator.hpp"
#include "osculate/errors.hpp"
#include "osculate/json_io.hpp"
#include "osculate/kernel_checks.hpp"
#include "osculate/series_roots.hpp"
#include "osculate/verify.hpp"

namespace {

using namespace osculate;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Thrown for bad argument combinations CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << body;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::array<int, 2> parse_start(const std::vector<int>& start, int walkers) {
  if (walkers == 2) {
    if (start.size() != 1)
      throw UsageError("--start takes a single gap for two walkers, e.g. --start 1");
    if (start[0] < 0) throw UsageError("start gap must be nonnegative");
    return {start[0], 0};
  }
  if (start.size() != 2)
    throw UsageError("--start takes two comma-separated gaps for three walkers, e.g. --start 1,1");
  if (start[0] < 0 || start[1] < 0) throw UsageError("start gaps must be nonnegative");
  return {start[0], start[1]};
}

int jobs_default() {
  if (const char* env = std::getenv("OSCULATE_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

struct EnumerateArgs {
  std::string mode = "osculating";
  std::vector<int> start{1, 1};
  int walkers = 3;
  int n = -1;
  std::string format = "text";
  std::string output;
  int jobs = jobs_default();
};

int run_enumerate(const EnumerateArgs& a) {
  auto mode = mode_from_string(a.mode);
  if (!mode) throw UsageError("unknown mode: " + a.mode);
  WalkerSystem sys{a.walkers, parse_start(a.start, a.walkers), *mode};
  validate(sys);
  if (!start_is_enumerable(sys))
    throw UsageError(
        "vicious walkers need positive start gaps: a shared starting site is already a contact");
  CountTable table = enumerate_dp(sys, a.n, a.jobs);
  if (a.format == "json")
    write_output(dump(table_json(table, to_string(*mode), sys.start)), a.output);
  else if (a.format == "csv")
    write_output(table_csv(table), a.output);
  else
    write_output(table_text(table), a.output);
  return 0;
}

struct SeriesArgs {
  std::string name;
  std::vector<int> start{1, 1};
  int order = -1;
  std::string format = "text";
  std::string output;
};

int run_series(const SeriesArgs& a) {
  auto emit = [&](const auto& s) {
    if (a.format == "json")
      write_output(dump(series_json(s)), a.output);
    else if (a.format == "csv")
      write_output(series_csv(s), a.output);
    else
      write_output(series_text(s), a.output);
  };
  const int N = a.order;
  if (a.name == "T") {
    emit(solve_T(N));
  } else if (a.name == "X") {
    emit(solve_X(N));
  } else if (a.name == "baxter") {
    emit(baxter_gf(N));
  } else {
    auto start = parse_start(a.start, 3);
    int i = start[0], j = start[1];
    if (a.name == "osculating-length")
      emit(osculating_length_gf(i, j, N));
    else if (a.name == "vicious-length")
      emit(vicious_length_gf(i, j, N));
    else if (a.name == "osculating-refined")
      emit(osculation_refined_gf(i, j, N));
    else if (a.name == "vicious-complete")
      emit(vicious_complete_gf(i, j, N));
    else if (a.name == "osculating-complete")
      emit(osculating_complete_gf(i, j, N));
    else
      throw UsageError("unknown series name: " + a.name);
  }
  return 0;
}

struct VerifyArgs {
  std::string check;
  std::vector<int> start{1, 1};
  int order = -1;
  int jobs = jobs_default();
  std::string format = "text";
  std::string output;
};

int run_verify(const VerifyArgs& a) {
  auto start = parse_start(a.start, 3);
  VerifyOptions opt;
  opt.i = start[0];
  opt.j = start[1];
  opt.order = a.order;
  opt.jobs = a.jobs;
  std::vector<CheckReport> reports;
  if (a.check == "all") {
    reports = run_all(opt);
  } else {
    if (!is_check_name(a.check)) throw UsageError("unknown check: " + a.check);
    reports.push_back(run_check(a.check, opt));
  }
  if (a.format == "json")
    write_output(dump(reports_json(reports)), a.output);
  else if (a.format == "csv")
    write_output(reports_csv(reports), a.output);
  else
    write_output(reports_text(reports), a.output);
  return all_passed(reports) ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact series and enumeration toolkit for interacting directed walkers"};
  app.require_subcommand(1);
  auto format_check = CLI::IsMember({"json", "csv", "text"});

  EnumerateArgs ea;
  auto* enumerate =
      app.add_subcommand("enumerate", "tabulate walk counts by end gaps and contact number");
  enumerate->add_option("--mode", ea.mode, "interaction rule")
      ->check(CLI::IsMember({"noncrossing", "osculating", "vicious", "quasivicious"}));
  enumerate->add_option("--start", ea.start, "start gaps, e.g. 1,1")->delimiter(',')->expected(1, 2);
  enumerate->add_option("--walkers", ea.walkers, "number of walkers")->check(CLI::IsMember({2, 3}));
  enumerate->add_option("--n", ea.n, "maximum walk length")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--format", ea.format)->check(format_check);
  enumerate->add_option("--output,-o", ea.output, "write to a file instead of stdout");
  enumerate->add_option("--jobs", ea.jobs, "worker threads for the layer updates")
      ->check(CLI::PositiveNumber);

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "print a closed-form series");
  series->add_option("name", sa.name, "which series")
      ->required()
      ->check(CLI::IsMember({"T", "X", "baxter", "osculating-length", "vicious-length",
                             "osculating-refined", "vicious-complete", "osculating-complete"}));
  series->add_option("--start", sa.start, "start gaps, e.g. 1,1")->delimiter(',')->expected(1, 2);
  series->add_option("--order", sa.order, "truncation order in t")
      ->required()
      ->check(CLI::NonNegativeNumber);
  series->add_option("--format", sa.format)->check(format_check);
  series->add_option("--output,-o", sa.output, "write to a file instead of stdout");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check identities between counted and closed forms");
  std::vector<std::string> tokens = check_names();
  tokens.push_back("all");
  verify->add_option("check", va.check, "which check, or \"all\"")
      ->required()
      ->check(CLI::IsMember(tokens));
  verify->add_option("--start", va.start, "start gaps, e.g. 1,1")->delimiter(',')->expected(1, 2);
  verify->add_option("--order", va.order, "override every default truncation order")
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", va.jobs, "worker threads across checks")->check(CLI::PositiveNumber);
  verify->add_option("--format", va.format)->check(format_check);
  verify->add_option("--output,-o", va.output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*enumerate) return run_enumerate(ea);
    if (*series) return run_series(sa);
    return run_verify(va);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BadStart& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
