#pragma once

#include <string>
#include <vector>

#include "osculate/reports.hpp"

namespace osculate {

// Options shared by all verification checks. `order` of -1 means "use the
// per-check default"; an explicit order overrides every order a check takes,
// including the univariate companion order of the boundary checks. `jobs`
// sizes the worker pool used by run_all; each check is internally sequential.
struct VerifyOptions {
  int i = 1;
  int j = 1;
  int order = -1;
  int jobs = 1;
};

// Canonical list of check names accepted by run_check, in suite order.
// "all" is not in the list; it is handled by run_all.
const std::vector<std::string>& check_names();

bool is_check_name(const std::string& name);

// Default primary order for a named check (the order run_check uses when
// options.order < 0). Throws std::invalid_argument for unknown names.
int default_order(const std::string& name);

// Runs one named check. Throws std::invalid_argument for unknown names and
// BadStart for starts a check rejects.
CheckReport run_check(const std::string& name, const VerifyOptions& options);

// Runs every check once at its default order (or options.order for all of
// them if set), distributing checks over options.jobs worker threads.
// Reports come back in canonical suite order regardless of job count.
std::vector<CheckReport> run_all(const VerifyOptions& options);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace osculate
