#pragma once

#include <stdexcept>
#include <string>

namespace osculate {

// Exact-arithmetic contract violations. Every computation here is exact, so
// any of these firing means the caller broke a precondition or an algebraic
// identity upstream is false; none of them is a recoverable runtime condition.

struct NonInvertibleConstantTerm : std::domain_error {
  using std::domain_error::domain_error;
};

struct BadConstantTerm : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonzeroLowOrderTerm : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonzeroValuation : std::domain_error {
  using std::domain_error::domain_error;
};

// A generating function that must live in the polynomial ring (all exponents
// nonnegative) came out with a negative exponent after assembly.
struct NegativeExponentSurvived : std::domain_error {
  using std::domain_error::domain_error;
};

// The constant-in-x part of a series that splits into strictly positive and
// strictly negative parts turned out nonzero.
struct NonzeroConstantPart : std::domain_error {
  using std::domain_error::domain_error;
};

// Start gaps for which the requested closed form is undefined.
struct BadStart : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Internal consistency guard: a series coefficient escaped its expected
// exponent support window. Indicates a bug, not bad input.
struct SupportWindowExceeded : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace osculate
