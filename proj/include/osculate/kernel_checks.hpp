#pragma once

#include "osculate/laurent_series.hpp"
#include "osculate/reports.hpp"
#include "osculate/upoly.hpp"

namespace osculate {

// Functional-equation and closed-form checks for the three-walker model. Each
// check recomputes its inputs from scratch (walk enumeration on one side,
// algebraic roots and closed forms on the other) and compares coefficientwise
// in exact arithmetic, reporting every identity it examined.

// The step polynomial xy - t(1+x)(1+y)(x+y) that annihilates the complete
// generating function up to boundary terms.
TruncSeries<Laurent2<Rational>> kernel_series(int order);
TruncSeries<Laurent2<UPoly>> kernel_series_weighted(int order);

// Last-step transfer identity for the touch-and-go model with start (i, j),
// checked against the enumerated complete series at the given bivariate order.
CheckReport check_main_equation(int i, int j, int order);

// The orbit of (x, Y0) under the two rational reflections that preserve the
// step polynomial: involutivity, closure after six elements, and the kernel
// vanishing on every element, all as exact series identities in x and t.
CheckReport check_orbit(int order);

// The three orbit elements whose series expansions stay in the frame give a
// linear system for the boundary series; checks it, its alternating
// combination, and the specializations at x = 1.
CheckReport check_framed_system(int i, int j, int order_univariate);

// Reconstructs both boundary series from the exponent-sign split of the
// combined boundary equation and then rebuilds the full complete series from
// them, comparing everything against the enumeration.
CheckReport check_boundary_reconstruction(int i, int j, int order,
                                          int order_univariate);

// Walks cut at their first touch: slicing relations against the contact-free
// model, the one-catalytic-variable boundary equation, and its sign split.
CheckReport check_quasivicious(int i, int j, int order, int order_univariate);

// Contact-weighted transfer identity and the weighted boundary sum at x = 1.
CheckReport check_refined_equation(int i, int j, int order);

// Length generating functions (touch-and-go and contact-free) against their
// closed forms in the algebraic root T, plus the scaffolding identities
// relating T to the discriminant 1 - 8t.
CheckReport check_length_closed_forms(int i, int j, int order);

// One-step decomposition of the complete touch-and-go series into three
// contact-free series, verified both via enumeration and via first-contact
// slices of the cut model.
CheckReport check_complete_assembly(int i, int j, int order);

// Contact-weighted length series against its closed form and the weight
// specializations that collapse it to the plain and contact-free counts.
CheckReport check_refined_closed_form(int i, int j, int order);

// Determinant formula for endpoint-resolved contact-free counts against the
// exhaustive enumeration, including the vanishing margin outside the
// reachable window.
CheckReport check_determinant_counts(int i, int j, int n_max);

// Differential equation satisfied by the watermelon-number series, plus the
// reconstruction of that series from enumerated touch-and-go watermelons.
CheckReport baxter_ode_check(int order);

}  // namespace osculate
