#pragma once

#include "osculate/laurent_series.hpp"

namespace osculate {

// Power-series roots of the algebraic equations behind the walker counts.
// Each solver iterates its defining fixed-point form; one extra pass per
// coefficient order pins the truncation exactly.

// T = 2t(1+T)^2, T(0) = 0. Coefficients: 0, 2, 8, 40, 224, ...
TruncSeries<Rational> solve_T(int order);

// Same T via the radical form (1 - 4t - sqrt(1-8t)) / (4t); kept separate so
// tests can compare two genuinely different routes.
TruncSeries<Rational> solve_T_radical(int order);

// The power-series root Y0(x;t) of the three-walker kernel
//   K(x,y) = xy - t(1+x)(1+y)(x+y),
// i.e. Y0 = (t/x)(1+x)(1+Y0)(x+Y0), with Laurent-in-x coefficients.
// Each t^n coefficient must keep its x-support inside [-n-2, n+2] (and inside
// [-window, window]); violation raises SupportWindowExceeded, which would
// indicate an internal bug rather than bad input. `window` must be >= order;
// pass window = -1 for the default order+2.
TruncSeries<Laurent1<Rational>> solve_Y0(int order, int window = -1);

// Two-walker kernel root: tX^2 - (1-2t)X + t = 0 taken as X = t(1+X)^2,
// X(0) = 0. Coefficients are the Catalan numbers shifted: t + 2t^2 + 5t^3 + ...
TruncSeries<Rational> solve_X(int order);

}  // namespace osculate
