#pragma once

#include <vector>

#include "osculate/laurent_series.hpp"
#include "osculate/reports.hpp"
#include "osculate/series_roots.hpp"

namespace osculate {

// Closed-form counterparts of the enumerator's tables: everything here is
// built from the algebraic series T (three walkers) or X (two walkers), or
// from binomial determinants, never from the walk dynamic programming. The
// verification layer compares the two sides.

// Length series of osculating (i,j)-stars. Computes the T-form
//   (1-8t) O = 1 - 3T^{j+1}/(1+2T) + 3T^{i+j+1}/(2+T) - 3T^{i+1}/(1+2T)
// and the equivalent product form with prefactor 3t/(1+t), and insists the
// two agree before returning. The all-contact start (0,0) is excluded: with
// all three walkers on one site no first step exists, and the closed form
// does not cover that degenerate start.
TruncSeries<Rational> osculating_length_gf(int i, int j, int order);

// The explicit radical form for the unit-gap start:
//   (3 - 15t - 4t^2 - 3(1-t) sqrt(1-8t)) / (8t^2 (1+t)).
TruncSeries<Rational> osculating_length_radical_11(int order);

// Length series of vicious (i,j)-stars: (1-T^i)(1-T^j)/(1-8t). Zero whenever
// i or j is 0 (two walkers sharing a start can never separate strictly).
TruncSeries<Rational> vicious_length_gf(int i, int j, int order);

// Contact-weighted length series of osculating (i,j)-stars, coefficients
// polynomial in the weight u:
//   (1-8t) O = 1 - (4-u)/((1+T)^2 - uT^2)
//                * (T^{j+1} - T^{i+j+1}(2(1+T)-u)/(2(1+T)-uT) + T^{i+1}).
TruncSeries<UPoly> osculation_refined_gf(int i, int j, int order);

// Number of vicious (i,j)-stars of length n whose walkers end at ordinates
// -n+2r, -n+2r+2k, -n+2r+2k+2l: a 3x3 determinant of binomials C(n, r+a-b)
// with column offsets a in {0, k, k+l} and row offsets b in {0, i, i+j}.
BigInt gv_determinant(int i, int j, int k, int l, int r, int n);

// Complete generating function of vicious (i,j)-stars, assembled from the
// determinants with the absolute endpoint summed out. Identically zero when
// i or j is 0 (the determinant has two equal rows).
TruncSeries<Laurent2<Rational>> vicious_complete_gf(int i, int j, int order);

// Complete generating function of osculating (i,j)-stars via the linear
// relation to vicious stars:
//   (1+t) O_{i,j}(x,y) = x^i y^j
//       + t (x+y+xy)/(xy) (V_{i,j} + V_{i+1,j} + V_{i,j+1}).
// The 1/x, 1/y from the prefactor must cancel; a surviving negative exponent
// throws NegativeExponentSurvived.
TruncSeries<Laurent2<Rational>> osculating_complete_gf(int i, int j, int order);

// b_1..b_count with b_{n+1} = 2/((n+1)(n+2)^2) sum_r C(n+2,r)C(n+2,r+1)C(n+2,r+2).
std::vector<BigInt> baxter_numbers(int count);

// B(t) = sum_{n>=1} b_n t^n.
TruncSeries<Rational> baxter_gf(int order);

// Left-hand side of the linear differential equation for B:
//   12t - 6(1-2t)B - 2t(3-14t-8t^2)B' - t^2(1+t)(1-8t)B''
// truncated at t^{order-2}. Zero iff the input satisfies the equation there.
TruncSeries<Rational> baxter_ode_residual(const TruncSeries<Rational>& B);

// The web of coefficient identities tying the two smallest stars to the
// Baxter series: watermelon counts, alternating partial sums, and the
// single-step decompositions of near-watermelon configurations. Each
// identity is checked twice, once with complete generating functions from
// the enumerator and once with the determinant-assembled ones.
CheckReport baxter_identities(int order);

// The two-walker counterparts: kernel root X, boundary values W_i(0) = X^i
// and O_i(0) = X^i/(1-tuX), length formulas under (1-4t), and the u-weighted
// linear relation between complete osculating and vicious series, checked
// against the two-walker enumerator.
CheckReport two_walker_suite(int i, int order);

}  // namespace osculate
