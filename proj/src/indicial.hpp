#pragma once

#include <utility>
#include <vector>

#include "rational.hpp"

namespace mnp {

// One element of the b-spectrum of the boundary model operator on the
// degree-d line bundle, at deformation parameter t in [0,1]:
//   lambda = sign * sqrt(lambda_sq),  lambda_sq = j^2 + j|d| + (t d / 2)^2.
// Comparisons use (sign, lambda_sq) exactly; no floating point.
// sign 0 marks the single merged root at lambda = 0 (t = 0, j = 0, d != 0),
// where both sign branches collide; js lists the contributing j values.
struct IndicialRoot {
  int sign;
  Rat lambda_sq;
  std::vector<long long> js;
  long long d;
  Rat t;
  double lambda() const;
};

// All indicial roots with |lambda| <= lambda_max, sorted by lambda.
// j = 0 contributes only when d != 0; for d = 0 the value 0 is excluded.
std::vector<IndicialRoot> bspec(long long d, const Rat& t, const Rat& lambda_max);

// Nullspace dimension of the boundary operator at the j = 0 root selected
// by sign: |d| at lambda = -t|d|/2, 0 at +t|d|/2, 0 for d = 0.
// t = 0 is rejected (the two j = 0 roots merge there).
long long j0_nullity(long long d, const Rat& t, int sign);

// Piecewise-constant defect per line-bundle copy in the weight window
// |delta| < 1: 0 for d = 0, -|d|/2 above the line delta = -t|d|/2 and
// +|d|/2 below it. The weight on that line (the merged line delta = 0 at
// t = 0) is not a Fredholm weight and is rejected.
Rat defect_region(long long d, const Rat& t, const Rat& delta);

// Eigenvalues j(j + |d|) of the squared Dirac operator on the degree-d
// line bundle over the sphere, j = 0..jmax, with j = 0 present iff d > 0.
std::vector<std::pair<long long, long long>> dirac_sphere_specsq(long long d, long long jmax);

}  // namespace mnp
