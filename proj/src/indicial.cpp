#include "indicial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "errors.hpp"

namespace mnp {

namespace {

void check_t(const Rat& t) {
  if (t < Rat(0) || t > Rat(1)) throw InvalidInput("t must lie in [0, 1]");
}

}  // namespace

double IndicialRoot::lambda() const {
  return sign * std::sqrt(lambda_sq.to_double());
}

std::vector<IndicialRoot> bspec(long long d, const Rat& t, const Rat& lambda_max) {
  check_t(t);
  if (!(lambda_max > Rat(0))) throw InvalidInput("lambda_max must be positive");
  const long long ad = std::llabs(d);
  const Rat csq = (t * Rat(d) / Rat(2)) * (t * Rat(d) / Rat(2));
  const Rat cap = lambda_max * lambda_max;

  std::vector<IndicialRoot> out;
  for (long long j = (d != 0 ? 0 : 1);; ++j) {
    Rat lsq = Rat(j * j + j * ad) + csq;
    if (lsq > cap) break;
    if (lsq.is_zero()) {
      out.push_back(IndicialRoot{0, lsq, {j}, d, t});
    } else {
      out.push_back(IndicialRoot{-1, lsq, {j}, d, t});
      out.push_back(IndicialRoot{+1, lsq, {j}, d, t});
    }
  }
  std::sort(out.begin(), out.end(), [](const IndicialRoot& a, const IndicialRoot& b) {
    if (a.sign != b.sign) return a.sign < b.sign;
    if (a.lambda_sq != b.lambda_sq) return a.sign >= 0 ? a.lambda_sq < b.lambda_sq
                                                       : b.lambda_sq < a.lambda_sq;
    return a.js < b.js;
  });
  return out;
}

long long j0_nullity(long long d, const Rat& t, int sign) {
  check_t(t);
  if (t.is_zero())
    throw InvalidInput("t = 0 merges the two j = 0 roots; no per-sign nullity is defined");
  if (sign != 1 && sign != -1) throw InvalidInput("sign must be +1 or -1");
  if (d == 0) return 0;
  return sign < 0 ? std::llabs(d) : 0;
}

Rat defect_region(long long d, const Rat& t, const Rat& delta) {
  check_t(t);
  if (!(delta > Rat(-1) && delta < Rat(1)))
    throw InvalidInput("weight outside the window (-1, 1)");
  if (d == 0) return Rat(0);
  const Rat line = -t * Rat(std::llabs(d)) / Rat(2);
  if (delta == line)
    throw InvalidInput("weight sits on an indicial root; not a Fredholm weight");
  return delta > line ? Rat(-std::llabs(d), 2) : Rat(std::llabs(d), 2);
}

std::vector<std::pair<long long, long long>> dirac_sphere_specsq(long long d, long long jmax) {
  if (jmax < 0) throw InvalidInput("jmax must be nonnegative");
  std::vector<std::pair<long long, long long>> out;
  for (long long j = (d > 0 ? 0 : 1); j <= jmax; ++j)
    out.emplace_back(j, j * (j + std::llabs(d)));
  return out;
}

}  // namespace mnp
