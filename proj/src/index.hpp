#pragma once

#include "masscharge.hpp"

namespace mnp {

// Dimension computed by three independent routes; the routes are always
// compared and a mismatch throws InternalError.
struct IndexBreakdown {
  long long scattering;
  long long defect;
  long long total;                 // scattering + defect
  long long via_positive_system;  // 2 * sum over R+ of pairing(alpha, kappa)
  long long via_weights;          // 4 * sum of adapted charges
  bool empty_flag;                // set only when total < 0
};

// 2 * sum over roots with pairing(alpha, mu) > 0 of pairing(alpha, kappa).
long long scattering_index(const MassChargePair& pair);

// -2 * sum over roots with pairing(alpha, mu) = 0, pairing(alpha, kappa) > 0
// of pairing(alpha, kappa); cross-checked against the per-root defect at
// (t = 1, delta = 1/2) with two copies per root.
long long defect_total(const MassChargePair& pair);

IndexBreakdown moduli_dimension(const MassChargePair& pair);
IndexBreakdown moduli_dimension(const MassChargePair& pair, const RatVec& tiebreak);

// total + flag-manifold base dimension.
long long stratum_dimension(const MassChargePair& pair);

}  // namespace mnp
