#include "index.hpp"

#include <string>

#include "errors.hpp"
#include "indicial.hpp"

namespace mnp {

namespace {

long long as_integer(const Rat& r) {
  if (!r.is_integer()) throw IntegralityError("charge pairing is not an integer");
  return r.num();
}

}  // namespace

long long scattering_index(const MassChargePair& pair) {
  const RootSystem& rs = *pair.rs;
  long long sum = 0;
  for (const Coords& alpha : rs.roots)
    if (pairing(rs, alpha, pair.mu).sign() > 0)
      sum += as_integer(pairing(rs, alpha, pair.kappa));
  return 2 * sum;
}

long long defect_total(const MassChargePair& pair) {
  const RootSystem& rs = *pair.rs;
  long long sum = 0;
  Rat per_root;
  for (const Coords& alpha : rs.roots) {
    if (!pairing(rs, alpha, pair.mu).is_zero()) continue;
    long long k = as_integer(pairing(rs, alpha, pair.kappa));
    if (k > 0) sum += k;
    per_root += Rat(2) * defect_region(k, Rat(1), Rat(1, 2));
  }
  const long long total = -2 * sum;
  if (per_root != Rat(total))
    throw InternalError("defect total disagrees with the per-root defect sum");
  return total;
}

IndexBreakdown moduli_dimension(const MassChargePair& pair) {
  return moduli_dimension(pair, default_tiebreak(pair.rs->rank));
}

IndexBreakdown moduli_dimension(const MassChargePair& pair, const RatVec& tiebreak) {
  const RootSystem& rs = *pair.rs;
  if (!check_integrality(rs, pair.kappa))
    throw IntegralityError("charge is not in the coroot lattice");

  IndexBreakdown b{};
  b.scattering = scattering_index(pair);
  b.defect = defect_total(pair);
  b.total = b.scattering + b.defect;

  PositiveSystem ps = positive_system(rs, pair.mu, pair.kappa, tiebreak);
  long long pos_sum = 0;
  for (const Coords& alpha : ps.positive_roots)
    pos_sum += as_integer(pairing(rs, alpha, pair.kappa));
  b.via_positive_system = 2 * pos_sum;

  ChargeReport charges = charge_report(pair, ps);
  long long charge_sum = 0;
  for (const ChargeEntry& e : charges.entries) charge_sum += e.value;
  b.via_weights = 4 * charge_sum;

  if (b.total != b.via_positive_system || b.total != b.via_weights)
    throw InternalError("dimension routes disagree: scattering+defect = " +
                        std::to_string(b.total) + ", positive system = " +
                        std::to_string(b.via_positive_system) + ", weights = " +
                        std::to_string(b.via_weights));
  if (b.total % 4 != 0)
    throw InternalError("dimension " + std::to_string(b.total) + " is not a multiple of 4");
  b.empty_flag = b.total < 0;
  return b;
}

long long stratum_dimension(const MassChargePair& pair) {
  return moduli_dimension(pair).total + breaking_report(pair).base_dim;
}

}  // namespace mnp
