#pragma once

#include "rootsys.hpp"

namespace mnp {

// Validated mass/charge pair: mass in the coweight basis, charge in the
// coroot basis, both of full rank length.
struct MassChargePair {
  const RootSystem* rs;
  CartanElement mu;
  CartanElement kappa;
};

MassChargePair make_pair(const RootSystem& rs, RatVec mass, RatVec charge);

// True exactly when every coroot coordinate of kappa is an integer.
bool check_integrality(const RootSystem& rs, const CartanElement& kappa);

enum class ChargeKind { Magnetic, Holomorphic };

struct ChargeEntry {
  int base_index;      // position in the adapted base (sorted by coordinates)
  long long value;     // coefficient of kappa on the adapted coroot
  ChargeKind kind;     // Magnetic when the base root pairs nonzero with mu
};

struct ChargeReport {
  std::vector<ChargeEntry> entries;
  std::vector<Coords> adapted_base;
};

// Expands kappa in the adapted coroot basis by an exact linear solve.
// Throws IntegralityError when kappa is outside the coroot lattice.
ChargeReport charge_report(const MassChargePair& pair, const PositiveSystem& ps);

struct BreakingReport {
  long long centralizer_mu_dim;        // rank + #{alpha : pairing(alpha,mu) = 0}
  long long stabilizer_mu_kappa_dim;   // rank + #{alpha : both pairings 0}
  long long base_dim;                  // difference of the two
  long long roots_mu_positive;
  long long roots_mu_zero;
  long long roots_mu_zero_kappa_nonzero;
};

BreakingReport breaking_report(const MassChargePair& pair);

}  // namespace mnp
