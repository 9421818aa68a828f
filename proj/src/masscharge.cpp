#include "masscharge.hpp"

#include "errors.hpp"

namespace mnp {

MassChargePair make_pair(const RootSystem& rs, RatVec mass, RatVec charge) {
  if (static_cast<int>(mass.size()) != rs.rank)
    throw InvalidInput("mass vector length " + std::to_string(mass.size()) +
                       " does not match rank " + std::to_string(rs.rank));
  if (static_cast<int>(charge.size()) != rs.rank)
    throw InvalidInput("charge vector length " + std::to_string(charge.size()) +
                       " does not match rank " + std::to_string(rs.rank));
  return MassChargePair{&rs,
                        CartanElement{Basis::Coweight, std::move(mass)},
                        CartanElement{Basis::Coroot, std::move(charge)}};
}

bool check_integrality(const RootSystem& rs, const CartanElement& kappa) {
  if (kappa.basis != Basis::Coroot) throw InvalidInput("integrality check expects coroot coordinates");
  if (static_cast<int>(kappa.coeffs.size()) != rs.rank)
    throw InvalidInput("charge vector length does not match rank");
  for (const Rat& k : kappa.coeffs)
    if (!k.is_integer()) return false;
  return true;
}

ChargeReport charge_report(const MassChargePair& pair, const PositiveSystem& ps) {
  const RootSystem& rs = *pair.rs;
  if (!check_integrality(rs, pair.kappa))
    throw IntegralityError("charge is not in the coroot lattice");

  const int n = rs.rank;
  RatMat m(n, RatVec(n));
  for (int i = 0; i < n; ++i) {
    auto cc = coroot_coords(rs, ps.base[i]);
    for (int j = 0; j < n; ++j) m[j][i] = Rat(cc[j]);
  }
  auto sol = solve_linear(m, pair.kappa.coeffs);
  if (!sol) throw InternalError("adapted coroots are not a basis");

  ChargeReport rep;
  rep.adapted_base = ps.base;
  for (int i = 0; i < n; ++i) {
    if (!(*sol)[i].is_integer())
      throw InternalError("charge on an adapted coroot is not an integer");
    ChargeKind kind = pairing(rs, ps.base[i], pair.mu).is_zero() ? ChargeKind::Holomorphic
                                                                 : ChargeKind::Magnetic;
    rep.entries.push_back(ChargeEntry{i, (*sol)[i].num(), kind});
  }
  return rep;
}

BreakingReport breaking_report(const MassChargePair& pair) {
  const RootSystem& rs = *pair.rs;
  BreakingReport rep{rs.rank, rs.rank, 0, 0, 0, 0};
  for (const Coords& alpha : rs.roots) {
    Rat pm = pairing(rs, alpha, pair.mu);
    if (pm.sign() > 0) ++rep.roots_mu_positive;
    if (!pm.is_zero()) continue;
    ++rep.roots_mu_zero;
    ++rep.centralizer_mu_dim;
    Rat pk = pairing(rs, alpha, pair.kappa);
    if (pk.is_zero())
      ++rep.stabilizer_mu_kappa_dim;
    else
      ++rep.roots_mu_zero_kappa_nonzero;
  }
  rep.base_dim = rep.centralizer_mu_dim - rep.stabilizer_mu_kappa_dim;
  return rep;
}

}  // namespace mnp
