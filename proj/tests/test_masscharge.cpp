#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../src/errors.hpp"
#include "../src/masscharge.hpp"
#include "testutil.hpp"

using mnp::Basis;
using mnp::ChargeKind;
using mnp::Coords;
using mnp::IntegralityError;
using mnp::InvalidInput;
using mnp::Rat;
using mnp::RatVec;
using mnp::RootSystem;
using testutil::cached_system;

namespace {

mnp::MassChargePair su3_pair(long long k1, long long k2) {
  return mnp::make_pair(cached_system("A2"), {Rat(0), Rat(3)}, {Rat(k1), Rat(k2)});
}

}  // namespace

TEST_CASE("make_pair validates coordinate lengths") {
  const RootSystem& rs = cached_system("A2");
  CHECK_THROWS_AS(mnp::make_pair(rs, {Rat(1)}, {Rat(1), Rat(2)}), InvalidInput);
  CHECK_THROWS_AS(mnp::make_pair(rs, {Rat(1), Rat(0)}, {Rat(1)}), InvalidInput);
  auto pair = mnp::make_pair(rs, {Rat(1), Rat(0)}, {Rat(1), Rat(2)});
  CHECK(pair.mu.basis == Basis::Coweight);
  CHECK(pair.kappa.basis == Basis::Coroot);
}

TEST_CASE("integrality is integrality of the coroot coordinates") {
  const RootSystem& rs = cached_system("A2");
  CHECK(mnp::check_integrality(rs, mnp::CartanElement{Basis::Coroot, {Rat(1), Rat(-2)}}));
  CHECK_FALSE(
      mnp::check_integrality(rs, mnp::CartanElement{Basis::Coroot, {Rat(1, 2), Rat(0)}}));
}

TEST_CASE("charge report on the su(3) golden cases") {
  auto run = [](long long k1, long long k2) {
    auto pair = su3_pair(k1, k2);
    auto ps = mnp::positive_system(*pair.rs, pair.mu, pair.kappa, mnp::default_tiebreak(2));
    return mnp::charge_report(pair, ps);
  };

  auto rep = run(1, 2);
  REQUIRE(rep.adapted_base == std::vector<Coords>{{0, 1}, {1, 0}});
  REQUIRE(rep.entries.size() == 2);
  CHECK(rep.entries[0].base_index == 0);
  CHECK(rep.entries[0].value == 2);
  CHECK(rep.entries[0].kind == ChargeKind::Magnetic);
  CHECK(rep.entries[1].base_index == 1);
  CHECK(rep.entries[1].value == 1);
  CHECK(rep.entries[1].kind == ChargeKind::Holomorphic);

  rep = run(0, 2);
  REQUIRE(rep.entries.size() == 2);
  CHECK(rep.entries[0].value == 2);
  CHECK(rep.entries[0].kind == ChargeKind::Magnetic);
  CHECK(rep.entries[1].value == 0);
  CHECK(rep.entries[1].kind == ChargeKind::Holomorphic);
}

TEST_CASE("charge report rejects non-lattice charges") {
  auto pair = mnp::make_pair(cached_system("A2"), {Rat(0), Rat(3)}, {Rat(1, 2), Rat(0)});
  auto ps = mnp::positive_system(*pair.rs, pair.mu, pair.kappa, mnp::default_tiebreak(2));
  CHECK_THROWS_AS(mnp::charge_report(pair, ps), IntegralityError);
}

TEST_CASE("charge expansion reconstructs kappa on random data") {
  testutil::Rng rng(77003);
  const auto groups = testutil::simple_groups_up_to_rank8();
  for (int iter = 0; iter < 150; ++iter) {
    const RootSystem& rs = cached_system(groups[rng.pick(0, groups.size() - 1)]);
    RatVec mass = testutil::random_mass(rng, rs.rank);
    Coords kc = testutil::random_charge(rng, rs.rank);
    RatVec charge(rs.rank);
    for (int i = 0; i < rs.rank; ++i) charge[i] = Rat(kc[i]);
    auto pair = mnp::make_pair(rs, mass, charge);
    auto ps = mnp::positive_system(rs, pair.mu, pair.kappa, mnp::default_tiebreak(rs.rank));
    auto rep = mnp::charge_report(pair, ps);

    REQUIRE(rep.adapted_base == ps.base);
    REQUIRE(rep.entries.size() == ps.base.size());
    Coords recon(rs.rank, 0);
    for (const auto& e : rep.entries) {
      auto c = mnp::coroot_coords(rs, rep.adapted_base[e.base_index]);
      for (int j = 0; j < rs.rank; ++j) recon[j] += e.value * c[j];
      bool magnetic = !pairing(rs, rep.adapted_base[e.base_index], pair.mu).is_zero();
      CHECK((e.kind == ChargeKind::Magnetic) == magnetic);
    }
    CHECK(recon == kc);
  }
}

TEST_CASE("breaking report on the su(3) golden cases") {
  auto brk = mnp::breaking_report(su3_pair(0, 2));
  CHECK(brk.centralizer_mu_dim == 4);
  CHECK(brk.stabilizer_mu_kappa_dim == 2);
  CHECK(brk.base_dim == 2);
  CHECK(brk.roots_mu_positive == 2);
  CHECK(brk.roots_mu_zero == 2);
  CHECK(brk.roots_mu_zero_kappa_nonzero == 2);

  brk = mnp::breaking_report(su3_pair(1, 2));
  CHECK(brk.centralizer_mu_dim == 4);
  CHECK(brk.stabilizer_mu_kappa_dim == 4);
  CHECK(brk.base_dim == 0);
}

TEST_CASE("generic mass leaves only the torus") {
  const RootSystem& rs = cached_system("B3");
  auto pair = mnp::make_pair(rs, {Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(0)});
  auto brk = mnp::breaking_report(pair);
  CHECK(brk.centralizer_mu_dim == 3);
  CHECK(brk.stabilizer_mu_kappa_dim == 3);
  CHECK(brk.base_dim == 0);
  CHECK(brk.roots_mu_positive == 9);
  CHECK(brk.roots_mu_zero == 0);
}

TEST_CASE("zero mass centralizes everything") {
  const RootSystem& rs = cached_system("A2");
  auto pair = mnp::make_pair(rs, {Rat(0), Rat(0)}, {Rat(1), Rat(1)});
  auto brk = mnp::breaking_report(pair);
  CHECK(brk.centralizer_mu_dim == 8);
  CHECK(brk.roots_mu_positive == 0);
  CHECK(brk.roots_mu_zero == 6);
}

TEST_CASE("breaking counts are consistent on random data") {
  testutil::Rng rng(512);
  const auto groups = testutil::simple_groups_up_to_rank8();
  for (int iter = 0; iter < 150; ++iter) {
    const RootSystem& rs = cached_system(groups[rng.pick(0, groups.size() - 1)]);
    auto pair = mnp::make_pair(rs, testutil::random_mass(rng, rs.rank, -2, 2), [&] {
      RatVec v(rs.rank);
      for (int i = 0; i < rs.rank; ++i) v[i] = Rat(rng.pick(-3, 3));
      return v;
    }());
    auto brk = mnp::breaking_report(pair);
    CHECK(brk.base_dim == brk.centralizer_mu_dim - brk.stabilizer_mu_kappa_dim);
    CHECK(brk.base_dim >= 0);
    CHECK(brk.base_dim % 2 == 0);
    CHECK(brk.roots_mu_positive * 2 + brk.roots_mu_zero ==
          static_cast<long long>(rs.roots.size()));
    CHECK(brk.roots_mu_zero_kappa_nonzero <= brk.roots_mu_zero);
    CHECK(brk.roots_mu_zero_kappa_nonzero == brk.base_dim);
  }
}
