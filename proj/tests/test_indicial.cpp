#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../src/errors.hpp"
#include "../src/indicial.hpp"

using mnp::IndicialRoot;
using mnp::InvalidInput;
using mnp::Rat;

TEST_CASE("bspec for d=1, t=1 lists the four smallest roots") {
  auto roots = mnp::bspec(1, Rat(1), Rat(2));
  REQUIRE(roots.size() == 4);
  CHECK(roots[0].sign == -1);
  CHECK(roots[0].lambda_sq == Rat(9, 4));
  CHECK(roots[0].js == std::vector<long long>{1});
  CHECK(roots[1].sign == -1);
  CHECK(roots[1].lambda_sq == Rat(1, 4));
  CHECK(roots[1].js == std::vector<long long>{0});
  CHECK(roots[2].sign == 1);
  CHECK(roots[2].lambda_sq == Rat(1, 4));
  CHECK(roots[3].sign == 1);
  CHECK(roots[3].lambda_sq == Rat(9, 4));
  CHECK(roots[0].lambda() == doctest::Approx(-1.5));
  CHECK(roots[1].lambda() == doctest::Approx(-0.5));
  CHECK(roots[2].lambda() == doctest::Approx(0.5));
  CHECK(roots[3].lambda() == doctest::Approx(1.5));
}

TEST_CASE("bspec for d=0 excludes lambda zero") {
  auto roots = mnp::bspec(0, Rat(1, 3), Rat(2));
  REQUIRE(roots.size() == 4);
  CHECK(roots[0].lambda_sq == Rat(4));
  CHECK(roots[0].sign == -1);
  CHECK(roots[1].lambda_sq == Rat(1));
  CHECK(roots[1].sign == -1);
  CHECK(roots[2].lambda_sq == Rat(1));
  CHECK(roots[2].sign == 1);
  CHECK(roots[3].lambda_sq == Rat(4));
  CHECK(roots[3].sign == 1);
  for (const auto& r : roots) CHECK_FALSE(r.lambda_sq.is_zero());
}

TEST_CASE("bspec merges the j=0 pair at t=0") {
  auto roots = mnp::bspec(2, Rat(0), Rat(1, 2));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].sign == 0);
  CHECK(roots[0].lambda_sq == Rat(0));
  CHECK(roots[0].js == std::vector<long long>{0});

  // at t > 0 the pair splits
  auto split = mnp::bspec(2, Rat(1, 2), Rat(1, 2));
  REQUIRE(split.size() == 2);
  CHECK(split[0].sign == -1);
  CHECK(split[0].lambda_sq == Rat(1, 4));
  CHECK(split[1].sign == 1);
  CHECK(split[1].lambda_sq == Rat(1, 4));
}

TEST_CASE("bspec rows are sorted by lambda") {
  for (long long d : {-5LL, -1LL, 0LL, 1LL, 4LL}) {
    for (const Rat& t : {Rat(0), Rat(1, 3), Rat(1)}) {
      auto roots = mnp::bspec(d, t, Rat(6));
      for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].lambda() < roots[i + 1].lambda() + 1e-12);
      for (size_t i = 0; i + 1 < roots.size(); ++i) {
        if (roots[i].sign != roots[i + 1].sign) CHECK(roots[i].sign < roots[i + 1].sign);
      }
    }
  }
}

TEST_CASE("bspec depends on |d| only through lambda_sq") {
  auto plus = mnp::bspec(3, Rat(1, 2), Rat(4));
  auto minus = mnp::bspec(-3, Rat(1, 2), Rat(4));
  REQUIRE(plus.size() == minus.size());
  for (size_t i = 0; i < plus.size(); ++i) {
    CHECK(plus[i].lambda_sq == minus[i].lambda_sq);
    CHECK(plus[i].sign == minus[i].sign);
  }
}

TEST_CASE("bspec validates its window") {
  CHECK_THROWS_AS(mnp::bspec(1, Rat(-1, 2), Rat(1)), InvalidInput);
  CHECK_THROWS_AS(mnp::bspec(1, Rat(3, 2), Rat(1)), InvalidInput);
  CHECK_THROWS_AS(mnp::bspec(1, Rat(1), Rat(0)), InvalidInput);
  CHECK_THROWS_AS(mnp::bspec(1, Rat(1), Rat(-2)), InvalidInput);
}

TEST_CASE("j0 nullity jumps only across the negative branch") {
  CHECK(mnp::j0_nullity(3, Rat(1, 2), -1) == 3);
  CHECK(mnp::j0_nullity(3, Rat(1, 2), +1) == 0);
  CHECK(mnp::j0_nullity(-3, Rat(1, 2), -1) == 3);
  CHECK(mnp::j0_nullity(-3, Rat(1, 2), +1) == 0);
  CHECK(mnp::j0_nullity(0, Rat(1, 2), -1) == 0);
  CHECK(mnp::j0_nullity(0, Rat(1, 2), +1) == 0);
  CHECK_THROWS_AS(mnp::j0_nullity(3, Rat(0), -1), InvalidInput);
  CHECK_THROWS_AS(mnp::j0_nullity(3, Rat(1, 2), 0), InvalidInput);
  CHECK_THROWS_AS(mnp::j0_nullity(3, Rat(1, 2), 2), InvalidInput);
  CHECK_THROWS_AS(mnp::j0_nullity(3, Rat(2), -1), InvalidInput);
}

TEST_CASE("defect region golden values") {
  CHECK(mnp::defect_region(1, Rat(1), Rat(1, 2)) == Rat(-1, 2));
  CHECK(mnp::defect_region(0, Rat(1), Rat(1, 2)) == Rat(0));
  CHECK(mnp::defect_region(2, Rat(1, 2), Rat(0)) == Rat(-1));
  CHECK(mnp::defect_region(2, Rat(1, 2), Rat(-3, 4)) == Rat(1));
  CHECK(mnp::defect_region(-2, Rat(1, 2), Rat(-3, 4)) == Rat(1));
  CHECK(mnp::defect_region(5, Rat(0), Rat(-1, 2)) == Rat(5, 2));
  CHECK(mnp::defect_region(5, Rat(0), Rat(1, 2)) == Rat(-5, 2));
}

TEST_CASE("defect region rejects the indicial line and the window edge") {
  CHECK_THROWS_AS(mnp::defect_region(2, Rat(1, 2), Rat(-1, 2)), InvalidInput);
  CHECK_THROWS_AS(mnp::defect_region(2, Rat(0), Rat(0)), InvalidInput);
  CHECK_THROWS_AS(mnp::defect_region(1, Rat(1), Rat(1)), InvalidInput);
  CHECK_THROWS_AS(mnp::defect_region(1, Rat(1), Rat(-1)), InvalidInput);
  CHECK_THROWS_AS(mnp::defect_region(1, Rat(1), Rat(3, 2)), InvalidInput);
  CHECK_THROWS_AS(mnp::defect_region(1, Rat(-1, 4), Rat(1, 2)), InvalidInput);
  // the positive branch at delta = +t|d|/2 stays Fredholm
  CHECK(mnp::defect_region(1, Rat(1), Rat(1, 2)) == Rat(-1, 2));
  CHECK(mnp::defect_region(2, Rat(1, 2), Rat(1, 2)) == Rat(-1));
}

TEST_CASE("defect values are antisymmetric across the line") {
  for (long long d = -12; d <= 12; ++d) {
    if (d == 0) continue;
    // choose t so the line sits at -1/2, then straddle it
    Rat t = Rat(1, d < 0 ? -d : d);
    Rat below = mnp::defect_region(d, t, Rat(-3, 4));
    Rat above = mnp::defect_region(d, t, Rat(-1, 4));
    CHECK(below + above == Rat(0));
    CHECK(below - above == Rat(d < 0 ? -d : d));
  }
}

TEST_CASE("dirac sphere spectrum goldens") {
  using Row = std::pair<long long, long long>;
  CHECK(mnp::dirac_sphere_specsq(2, 2) == std::vector<Row>{{0, 0}, {1, 3}, {2, 8}});
  CHECK(mnp::dirac_sphere_specsq(-2, 2) == std::vector<Row>{{1, 3}, {2, 8}});
  CHECK(mnp::dirac_sphere_specsq(0, 2) == std::vector<Row>{{1, 1}, {2, 4}});
  CHECK_THROWS_AS(mnp::dirac_sphere_specsq(1, -1), InvalidInput);
}

TEST_CASE("dirac zero mode count matches the j0 picture") {
  // a zero eigenvalue exists exactly when d > 0, at j = 0
  for (long long d = -4; d <= 4; ++d) {
    auto rows = mnp::dirac_sphere_specsq(d, 3);
    bool has_zero = false;
    for (const auto& [j, eig] : rows) has_zero = has_zero || eig == 0;
    CHECK(has_zero == (d > 0));
  }
}
