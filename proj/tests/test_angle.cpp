#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matecomb/angle.hpp"

#include <numeric>

using namespace matecomb;

namespace {

Angle A(long a, long b) { return make_angle(a, b); }

std::vector<Angle> angles(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Angle> v;
  for (auto [a, b] : xs) v.push_back(A(a, b));
  return v;
}

}  // namespace

TEST_CASE("make_angle reduces and normalizes mod 1") {
  CHECK(A(3, 21) == A(1, 7));
  CHECK(A(-1, 7) == A(6, 7));
  CHECK(A(86, 255).str() == "86/255");
  CHECK(A(0, 5).str() == "0/1");
  CHECK(A(9, 3).is_zero());
  CHECK_THROWS_AS(make_angle(1, 0), InvalidInput);
  CHECK(Angle::parse("86/255") == A(86, 255));
  CHECK_THROWS_AS(Angle::parse("foo"), InvalidInput);
}

TEST_CASE("orbit under multiplication by d") {
  auto o = orbit(2, A(1, 7));
  CHECK(o.period == 3);
  CHECK(o.iterates == angles({{1, 7}, {2, 7}, {4, 7}}));

  auto o8 = orbit(2, A(86, 255));
  CHECK(o8.period == 8);
  CHECK(o8.iterates == angles({{86, 255}, {172, 255}, {89, 255}, {178, 255},
                               {101, 255}, {202, 255}, {149, 255}, {43, 255}}));

  auto o0 = orbit(2, Angle());
  CHECK(o0.period == 1);
  CHECK(o0.iterates == angles({{0, 1}}));

  CHECK_THROWS_AS(orbit(2, A(1, 6)), NotPeriodic);
  CHECK(period(2, A(1, 6)) == std::nullopt);
}

TEST_CASE("negate is the mod-1 involution") {
  CHECK(A(1, 7).negated() == A(6, 7));
  CHECK(Angle().negated() == Angle());
  CHECK(A(83, 255).negated() == A(172, 255));
  for (long a = 0; a < 63; ++a)
    CHECK(A(a, 63).negated().negated() == A(a, 63));
}

TEST_CASE("circular_cross detects strict interleaving") {
  CHECK(!circular_cross({A(1, 7), A(2, 7)}, {A(3, 7), A(4, 7)}));
  CHECK(circular_cross({A(1, 7), A(4, 7)}, {A(2, 7), A(6, 7)}));
  CHECK(!circular_cross({A(1, 3), A(2, 3)}, {A(1, 6), A(5, 6)}));
  // shared endpoint never crosses
  CHECK(!circular_cross({A(1, 7), A(2, 7)}, {A(2, 7), A(4, 7)}));
}

TEST_CASE("rotation_number") {
  CHECK(rotation_number(2, A(1, 7)) == RotationNumber(1, 3));
  CHECK(rotation_number(2, A(1, 3)) == RotationNumber(1, 2));
  CHECK(rotation_number(2, Angle()) == RotationNumber(0, 1));
  // the airplane orbit happens to rotate as well (single arc in degree 2)
  CHECK(rotation_number(2, A(3, 7)) == RotationNumber(2, 3));
  // a non-rotating orbit: 1/5 -> 2/5 -> 4/5 -> 3/5
  CHECK(rotation_number(2, A(1, 5)) == std::nullopt);
  CHECK_THROWS_AS(rotation_number(2, A(1, 4)), NotPeriodic);
}

TEST_CASE("rotation_number is an orbit invariant with mirror symmetry") {
  for (long a = 1; a < 31; ++a) {
    Angle t(a, 31);
    auto r = rotation_number(2, t);
    auto r2 = rotation_number(2, t.map(2));
    CHECK(r == r2);
    auto rm = rotation_number(2, t.negated());
    if (r) CHECK(*rm == r->conjugate());
  }
}

TEST_CASE("two_rotation_number") {
  CHECK(two_rotation_number(A(86, 255)) == RotationNumber(1, 4));
  CHECK(two_rotation_number(A(1, 3)) == RotationNumber(0, 1));
  // 13/63 fails to give 3/4: its even/odd sets rotate by 2/3
  auto r = two_rotation_number(A(13, 63));
  CHECK(r != RotationNumber(3, 4));
  CHECK_THROWS_AS(two_rotation_number(A(1, 7)), ShapeError);
}

TEST_CASE("two_rotation_number is constant on the orbit") {
  for (const Angle& t : orbit(2, A(86, 255)).iterates)
    CHECK(two_rotation_number(t) == RotationNumber(1, 4));
  for (const Angle& t : orbit(2, A(13, 63)).iterates)
    CHECK(two_rotation_number(t) == two_rotation_number(A(13, 63)));
}

TEST_CASE("arc_index") {
  CHECK(arc_index(2, A(1, 7)) == 0);
  CHECK(arc_index(3, A(3, 4)) == 1);
  CHECK(arc_index(3, A(1, 2)) == std::nullopt);
  CHECK(arc_index(2, Angle()) == std::nullopt);
}

TEST_CASE("tune substitutes binary words") {
  auto dr = tune({A(1, 3), A(2, 3)}, {A(1, 15), A(2, 15)});
  CHECK(dr.first == A(86, 255));
  CHECK(dr.second == A(89, 255));

  auto f13 = tune({A(1, 3), A(2, 3)}, {A(1, 7), A(2, 7)});
  CHECK(f13.first == A(22, 63));
  CHECK(f13.second == A(25, 63));

  auto fixed = tune({A(1, 3), A(2, 3)}, {Angle(), Angle()});
  CHECK(fixed.first == A(1, 3));
  CHECK(fixed.second == A(2, 3));

  auto bb = tune({A(1, 3), A(2, 3)}, {A(1, 3), A(2, 3)});
  CHECK(bb.first == A(6, 15));
  CHECK(bb.second == A(9, 15));

  CHECK_THROWS_AS(tune({A(1, 3), A(1, 3)}, {A(1, 7), A(2, 7)}), InvalidDescriptor);
}

TEST_CASE("tuned angles have the product period") {
  for (long q : {2L, 3L, 4L, 5L}) {
    auto orbs = enumerate_rotation_orbits(2, RotationNumber(1, q));
    auto inner = orbs[0];
    std::vector<Angle> sorted = inner.iterates;
    std::sort(sorted.begin(), sorted.end());
    auto tuned = tune({A(1, 3), A(2, 3)}, {sorted[0], sorted[1]});
    CHECK(period(2, tuned.first) == 2 * q);
    CHECK(period(2, tuned.second) == 2 * q);
  }
}

TEST_CASE("enumerate_rotation_orbits") {
  auto r13 = enumerate_rotation_orbits(2, RotationNumber(1, 3));
  REQUIRE(r13.size() == 1);
  {
    std::vector<Angle> s = r13[0].iterates;
    std::sort(s.begin(), s.end());
    CHECK(s == angles({{1, 7}, {2, 7}, {4, 7}}));
  }

  auto r14 = enumerate_rotation_orbits(2, RotationNumber(1, 4));
  REQUIRE(r14.size() == 1);
  {
    std::vector<Angle> s = r14[0].iterates;
    std::sort(s.begin(), s.end());
    CHECK(s == angles({{1, 15}, {2, 15}, {4, 15}, {8, 15}}));
  }

  auto r = enumerate_rotation_orbits(3, RotationNumber(1, 2));
  REQUIRE(r.size() == 2);
}

TEST_CASE("rotation orbits land one per arc for q <= 6") {
  for (int d : {2, 3}) {
    for (long q = 2; q <= 6; ++q)
      for (long p = 1; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        auto orbs = enumerate_rotation_orbits(d, RotationNumber(p, q));
        REQUIRE(static_cast<int>(orbs.size()) == d - 1);
        std::set<int> arcs;
        for (const auto& o : orbs) {
          auto k = arc_index(d, o.base);
          REQUIRE(k.has_value());
          arcs.insert(*k);
        }
        CHECK(static_cast<int>(arcs.size()) == d - 1);
      }
  }
}
