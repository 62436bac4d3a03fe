#include <doctest.h>

#include "matecomb/landing.hpp"

#include <algorithm>
#include <set>

using namespace matecomb;

namespace {

Angle A(long a, long b) { return make_angle(a, b); }

PolynomialDescriptor airplane() { return make_descriptor(2, A(3, 7), A(4, 7)); }
PolynomialDescriptor rabbit() { return make_descriptor(2, A(1, 7), A(2, 7)); }
PolynomialDescriptor basilica() { return make_descriptor(2, A(1, 3), A(2, 3)); }

std::set<std::vector<Angle>> class_set(const LandingTable& t) {
  std::set<std::vector<Angle>> s;
  for (uint32_t c = 0; c < t.class_count(); ++c) s.insert(t.class_angles(c));
  return s;
}

std::vector<Angle> angles(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Angle> v;
  for (auto [a, b] : xs) v.push_back(A(a, b));
  return v;
}

}  // namespace

TEST_CASE("itinerary codes orbits against the reference partition") {
  auto ap = airplane();
  auto it = itinerary(ap, A(3, 7), A(3, 7));
  CHECK(it.symbols == std::vector<int>{1, 0, -1});  // 5/7 hits the boundary 5/7

  auto rb = rabbit();
  auto it2 = itinerary(rb, A(1, 7), A(1, 7));
  CHECK(it2.symbols == std::vector<int>{1, 1, -1});  // 4/7 = (1/7+1)/2 exactly

  // first symbol of the reference itself names the arc holding it
  auto it3 = itinerary(ap, A(3, 7), A(4, 7));
  CHECK(it3.symbols.size() == 3);
}

TEST_CASE("landing_table for the rabbit at N=3") {
  auto t = landing_table(rabbit(), 3);
  auto classes = class_set(t);
  CHECK(classes.count(angles({{1, 7}, {2, 7}, {4, 7}})));
  CHECK(classes.count(angles({{0, 1}})));
  CHECK(classes.count(angles({{3, 7}})));
  CHECK(classes.count(angles({{5, 7}})));
  CHECK(classes.count(angles({{6, 7}})));
  CHECK(t.class_count() == 5);
}

TEST_CASE("landing_table for the basilica at N=2") {
  auto t = landing_table(basilica(), 2);
  auto classes = class_set(t);
  CHECK(classes.count(angles({{1, 3}, {2, 3}})));
  CHECK(classes.count(angles({{0, 1}})));
  CHECK(t.class_count() == 2);
}

TEST_CASE("landing_table for the double rabbit at N=8") {
  auto f = double_rabbit(RotationNumber(1, 4));
  auto t = landing_table(f, 8);
  auto classes = class_set(t);
  CHECK(classes.count(angles({{86, 255}, {89, 255}, {101, 255}, {149, 255}})));
  CHECK(classes.count(angles({{43, 255}, {172, 255}, {178, 255}, {202, 255}})));
}

TEST_CASE("landing bound must be a multiple of the period") {
  CHECK_THROWS_AS(landing_table(rabbit(), 4), InvalidInput);
}

TEST_CASE("fixed classes") {
  auto tr = landing_table(rabbit(), 3);
  auto fc = tr.fixed_classes();
  REQUIRE(fc.alpha.has_value());
  CHECK(tr.class_angles(*fc.alpha) == angles({{1, 7}, {2, 7}, {4, 7}}));
  REQUIRE(fc.beta.size() == 1);
  CHECK(tr.class_angles(fc.beta[0]) == angles({{0, 1}}));

  // the airplane's alpha rays have period 2; absent at N=3, present at N=6
  auto ta3 = landing_table(airplane(), 3);
  CHECK(!ta3.fixed_classes().alpha.has_value());
  auto ta6 = landing_table(airplane(), 6);
  auto fc6 = ta6.fixed_classes();
  REQUIRE(fc6.alpha.has_value());
  CHECK(ta6.class_angles(*fc6.alpha) == angles({{1, 3}, {2, 3}}));

  auto tb = landing_table(basilica(), 2);
  auto fcb = tb.fixed_classes();
  REQUIRE(fcb.alpha.has_value());
  CHECK(tb.class_angles(*fcb.alpha) == angles({{1, 3}, {2, 3}}));
}

TEST_CASE("class rotation numbers") {
  auto tr = landing_table(rabbit(), 3);
  CHECK(tr.class_rotation(*tr.fixed_classes().alpha) == RotationNumber(1, 3));

  auto tb = landing_table(basilica(), 2);
  CHECK(tb.class_rotation(*tb.fixed_classes().alpha) == RotationNumber(1, 2));

  auto f = double_rabbit(RotationNumber(1, 4));
  auto t = landing_table(f, 8);
  auto c = t.class_of(A(86, 255));
  REQUIRE(c.has_value());
  CHECK(t.class_period(*c) == 2);
  CHECK(t.class_rotation(*c) == RotationNumber(1, 4));
}

TEST_CASE("critical value root classes") {
  auto ta = landing_table(airplane(), 3);
  CHECK(ta.class_angles(ta.critical_value_root_class(0)) == angles({{3, 7}, {4, 7}}));

  auto tr = landing_table(rabbit(), 3);
  auto alpha = *tr.fixed_classes().alpha;
  for (int k = 0; k < 3; ++k) CHECK(tr.critical_value_root_class(k) == alpha);

  auto f = double_rabbit(RotationNumber(1, 4));
  auto tf = landing_table(f, 8);
  auto even = tf.critical_value_root_class(0);
  auto odd = tf.critical_value_root_class(1);
  CHECK(even != odd);
  CHECK(tf.critical_value_root_class(2) == even);
  CHECK(tf.critical_value_root_class(3) == odd);
}

TEST_CASE("biaccessible census of the double rabbit") {
  auto cls = biaccessible_census(double_rabbit(RotationNumber(1, 4)), 8);
  REQUIRE(cls.size() == 3);
  std::set<size_t> sizes;
  for (const auto& c : cls) sizes.insert(c.size());
  CHECK(sizes == std::set<size_t>{2, 4});
}

TEST_CASE("pullback leaves reproduce the small laminations") {
  auto pr = pullback_leaves(rabbit(), 3, 3);
  std::set<std::pair<Angle, Angle>> leaves(pr.retained.begin(), pr.retained.end());
  CHECK(leaves.count({A(1, 7), A(2, 7)}));
  CHECK(leaves.count({A(2, 7), A(4, 7)}));
  CHECK(leaves.count({A(1, 7), A(4, 7)}));
  CHECK(leaves.size() == 3);

  auto pa = pullback_leaves(airplane(), 3, 3);
  std::set<std::pair<Angle, Angle>> la(pa.retained.begin(), pa.retained.end());
  CHECK(la.count({A(3, 7), A(4, 7)}));
  CHECK(la.count({A(1, 7), A(6, 7)}));
  CHECK(la.count({A(2, 7), A(5, 7)}));
  CHECK(la.size() == 3);

  auto pb = pullback_leaves(basilica(), 2, 2);
  std::set<std::pair<Angle, Angle>> lb(pb.retained.begin(), pb.retained.end());
  CHECK(lb.count({A(1, 3), A(2, 3)}));
  CHECK(lb.size() == 1);
}

TEST_CASE("pullback classes agree with landing classes") {
  for (auto [p, N] : std::vector<std::pair<PolynomialDescriptor, int>>{
           {rabbit(), 3}, {rabbit(), 6}, {airplane(), 3}, {airplane(), 6},
           {basilica(), 2}, {basilica(), 4},
           {double_rabbit(RotationNumber(1, 4)), 8},
           {secondary_pair(RotationNumber(1, 4)), 8}}) {
    auto table = landing_table(p, N);
    std::vector<std::vector<Angle>> landing;
    for (uint32_t c = 0; c < table.class_count(); ++c)
      landing.push_back(table.class_angles(c));
    std::sort(landing.begin(), landing.end());
    auto oracle = stable_pullback_classes(p, N);
    std::sort(oracle.classes.begin(), oracle.classes.end());
    CHECK(landing == oracle.classes);
  }
}
