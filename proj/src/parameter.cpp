#include "matecomb/parameter.hpp"

#include "matecomb/landing.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace matecomb {

namespace {

// Ascending-arc width a -> b as a point of [0,1).
Angle arc_width(const Angle& a, const Angle& b) {
  return Angle(b.num() * a.den() - a.num() * b.den(), a.den() * b.den());
}

std::vector<Angle> angles_of_exact_period(int degree, int k) {
  BigInt D = 1;
  for (int i = 0; i < k; ++i) D *= degree;
  D -= 1;
  std::vector<Angle> out;
  for (BigInt a = 1; a < D; ++a) {
    Angle t(a, D);
    auto q = period(degree, t);
    if (q && *q == k) {
      if (out.empty() || !(out.back() == t)) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

void LavaursTable::extend(int max_period) {
  if (max_period <= bound_) return;
  if (static_cast<int>(by_period_.size()) <= max_period)
    by_period_.resize(max_period + 1);
  for (int k = bound_ + 1; k <= max_period; ++k) {
    std::vector<Angle> angles = angles_of_exact_period(2, k);
    std::set<Angle> unpaired(angles.begin(), angles.end());
    while (!unpaired.empty()) {
      Angle lo = *unpaired.begin();
      if (unpaired.size() == 1) {
        // period 1 leaves the fixed angle alone
        if (k == 1) { unpaired.clear(); break; }
        throw InternalConsistency("Lavaurs pairing stranded angle " + lo.str());
      }
      bool paired = false;
      for (auto it = std::next(unpaired.begin()); it != unpaired.end(); ++it) {
        std::pair<Angle, Angle> cand{lo, *it};
        bool crossing = false;
        for (const auto& chord : chords_)
          if (circular_cross(cand, chord)) { crossing = true; break; }
        if (!crossing) {
          chords_.push_back(cand);
          by_period_[k].push_back(cand);
          partner_.emplace(cand.first, cand.second);
          partner_.emplace(cand.second, cand.first);
          unpaired.erase(cand.second);
          unpaired.erase(cand.first);
          paired = true;
          break;
        }
      }
      if (!paired)
        throw InternalConsistency("Lavaurs pairing found no partner for " + lo.str());
    }
  }
  bound_ = max_period;
}

const std::vector<std::pair<Angle, Angle>>& LavaursTable::pairs_of_period(int k) const {
  static const std::vector<std::pair<Angle, Angle>> empty;
  if (k < 1 || k > bound_) return empty;
  return by_period_[k];
}

std::optional<std::pair<Angle, Angle>> LavaursTable::pair_containing(const Angle& t) const {
  auto it = partner_.find(t);
  if (it == partner_.end()) return std::nullopt;
  return t < it->second ? std::make_pair(t, it->second) : std::make_pair(it->second, t);
}

bool LavaursTable::is_pair(const Angle& a, const Angle& b) const {
  auto it = partner_.find(a);
  return it != partner_.end() && it->second == b;
}

const LavaursTable& lavaurs(int at_least_period) {
  static LavaursTable table(1);
  table.extend(at_least_period);
  return table;
}

PolynomialDescriptor make_descriptor(int degree, const Angle& a, const Angle& b) {
  auto pa = period(degree, a), pb = period(degree, b);
  if (!pa || !pb)
    throw InvalidDescriptor("characteristic angles must be periodic");
  if (*pa != *pb)
    throw InvalidDescriptor("characteristic angles must share a period");
  if (a == b) throw InvalidDescriptor("characteristic angles must be distinct");

  PolynomialDescriptor p;
  p.degree = degree;
  p.period = *pa;
  // the characteristic arc is the shorter of the two arcs between the angles
  if (arc_width(a, b) < arc_width(b, a)) { p.lower = a; p.upper = b; }
  else { p.lower = b; p.upper = a; }

  if (degree == 2) {
    if (!lavaurs(p.period).is_pair(p.lower, p.upper))
      throw InvalidDescriptor("(" + a.str() + "," + b.str() +
                              ") is not a quadratic characteristic pair");
  } else {
    if (!(conjugate_angle(degree, p.lower) == p.upper))
      throw InvalidDescriptor("(" + a.str() + "," + b.str() +
                              ") is not a degree-" + std::to_string(degree) +
                              " characteristic pair");
  }
  return p;
}

std::vector<PolynomialDescriptor> descriptors_of_period(int period) {
  std::vector<PolynomialDescriptor> out;
  for (const auto& pr : lavaurs(period).pairs_of_period(period))
    out.push_back(make_descriptor(2, pr.first, pr.second));
  return out;
}

WakeInterval wake_interval(const PolynomialDescriptor& p) {
  return WakeInterval{p.lower, p.upper};
}

namespace {

const PolynomialDescriptor& cached_rabbit(const RotationNumber& rho) {
  static std::map<RotationNumber, PolynomialDescriptor> cache;
  auto it = cache.find(rho);
  if (it != cache.end()) return it->second;
  auto orbits = enumerate_rotation_orbits(2, rho);
  auto gap = shortest_gap(orbits[0].iterates);
  PolynomialDescriptor p;
  p.degree = 2;
  p.lower = gap.first;
  p.upper = gap.second;
  p.period = orbits[0].period;
  return cache.emplace(rho, std::move(p)).first->second;
}

}  // namespace

std::pair<Angle, Angle> shortest_gap(const std::vector<Angle>& orbit_angles) {
  std::vector<Angle> s = orbit_angles;
  std::sort(s.begin(), s.end());
  if (s.size() < 2) throw InvalidInput("need at least two angles for a gap");
  size_t best = 0;
  Angle best_width = arc_width(s[0], s[1 % s.size()]);
  for (size_t i = 1; i < s.size(); ++i) {
    Angle w = arc_width(s[i], s[(i + 1) % s.size()]);
    if (w < best_width) { best_width = w; best = i; }
  }
  return {s[best], s[(best + 1) % s.size()]};
}

PolynomialDescriptor rabbit_pair(const RotationNumber& rho) {
  if (rho.q < 2) throw InvalidInput("rabbit needs q >= 2");
  return cached_rabbit(rho);
}

PolynomialDescriptor rabbit_in_arc(int degree, const RotationNumber& rho, int arc) {
  auto orbits = enumerate_rotation_orbits(degree, rho);
  for (const auto& o : orbits) {
    auto k = arc_index(degree, o.base);
    if (k && *k == arc) {
      auto gap = shortest_gap(o.iterates);
      PolynomialDescriptor p;
      p.degree = degree;
      p.lower = gap.first;
      p.upper = gap.second;
      p.period = o.period;
      return p;
    }
  }
  throw InvalidInput("no rotation orbit in arc " + std::to_string(arc));
}

std::optional<RotationNumber> limb_of(const Angle& t) {
  auto n = period(2, t);
  if (!n) throw NotPeriodic("limb_of needs a periodic angle");
  if (t.is_zero()) return std::nullopt;
  for (int q = 2; q <= *n; ++q)
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto& rb = cached_rabbit(RotationNumber(p, q));
      if (t == rb.lower || t == rb.upper) return std::nullopt;  // boundary
      if (in_open_arc(t, rb.lower, rb.upper)) return RotationNumber(p, q);
    }
  return std::nullopt;
}

RotationNumber component_limb(const PolynomialDescriptor& p) {
  if (p.degree != 2) throw InvalidInput("limbs are quadratic-only");
  auto rn = rotation_number(2, p.lower);
  if (rn && !rn->zero() && cached_rabbit(*rn).pair() == p.pair()) return *rn;
  auto l = limb_of(p.lower);
  if (!l) throw IndeterminateLimb("limb of " + p.str() + " is indeterminate");
  return *l;
}

bool conjugate_limbs(const PolynomialDescriptor& f1, const PolynomialDescriptor& f2) {
  return component_limb(f2) == component_limb(f1).conjugate();
}

PolynomialDescriptor double_rabbit(const RotationNumber& rho) {
  auto tuned = tune({make_angle(1, 3), make_angle(2, 3)}, rabbit_pair(rho).pair());
  return make_descriptor(2, tuned.first, tuned.second);
}

PolynomialDescriptor secondary_pair(const RotationNumber& rho) {
  PolynomialDescriptor f = double_rabbit(rho);
  WakeInterval wake = wake_interval(f);
  std::vector<PolynomialDescriptor> found;
  for (const auto& pr : lavaurs(f.period).pairs_of_period(f.period)) {
    if (pr == f.pair()) continue;
    if (wake.contains_pair(pr)) found.push_back(make_descriptor(2, pr.first, pr.second));
  }
  if (found.size() != 1)
    throw InternalConsistency("expected one secondary component in the wake of " +
                              f.str() + ", found " + std::to_string(found.size()));
  return found[0];
}

namespace {

// Leaf orbit of {theta, x} under sigma_d, as unordered pairs.
std::vector<std::pair<Angle, Angle>> leaf_family(int degree, Angle u, Angle v) {
  auto canon = [](Angle a, Angle b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  std::vector<std::pair<Angle, Angle>> fam;
  std::set<std::pair<Angle, Angle>> seen;
  auto cur = canon(u, v);
  while (!seen.count(cur)) {
    seen.insert(cur);
    fam.push_back(cur);
    cur = canon(cur.first.map(degree), cur.second.map(degree));
    if (fam.size() > 4096) throw InternalConsistency("leaf family does not close up");
  }
  if (!(cur == fam.front())) return {};  // preperiodic leaf cycle: not a portrait
  return fam;
}

Angle min_width(const std::pair<Angle, Angle>& leaf) {
  return std::min(arc_width(leaf.first, leaf.second), arc_width(leaf.second, leaf.first));
}

bool candidate_pair_ok(int degree, const Angle& theta, const Angle& x) {
  if (x == theta) return false;
  auto fam = leaf_family(degree, theta, x);
  if (fam.empty()) return false;
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = i + 1; j < fam.size(); ++j)
      if (circular_cross(fam[i], fam[j])) return false;
  // the seed must be the strictly shortest leaf of its family
  Angle w0 = min_width(fam[0]);
  for (size_t i = 1; i < fam.size(); ++i)
    if (!(w0 < min_width(fam[i]))) return false;
  // and its short arc must be clean of the family's angles
  Angle lo = fam[0].first, hi = fam[0].second;
  if (arc_width(hi, lo) < arc_width(lo, hi)) std::swap(lo, hi);
  for (const auto& leaf : fam)
    for (const Angle& e : {leaf.first, leaf.second})
      if (in_open_arc(e, lo, hi)) return false;
  return true;
}

}  // namespace

namespace {

// A candidate pair is dynamically consistent when the itinerary-based landing
// classes and the pullback-lamination classes agree over its own period.
bool dynamically_consistent(int degree, const Angle& theta, const Angle& partner, int n) {
  PolynomialDescriptor p;
  p.degree = degree;
  p.period = n;
  if (arc_width(theta, partner) < arc_width(partner, theta)) {
    p.lower = theta;
    p.upper = partner;
  } else {
    p.lower = partner;
    p.upper = theta;
  }
  try {
    auto u = std::make_shared<Universe>(Universe::periods_dividing(degree, n));
    LandingTable table(p, u);
    std::vector<std::vector<Angle>> landing;
    for (uint32_t c = 0; c < table.class_count(); ++c)
      landing.push_back(table.class_angles(c));
    std::sort(landing.begin(), landing.end());
    auto oracle = stable_pullback_classes(p, n);
    std::sort(oracle.classes.begin(), oracle.classes.end());
    return landing == oracle.classes;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Angle conjugate_angle(int degree, const Angle& theta) {
  auto n = period(degree, theta);
  if (!n) throw NotPeriodic("conjugate angle needs a periodic angle");
  std::vector<Angle> hits;
  for (const Angle& x : angles_of_exact_period(degree, *n))
    if (candidate_pair_ok(degree, theta, x)) hits.push_back(x);
  if (hits.size() > 1) {
    std::vector<Angle> confirmed;
    for (const Angle& x : hits)
      if (dynamically_consistent(degree, theta, x, *n)) confirmed.push_back(x);
    hits = std::move(confirmed);
  }
  if (hits.size() != 1)
    throw InternalConsistency("conjugate angle of " + theta.str() + ": " +
                              std::to_string(hits.size()) + " candidates");
  return hits[0];
}

}  // namespace matecomb
