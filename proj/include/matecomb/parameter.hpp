#pragma once

#include "matecomb/angle.hpp"

#include <map>

namespace matecomb {

// ---------------------------------------------------------------------------
// PolynomialDescriptor: a hyperbolic PCF unicritical polynomial, represented
// by its degree and characteristic external-angle pair. The characteristic
// arc runs anticlockwise lower -> upper.

struct PolynomialDescriptor {
  int degree = 2;
  Angle lower;   // theta^-
  Angle upper;   // theta^+
  int period = 1;

  std::pair<Angle, Angle> pair() const { return {lower, upper}; }
  std::string str() const { return lower.str() + "," + upper.str(); }

  bool operator==(const PolynomialDescriptor& o) const {
    return degree == o.degree && lower == o.lower && upper == o.upper;
  }
  bool operator<(const PolynomialDescriptor& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (!(lower == o.lower)) return lower < o.lower;
    return upper < o.upper;
  }
};

struct WakeInterval {
  Angle low, high;  // open arc low -> high, anticlockwise
  bool contains(const Angle& t) const { return in_open_arc(t, low, high); }
  bool contains_pair(const std::pair<Angle, Angle>& p) const {
    return contains(p.first) && contains(p.second);
  }
};

// ---------------------------------------------------------------------------
// Lavaurs pairing of quadratic periodic parameter angles into characteristic
// pairs: periods are processed in increasing order and within each period the
// smallest unpaired angle is joined to the smallest unpaired angle reachable
// without crossing any chord drawn so far.

class LavaursTable {
 public:
  explicit LavaursTable(int max_period) { extend(max_period); }

  void extend(int max_period);
  int bound() const { return bound_; }

  const std::vector<std::pair<Angle, Angle>>& pairs_of_period(int k) const;
  std::optional<std::pair<Angle, Angle>> pair_containing(const Angle& t) const;
  bool is_pair(const Angle& a, const Angle& b) const;

  const std::vector<std::pair<Angle, Angle>>& all_chords() const { return chords_; }

 private:
  int bound_ = 0;
  std::vector<std::vector<std::pair<Angle, Angle>>> by_period_;  // [period]
  std::vector<std::pair<Angle, Angle>> chords_;
  std::map<Angle, Angle> partner_;
};

// Process-wide table, grown on demand.
const LavaursTable& lavaurs(int at_least_period);

// ---------------------------------------------------------------------------

// Validates and canonicalizes a characteristic pair. Quadratic pairs are
// checked against the Lavaurs table; higher-degree pairs against the
// conjugate-angle computation.
PolynomialDescriptor make_descriptor(int degree, const Angle& a, const Angle& b);

// All valid quadratic descriptors of the given exact period.
std::vector<PolynomialDescriptor> descriptors_of_period(int period);

WakeInterval wake_interval(const PolynomialDescriptor& p);

// The p/q such that t lies strictly inside the wake of the p/q-limb of the
// main cardioid; nullopt for wake-boundary angles and for 0. Degree 2.
std::optional<RotationNumber> limb_of(const Angle& t);

// Limb of the component itself (closed limbs: a rabbit belongs to its own
// limb). Throws IndeterminateLimb when undefined.
RotationNumber component_limb(const PolynomialDescriptor& p);

// True iff the two maps live in conjugate limbs p/q and (q-p)/q. Degree 2.
bool conjugate_limbs(const PolynomialDescriptor& f1, const PolynomialDescriptor& f2);

// The p/q-rabbit: endpoints of the shortest complementary gap of the unique
// period-q rotation orbit. Degree 2 (see rabbit_in_arc for higher degree).
PolynomialDescriptor rabbit_pair(const RotationNumber& rho);

// Degree-d rabbit whose orbit lies in arc A_k.
PolynomialDescriptor rabbit_in_arc(int degree, const RotationNumber& rho, int arc);

// Characteristic pair from a rotation orbit: the shortest gap.
std::pair<Angle, Angle> shortest_gap(const std::vector<Angle>& orbit_angles);

// Basilica tuned by the p/q-rabbit; period 2q.
PolynomialDescriptor double_rabbit(const RotationNumber& rho);

// The unique other period-2q component inside the double rabbit's wake.
PolynomialDescriptor secondary_pair(const RotationNumber& rho);

// The co-landing partner of a periodic parameter angle: the unique angle
// theta' of equal period such that {theta, theta'} generates an unlinked leaf
// orbit whose shortest leaf is {theta, theta'} itself. Agrees with the
// Lavaurs partner in degree 2 and resolves associated-angle descriptors in
// higher degree.
Angle conjugate_angle(int degree, const Angle& theta);

}  // namespace matecomb
