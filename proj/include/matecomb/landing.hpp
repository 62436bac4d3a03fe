#pragma once

#include "matecomb/parameter.hpp"

#include <cstdint>
#include <memory>

namespace matecomb {

// ---------------------------------------------------------------------------
// Universe: a finite forward-invariant, negation-closed set of periodic
// angles, stored as numerators over d^L - 1 where L is the lcm of the
// constituent periods. "periods dividing N" universes are the default;
// unions with extra orbits serve the mating machinery.

class Universe {
 public:
  static Universe periods_dividing(int degree, int bound);
  static Universe unite(int degree, std::vector<int> bounds,
                        const std::vector<Angle>& extra_orbit_reps);

  int degree() const { return degree_; }
  uint64_t modulus() const { return modulus_; }
  int exponent() const { return exponent_; }  // L
  size_t size() const { return values_.size(); }

  uint64_t value(uint32_t i) const { return values_[i]; }
  std::optional<uint32_t> index_of(uint64_t v) const;
  uint32_t map_index(uint32_t i) const;
  uint32_t negate_index(uint32_t i) const;

  Angle angle(uint32_t i) const { return Angle(BigInt(values_[i]), BigInt(modulus_)); }
  std::optional<uint64_t> value_of(const Angle& t) const;   // nullopt if not representable
  std::optional<uint32_t> index_of_angle(const Angle& t) const;

  // canonical identifier for caching
  const std::string& tag() const { return tag_; }

 private:
  int degree_ = 2;
  int exponent_ = 1;
  uint64_t modulus_ = 1;
  std::vector<uint64_t> values_;  // sorted
  std::string tag_;
};

// ---------------------------------------------------------------------------
// Itinerary of one angle with respect to one reference angle: the orbit coded
// by the d arcs cut by the reference's preimages {(ref+j)/d}; -1 marks an
// exact boundary hit.

struct Itinerary {
  Angle reference;
  std::vector<int> symbols;  // length = period of the coded angle
};

Itinerary itinerary(const PolynomialDescriptor& p, const Angle& t, const Angle& reference);

// ---------------------------------------------------------------------------
// LandingTable: partition of a universe into co-landing classes.
// Two angles join iff their itineraries are wildcard-compatible for both
// characteristic angles; classes are the transitive closure. Tables are
// validated (pairwise unlinked classes, equivariance, characteristic class)
// on construction.

class LandingTable {
 public:
  LandingTable(PolynomialDescriptor p, std::shared_ptr<const Universe> u);

  const PolynomialDescriptor& descriptor() const { return desc_; }
  const Universe& universe() const { return *universe_; }
  std::shared_ptr<const Universe> universe_ptr() const { return universe_; }

  uint32_t class_count() const { return static_cast<uint32_t>(members_.size()); }
  uint32_t class_of_index(uint32_t angle_index) const { return class_of_[angle_index]; }
  std::optional<uint32_t> class_of(const Angle& t) const;
  const std::vector<uint32_t>& class_members(uint32_t c) const { return members_[c]; }
  std::vector<Angle> class_angles(uint32_t c) const;
  std::string class_label(uint32_t c) const;  // "a/b|c/d|..."

  uint32_t image_class(uint32_t c) const { return image_[c]; }
  int class_period(uint32_t c) const;
  // Rotation number of the first-return action on the class's angles.
  RotationNumber class_rotation(uint32_t c) const;

  std::vector<uint32_t> nonsingleton_classes() const;

  // class of sigma^k(theta^-): root of the component holding critical-orbit
  // iterate k+1
  uint32_t critical_value_root_class(int k) const;

  struct FixedClasses {
    std::optional<uint32_t> alpha;
    std::vector<uint32_t> beta;
  };
  FixedClasses fixed_classes() const;

 private:
  PolynomialDescriptor desc_;
  std::shared_ptr<const Universe> universe_;
  std::vector<uint32_t> class_of_;
  std::vector<std::vector<uint32_t>> members_;
  std::vector<uint32_t> image_;

  void validate() const;
};

// Table over the default universe of all angles of period dividing N.
// N must be a multiple of the descriptor period.
LandingTable landing_table(const PolynomialDescriptor& p, int N);

// All classes with at least two angles among periods dividing N.
std::vector<std::vector<Angle>> biaccessible_census(const PolynomialDescriptor& p, int N);

// ---------------------------------------------------------------------------
// Pullback-lamination oracle, independent of the itinerary criterion: the
// forward orbit of the characteristic leaf is pulled back `depth` times; the
// partition is read off from leaf connectivity and leaf separation.

struct PullbackResult {
  std::vector<std::pair<Angle, Angle>> retained;   // leaves with periodic endpoints, period | N
  std::vector<std::vector<Angle>> classes;         // partition of the period-|N universe
  int depth = 0;
};

PullbackResult pullback_leaves(const PolynomialDescriptor& p, int N, int depth);

// Pullback classes at increasing depth until the partition stabilizes.
PullbackResult stable_pullback_classes(const PolynomialDescriptor& p, int N);

}  // namespace matecomb
