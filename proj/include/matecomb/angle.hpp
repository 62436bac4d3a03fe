#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matecomb {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : Error { using Error::Error; };          // malformed values
struct NotPeriodic : Error { using Error::Error; };           // denominator shares a factor with d
struct ShapeError : Error { using Error::Error; };            // wrong orbit shape (e.g. odd period)
struct InvalidDescriptor : Error { using Error::Error; };     // not a valid characteristic pair
struct IndeterminateLimb : Error { using Error::Error; };     // limb undefined for a boundary angle
struct InternalConsistency : Error { using Error::Error; };   // a uniqueness claim failed; a bug
struct LandingCriterion : Error { using Error::Error; };      // landing-table validation failed
struct OracleAmbiguity : Error { using Error::Error; };       // pullback could not pick a pairing
struct StructuralError : Error { using Error::Error; };       // class/star structure violated
struct TheoremViolation : Error { using Error::Error; };      // a verified theorem failed to hold

// ---------------------------------------------------------------------------
// Angle: exact rational point of the circle R/Z, reduced, in [0,1).

class Angle {
 public:
  Angle() : num_(0), den_(1) {}
  Angle(BigInt a, BigInt b);  // a/b mod 1; throws InvalidInput on b == 0

  static Angle parse(std::string_view s);  // "a/b" or "a"

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Angle map(int degree) const;            // t -> degree*t mod 1
  Angle times(const BigInt& m) const;     // t -> m*t mod 1
  Angle negated() const;                  // t -> -t mod 1

  std::string str() const;

  bool operator==(const Angle& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Angle& o) const { return !(*this == o); }
  bool operator<(const Angle& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator>(const Angle& o) const { return o < *this; }
  bool operator<=(const Angle& o) const { return !(o < *this); }
  bool operator>=(const Angle& o) const { return !(*this < o); }

 private:
  BigInt num_, den_;
};

inline Angle make_angle(long a, long b) { return Angle(BigInt(a), BigInt(b)); }

// True iff t lies in the open arc running anticlockwise lo -> hi.
bool in_open_arc(const Angle& t, const Angle& lo, const Angle& hi);

// ---------------------------------------------------------------------------
// RotationNumber: p/q with gcd(p,q) = 1, 0 <= p < q, or 0/1.

struct RotationNumber {
  long p = 0;
  long q = 1;

  RotationNumber() = default;
  RotationNumber(long p_, long q_);

  RotationNumber conjugate() const {  // p/q -> (q-p)/q
    return p == 0 ? RotationNumber(0, 1) : RotationNumber(q - p, q);
  }
  bool zero() const { return p == 0; }
  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }

  bool operator==(const RotationNumber&) const = default;
  auto operator<=>(const RotationNumber&) const = default;
};

// ---------------------------------------------------------------------------
// AngleOrbit: full forward orbit of a periodic angle under t -> d*t.

struct AngleOrbit {
  int degree = 2;
  Angle base;
  std::vector<Angle> iterates;
  int period = 1;
};

// Exact period of t under t -> d*t, or nullopt when t is not periodic
// (denominator not coprime to d).
std::optional<int> period(int degree, const Angle& t);

// Forward orbit; throws NotPeriodic when the angle is preperiodic.
AngleOrbit orbit(int degree, const Angle& t);

// Angular rotation number of the orbit of t: the cyclic labelling
// theta_1 < ... < theta_q gets mapped by a constant shift p, when it does.
// Period-1 angles get 0/1. Throws NotPeriodic on preperiodic input.
std::optional<RotationNumber> rotation_number(int degree, const Angle& t);

// 2-angular rotation number of a period-2q angle under doubling: the even and
// odd iterate sets must occupy disjoint arcs and each rotate by p/q under
// quadrupling. Throws ShapeError on odd period.
std::optional<RotationNumber> two_rotation_number(const Angle& t);

// Index k with t in (k/(d-1), (k+1)/(d-1)); nullopt on an exact boundary hit.
std::optional<int> arc_index(int degree, const Angle& t);

// True iff the whole orbit of t lies in one open arc A_j.
bool orbit_in_single_arc(int degree, const Angle& t);

// True iff the chords leaf1 and leaf2 cross inside the disc
// (endpoints strictly interleave; a shared endpoint never crosses).
bool circular_cross(const std::pair<Angle, Angle>& leaf1,
                    const std::pair<Angle, Angle>& leaf2);

// Repeating binary word of a doubling-periodic angle, MSB first, one period.
std::vector<bool> binary_word(const Angle& t);

// Binary substitution tuning (degree 2): digit 0 of each inner word becomes
// the word of outer.first, digit 1 the word of outer.second. The inner pair
// (0,0) stands for the period-1 words "0"/"1".
std::pair<Angle, Angle> tune(const std::pair<Angle, Angle>& outer,
                             const std::pair<Angle, Angle>& inner);

// All period-q orbits of rotation number p/q whose orbit lies inside a single
// arc A_k; exactly degree-1 of them, one per arc.
std::vector<AngleOrbit> enumerate_rotation_orbits(int degree, const RotationNumber& rho);

}  // namespace matecomb
