#include "matecomb/angle.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace matecomb {

using boost::multiprecision::gcd;

Angle::Angle(BigInt a, BigInt b) {
  if (b == 0) throw InvalidInput("angle denominator must be nonzero");
  if (b < 0) { a = -a; b = -b; }
  a %= b;
  if (a < 0) a += b;
  BigInt g = gcd(a, b);
  num_ = a / g;
  den_ = b / g;
}

Angle Angle::parse(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos)
      return Angle(BigInt(std::string(s)), 1);
    return Angle(BigInt(std::string(s.substr(0, slash))),
                 BigInt(std::string(s.substr(slash + 1))));
  } catch (const std::exception& e) {
    throw InvalidInput("cannot parse angle '" + std::string(s) + "'");
  }
}

Angle Angle::map(int degree) const { return times(BigInt(degree)); }

Angle Angle::times(const BigInt& m) const { return Angle(num_ * m, den_); }

Angle Angle::negated() const { return Angle(-num_, den_); }

std::string Angle::str() const {
  return num_.str() + "/" + den_.str();
}

bool in_open_arc(const Angle& t, const Angle& lo, const Angle& hi) {
  if (lo == hi) return false;
  if (lo < hi) return lo < t && t < hi;
  return t > lo || t < hi;  // arc wraps through 0
}

RotationNumber::RotationNumber(long p_, long q_) : p(p_), q(q_) {
  if (q <= 0 || p < 0 || p >= q) throw InvalidInput("rotation number out of range");
  long a = p, b = q;
  while (a) { long r = b % a; b = a; a = r; }
  if (p == 0) { q = 1; }
  else if (b != 1) throw InvalidInput("rotation number not reduced");
}

std::optional<int> period(int degree, const Angle& t) {
  if (degree < 2) throw InvalidInput("degree must be at least 2");
  const BigInt& den = t.den();
  if (den == 1) return 1;
  if (gcd(BigInt(degree), den) != 1) return std::nullopt;
  BigInt cur = BigInt(degree) % den;
  int k = 1;
  while (cur != 1) {
    cur = (cur * degree) % den;
    if (++k > 4096) throw InvalidInput("period too large");
  }
  return k;
}

AngleOrbit orbit(int degree, const Angle& t) {
  auto q = period(degree, t);
  if (!q) throw NotPeriodic("angle " + t.str() + " is not periodic under degree " +
                            std::to_string(degree));
  AngleOrbit o;
  o.degree = degree;
  o.base = t;
  o.period = *q;
  o.iterates.reserve(*q);
  Angle cur = t;
  for (int k = 0; k < *q; ++k) {
    o.iterates.push_back(cur);
    cur = cur.map(degree);
  }
  return o;
}

namespace {

// Rotation number of a finite set that is forward-invariant under `step`,
// by checking that `step` shifts the sorted cyclic order by a constant.
std::optional<RotationNumber> cyclic_shift(const std::vector<Angle>& sorted,
                                           const std::function<Angle(const Angle&)>& step) {
  const long q = static_cast<long>(sorted.size());
  if (q == 1) return RotationNumber(0, 1);
  auto index_of = [&](const Angle& a) -> long {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), a);
    if (it == sorted.end() || *it != a) return -1;
    return it - sorted.begin();
  };
  long p = index_of(step(sorted[0]));
  if (p < 0) return std::nullopt;
  for (long k = 1; k < q; ++k) {
    long img = index_of(step(sorted[k]));
    if (img < 0 || img != (k + p) % q) return std::nullopt;
  }
  if (p == 0) return RotationNumber(0, 1);
  long a = p, b = q;
  while (a) { long r = b % a; b = a; a = r; }
  if (b != 1) return std::nullopt;  // a genuine rotation of an exact orbit is reduced
  return RotationNumber(p, q);
}

}  // namespace

std::optional<RotationNumber> rotation_number(int degree, const Angle& t) {
  AngleOrbit o = orbit(degree, t);
  if (o.period == 1) return RotationNumber(0, 1);
  std::vector<Angle> sorted = o.iterates;
  std::sort(sorted.begin(), sorted.end());
  return cyclic_shift(sorted, [&](const Angle& a) { return a.map(degree); });
}

std::optional<RotationNumber> two_rotation_number(const Angle& t) {
  AngleOrbit o = orbit(2, t);
  if (o.period % 2 != 0) throw ShapeError("2-angular rotation number needs even period");
  const int q = o.period / 2;
  std::vector<Angle> even, odd;
  for (int k = 0; k < o.period; ++k)
    (k % 2 == 0 ? even : odd).push_back(o.iterates[k]);

  // Disjoint arcs: the even iterates must be cyclically contiguous among all
  // 2q orbit points.
  std::vector<std::pair<Angle, bool>> all;
  for (const auto& a : even) all.emplace_back(a, true);
  for (const auto& a : odd) all.emplace_back(a, false);
  std::sort(all.begin(), all.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  int switches = 0;
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i].second != all[(i + 1) % all.size()].second) ++switches;
  if (switches != 2) return std::nullopt;
  (void)q;

  auto quad = [](const Angle& a) { return a.map(4); };
  std::sort(even.begin(), even.end());
  std::sort(odd.begin(), odd.end());
  auto r0 = cyclic_shift(even, quad);
  auto r1 = cyclic_shift(odd, quad);
  if (!r0 || !r1 || !(*r0 == *r1)) return std::nullopt;
  return r0;
}

std::optional<int> arc_index(int degree, const Angle& t) {
  if (degree < 2) throw InvalidInput("degree must be at least 2");
  const BigInt d1 = degree - 1;
  // t == k/(d-1) exactly?
  if ((t.num() * d1) % t.den() == 0) return std::nullopt;
  BigInt k = (t.num() * d1) / t.den();
  return k.convert_to<int>();
}

bool orbit_in_single_arc(int degree, const Angle& t) {
  AngleOrbit o = orbit(degree, t);
  std::optional<int> arc;
  for (const auto& a : o.iterates) {
    auto k = arc_index(degree, a);
    if (!k) return false;
    if (!arc) arc = k;
    else if (*arc != *k) return false;
  }
  return true;
}

bool circular_cross(const std::pair<Angle, Angle>& leaf1,
                    const std::pair<Angle, Angle>& leaf2) {
  const Angle &a = leaf1.first, &b = leaf1.second;
  const Angle &c = leaf2.first, &d = leaf2.second;
  if (a == b || c == d) return false;
  if (c == a || c == b || d == a || d == b) return false;
  int inside = (in_open_arc(c, a, b) ? 1 : 0) + (in_open_arc(d, a, b) ? 1 : 0);
  return inside == 1;
}

std::vector<bool> binary_word(const Angle& t) {
  auto q = period(2, t);
  if (!q) throw NotPeriodic("angle " + t.str() + " is not doubling-periodic");
  BigInt D = (BigInt(1) << *q) - 1;
  BigInt a = t.num() * (D / t.den());
  std::vector<bool> w(*q);
  for (int i = 0; i < *q; ++i)
    w[*q - 1 - i] = boost::multiprecision::bit_test(a, i);
  return w;
}

namespace {

Angle word_to_angle(const std::vector<bool>& w) {
  BigInt v = 0;
  for (bool b : w) v = (v << 1) | (b ? 1 : 0);
  return Angle(v, (BigInt(1) << w.size()) - 1);
}

}  // namespace

std::pair<Angle, Angle> tune(const std::pair<Angle, Angle>& outer,
                             const std::pair<Angle, Angle>& inner) {
  auto m0 = period(2, outer.first), m1 = period(2, outer.second);
  if (!m0 || !m1 || *m0 != *m1 || outer.first == outer.second)
    throw InvalidDescriptor("outer tuning pair is not a characteristic pair");
  const std::vector<bool> w0 = binary_word(outer.first);
  const std::vector<bool> w1 = binary_word(outer.second);

  auto substituted = [&](const std::vector<bool>& word) {
    std::vector<bool> out;
    out.reserve(word.size() * w0.size());
    for (bool b : word) {
      const auto& w = b ? w1 : w0;
      out.insert(out.end(), w.begin(), w.end());
    }
    return word_to_angle(out);
  };

  if (inner.first.is_zero() && inner.second.is_zero()) {
    // The fixed angle's two repeating words.
    return {word_to_angle(w0), word_to_angle(w1)};
  }
  auto n0 = period(2, inner.first), n1 = period(2, inner.second);
  if (!n0 || !n1 || *n0 != *n1)
    throw InvalidInput("inner tuning angles must be periodic of equal period");
  return {substituted(binary_word(inner.first)), substituted(binary_word(inner.second))};
}

std::vector<AngleOrbit> enumerate_rotation_orbits(int degree, const RotationNumber& rho) {
  if (rho.q < 2) throw InvalidInput("rotation number must have q >= 2");
  BigInt D = 1;
  for (long i = 0; i < rho.q; ++i) D *= degree;
  D -= 1;
  std::set<Angle> seen;
  std::vector<AngleOrbit> out;
  for (BigInt a = 1; a < D; ++a) {
    Angle t(a, D);
    if (seen.count(t)) continue;
    auto q = period(degree, t);
    if (!q || *q != rho.q) continue;
    AngleOrbit o = orbit(degree, t);
    for (const auto& it : o.iterates) seen.insert(it);
    auto rn = rotation_number(degree, t);
    if (!rn || !(*rn == rho)) continue;
    if (!orbit_in_single_arc(degree, t)) continue;
    out.push_back(std::move(o));
  }
  if (static_cast<int>(out.size()) != degree - 1)
    throw InternalConsistency("expected exactly degree-1 rotation orbits, found " +
                              std::to_string(out.size()));
  return out;
}

}  // namespace matecomb
