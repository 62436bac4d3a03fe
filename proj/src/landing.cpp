#include "matecomb/landing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace matecomb {

namespace {

uint64_t pow_minus_one(int base, int exp) {  // base^exp - 1 with overflow guard
  uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / (2 * base)) throw InvalidInput("universe bound too large");
    r *= base;
  }
  return r - 1;
}

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(uint32_t a, uint32_t b) { parent[find(a)] = find(b); }
};

int symbol_of(uint64_t v, uint64_t ref, int degree, uint64_t modulus) {
  // position of v among the arcs cut by {(ref+j)/degree}: the scaled residue
  // delta = degree*v - ref over degree*modulus, star on multiples of modulus
  uint64_t w = v * degree;
  uint64_t delta = (w >= ref) ? w - ref
                              : w + (static_cast<uint64_t>(degree) * modulus - ref);
  if (delta % modulus == 0) return -1;
  return static_cast<int>((delta / modulus + 1) % degree);
}

}  // namespace

// ---------------------------------------------------------------------------
// Universe

Universe Universe::periods_dividing(int degree, int bound) {
  return unite(degree, {bound}, {});
}

Universe Universe::unite(int degree, std::vector<int> bounds,
                         const std::vector<Angle>& extra_orbit_reps) {
  if (degree < 2) throw InvalidInput("degree must be at least 2");
  if (bounds.empty() && extra_orbit_reps.empty())
    throw InvalidInput("empty universe");
  long L = 1;
  for (int b : bounds) {
    if (b < 1) throw InvalidInput("universe bound must be positive");
    L = std::lcm(L, static_cast<long>(b));
  }
  std::vector<int> extra_periods;
  for (const auto& t : extra_orbit_reps) {
    auto p = period(degree, t);
    if (!p) throw NotPeriodic("universe orbit angle " + t.str() + " is not periodic");
    extra_periods.push_back(*p);
    L = std::lcm(L, static_cast<long>(*p));
  }

  Universe u;
  u.degree_ = degree;
  u.exponent_ = static_cast<int>(L);
  u.modulus_ = pow_minus_one(degree, u.exponent_);

  std::set<uint64_t> vals;
  for (int b : bounds) {
    uint64_t Db = pow_minus_one(degree, b);
    uint64_t step = u.modulus_ / Db;
    for (uint64_t j = 0; j < Db; ++j) vals.insert(j * step);
  }
  for (const auto& t : extra_orbit_reps) {
    uint64_t scale = u.modulus_ / t.den().convert_to<uint64_t>();
    uint64_t v = t.num().convert_to<uint64_t>() * scale;
    do {
      vals.insert(v);
      v = (v * degree) % u.modulus_;
    } while (v != t.num().convert_to<uint64_t>() * scale);
  }
  u.values_.assign(vals.begin(), vals.end());

  std::sort(bounds.begin(), bounds.end());
  std::ostringstream tag;
  tag << "d" << degree << ":N";
  for (size_t i = 0; i < bounds.size(); ++i) tag << (i ? "," : "") << bounds[i];
  std::vector<std::string> orbit_tags;
  for (const auto& t : extra_orbit_reps) {
    Angle least = t, cur = t.map(degree);
    while (!(cur == t)) {
      if (cur < least) least = cur;
      cur = cur.map(degree);
    }
    orbit_tags.push_back(least.str());
  }
  std::sort(orbit_tags.begin(), orbit_tags.end());
  orbit_tags.erase(std::unique(orbit_tags.begin(), orbit_tags.end()), orbit_tags.end());
  for (const auto& s : orbit_tags) tag << "+" << s;
  u.tag_ = tag.str();
  return u;
}

std::optional<uint32_t> Universe::index_of(uint64_t v) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v) return std::nullopt;
  return static_cast<uint32_t>(it - values_.begin());
}

uint32_t Universe::map_index(uint32_t i) const {
  uint64_t v = (values_[i] * degree_) % modulus_;
  auto j = index_of(v);
  if (!j) throw InternalConsistency("universe not forward-invariant");
  return *j;
}

uint32_t Universe::negate_index(uint32_t i) const {
  uint64_t v = values_[i] == 0 ? 0 : modulus_ - values_[i];
  auto j = index_of(v);
  if (!j) throw InternalConsistency("universe not negation-closed");
  return *j;
}

std::optional<uint64_t> Universe::value_of(const Angle& t) const {
  BigInt den = t.den();
  if (BigInt(modulus_) % den != 0) return std::nullopt;
  BigInt v = t.num() * (BigInt(modulus_) / den);
  return v.convert_to<uint64_t>();
}

std::optional<uint32_t> Universe::index_of_angle(const Angle& t) const {
  auto v = value_of(t);
  if (!v) return std::nullopt;
  return index_of(*v);
}

// ---------------------------------------------------------------------------
// Exact itinerary of one angle (public spec operation)

Itinerary itinerary(const PolynomialDescriptor& p, const Angle& t, const Angle& reference) {
  if (!(reference == p.lower) && !(reference == p.upper))
    throw InvalidInput("itinerary reference must be a characteristic angle");
  auto per = period(p.degree, t);
  if (!per) throw NotPeriodic("itinerary needs a periodic angle");
  Itinerary it;
  it.reference = reference;
  Angle cur = t;
  for (int k = 0; k < *per; ++k) {
    // delta = (degree*cur - reference) mod degree, a rational in [0, degree)
    BigInt num = BigInt(p.degree) * cur.num() * reference.den() -
                 reference.num() * cur.den();
    BigInt den = cur.den() * reference.den();
    BigInt md = BigInt(p.degree) * den;
    num %= md;
    if (num < 0) num += md;
    if (num % den == 0) {
      it.symbols.push_back(-1);
    } else {
      BigInt j = (num / den + 1) % p.degree;
      it.symbols.push_back(j.convert_to<int>());
    }
    cur = cur.map(p.degree);
  }
  return it;
}

// ---------------------------------------------------------------------------
// LandingTable

LandingTable::LandingTable(PolynomialDescriptor p, std::shared_ptr<const Universe> universe)
    : desc_(std::move(p)), universe_(std::move(universe)) {
  const Universe& u = *universe_;
  const int d = u.degree();
  if (desc_.degree != d) throw InvalidInput("descriptor degree mismatch");
  const uint32_t n = static_cast<uint32_t>(u.size());
  const int L = u.exponent();

  auto rlo = u.value_of(desc_.lower), rhi = u.value_of(desc_.upper);
  if (!rlo || !rhi)
    throw InvalidInput("universe does not contain the characteristic angles");

  std::vector<uint32_t> nxt(n);
  for (uint32_t i = 0; i < n; ++i) nxt[i] = u.map_index(i);

  std::vector<int8_t> sym(static_cast<size_t>(n) * L * 2);
  std::vector<bool> wild(n, false);
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t cur = i;
    for (int k = 0; k < L; ++k) {
      int s1 = symbol_of(u.value(cur), *rlo, d, u.modulus());
      int s2 = symbol_of(u.value(cur), *rhi, d, u.modulus());
      sym[(static_cast<size_t>(i) * L + k) * 2] = static_cast<int8_t>(s1);
      sym[(static_cast<size_t>(i) * L + k) * 2 + 1] = static_cast<int8_t>(s2);
      if (s1 < 0 || s2 < 0) wild[i] = true;
      cur = nxt[cur];
    }
  }

  UnionFind uf(n);
  {
    std::unordered_map<std::string_view, uint32_t> exact;
    exact.reserve(n * 2);
    for (uint32_t i = 0; i < n; ++i) {
      if (wild[i]) continue;
      std::string_view key(reinterpret_cast<const char*>(&sym[static_cast<size_t>(i) * L * 2]),
                           static_cast<size_t>(L) * 2);
      auto [it, inserted] = exact.try_emplace(key, i);
      if (!inserted) uf.unite(i, it->second);
    }
  }
  std::vector<uint32_t> wilds;
  for (uint32_t i = 0; i < n; ++i)
    if (wild[i]) wilds.push_back(i);
  auto compatible = [&](uint32_t a, uint32_t b) {
    const int8_t* pa = &sym[static_cast<size_t>(a) * L * 2];
    const int8_t* pb = &sym[static_cast<size_t>(b) * L * 2];
    for (int k = 0; k < 2 * L; ++k)
      if (pa[k] >= 0 && pb[k] >= 0 && pa[k] != pb[k]) return false;
    return true;
  };
  for (uint32_t w : wilds)
    for (uint32_t i = 0; i < n; ++i)
      if (i != w && compatible(w, i)) uf.unite(w, i);

  // classes ordered by least member
  class_of_.assign(n, 0);
  std::unordered_map<uint32_t, uint32_t> root_to_class;
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t r = uf.find(i);
    auto [it, inserted] = root_to_class.try_emplace(r, static_cast<uint32_t>(members_.size()));
    if (inserted) members_.emplace_back();
    class_of_[i] = it->second;
    members_[it->second].push_back(i);
  }

  // equivariance: the image of a class lies in a single class
  image_.assign(members_.size(), 0);
  for (uint32_t c = 0; c < members_.size(); ++c) {
    uint32_t img = class_of_[nxt[members_[c][0]]];
    for (uint32_t m : members_[c])
      if (class_of_[nxt[m]] != img)
        throw LandingCriterion("equivariance failed for class " + class_label(c));
    image_[c] = img;
  }

  validate();
}

std::optional<uint32_t> LandingTable::class_of(const Angle& t) const {
  auto i = universe_->index_of_angle(t);
  if (!i) return std::nullopt;
  return class_of_[*i];
}

std::vector<Angle> LandingTable::class_angles(uint32_t c) const {
  std::vector<Angle> out;
  for (uint32_t m : members_[c]) out.push_back(universe_->angle(m));
  return out;
}

std::string LandingTable::class_label(uint32_t c) const {
  std::string s;
  for (uint32_t m : members_[c]) {
    if (!s.empty()) s += "|";
    s += universe_->angle(m).str();
  }
  return s;
}

int LandingTable::class_period(uint32_t c) const {
  uint32_t cur = image_[c];
  int k = 1;
  while (cur != c) {
    cur = image_[cur];
    if (++k > static_cast<int>(members_.size()))
      throw StructuralError("class is not periodic");
  }
  return k;
}

RotationNumber LandingTable::class_rotation(uint32_t c) const {
  const auto& mem = members_[c];  // sorted by angle value
  const long sz = static_cast<long>(mem.size());
  if (sz == 1) return RotationNumber(0, 1);
  const int m = class_period(c);
  auto ret = [&](uint32_t i) {
    for (int k = 0; k < m; ++k) i = universe_->map_index(i);
    return i;
  };
  auto pos = [&](uint32_t i) {
    auto it = std::lower_bound(mem.begin(), mem.end(), i);
    if (it == mem.end() || *it != i)
      throw StructuralError("class not invariant under first return");
    return static_cast<long>(it - mem.begin());
  };
  long p = pos(ret(mem[0]));
  for (long k = 1; k < sz; ++k)
    if (pos(ret(mem[k])) != (k + p) % sz)
      throw StructuralError("first return does not rotate class " + class_label(c));
  if (p == 0) return RotationNumber(0, 1);
  if (std::gcd(p, sz) != 1)
    throw StructuralError("first return rotation is not reduced on " + class_label(c));
  return RotationNumber(p, sz);
}

std::vector<uint32_t> LandingTable::nonsingleton_classes() const {
  std::vector<uint32_t> out;
  for (uint32_t c = 0; c < members_.size(); ++c)
    if (members_[c].size() > 1) out.push_back(c);
  return out;
}

uint32_t LandingTable::critical_value_root_class(int k) const {
  if (k < 0 || k >= desc_.period) throw InvalidInput("iterate index out of range");
  auto i = universe_->index_of_angle(desc_.lower);
  if (!i) throw InvalidInput("characteristic angle missing from universe");
  uint32_t cur = *i;
  for (int j = 0; j < k; ++j) cur = universe_->map_index(cur);
  return class_of_[cur];
}

LandingTable::FixedClasses LandingTable::fixed_classes() const {
  FixedClasses out;
  const int d = universe_->degree();
  for (int k = 0; k < d - 1; ++k) {
    uint64_t v = k == 0 ? 0 : static_cast<uint64_t>(k) * (universe_->modulus() / (d - 1));
    auto i = universe_->index_of(v);
    if (!i) throw InternalConsistency("fixed angle missing from universe");
    uint32_t c = class_of_[*i];
    if (std::find(out.beta.begin(), out.beta.end(), c) == out.beta.end())
      out.beta.push_back(c);
  }
  std::vector<uint32_t> candidates;
  for (uint32_t c = 0; c < members_.size(); ++c) {
    if (image_[c] != c) continue;
    if (members_[c].size() < 2) continue;
    RotationNumber r;
    try {
      r = class_rotation(c);
    } catch (const StructuralError&) {
      continue;
    }
    if (r.zero()) continue;
    // members must form a single orbit
    std::set<uint32_t> orbit_set;
    uint32_t cur = members_[c][0];
    do {
      orbit_set.insert(cur);
      cur = universe_->map_index(cur);
    } while (cur != members_[c][0] && orbit_set.size() <= members_[c].size() + 1);
    if (orbit_set.size() != members_[c].size()) continue;
    candidates.push_back(c);
  }
  if (candidates.size() > 1)
    throw InternalConsistency("multiple alpha candidates in one table");
  if (!candidates.empty()) out.alpha = candidates[0];
  return out;
}

void LandingTable::validate() const {
  auto clo = class_of(desc_.lower), chi = class_of(desc_.upper);
  if (!clo || !chi || *clo != *chi)
    throw LandingCriterion("characteristic angles do not co-land for " + desc_.str());
  // pairwise unlinked convex hulls for non-singleton classes
  auto nonsing = nonsingleton_classes();
  for (size_t a = 0; a < nonsing.size(); ++a) {
    const auto& A = members_[nonsing[a]];
    for (size_t b = a + 1; b < nonsing.size(); ++b) {
      const auto& B = members_[nonsing[b]];
      // every member of B must fall in the same cyclic gap of A
      long gap = -1;
      for (uint32_t m : B) {
        auto it = std::upper_bound(A.begin(), A.end(), m);
        long g = (it - A.begin()) % static_cast<long>(A.size());
        if (gap < 0) gap = g;
        else if (gap != g)
          throw LandingCriterion("linked classes " + class_label(nonsing[a]) + " and " +
                                 class_label(nonsing[b]));
      }
    }
  }
}

LandingTable landing_table(const PolynomialDescriptor& p, int N) {
  if (N < 1 || N % p.period != 0)
    throw InvalidInput("landing bound must be a positive multiple of the period");
  auto u = std::make_shared<Universe>(Universe::periods_dividing(p.degree, N));
  return LandingTable(p, std::move(u));
}

std::vector<std::vector<Angle>> biaccessible_census(const PolynomialDescriptor& p, int N) {
  LandingTable t = landing_table(p, N);
  std::vector<std::vector<Angle>> out;
  for (uint32_t c : t.nonsingleton_classes()) out.push_back(t.class_angles(c));
  return out;
}

// ---------------------------------------------------------------------------
// Pullback oracle

namespace {

struct Lamination {
  int degree;
  uint64_t modulus;               // degree^depth * (degree^N - 1)
  uint64_t mlo, mhi;              // minor leaf, scaled
  std::vector<std::pair<uint64_t, uint64_t>> leaves;  // canonical (min,max)
  std::set<std::pair<uint64_t, uint64_t>> leaf_set;

  bool add(uint64_t a, uint64_t b) {
    auto leaf = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (leaf_set.insert(leaf).second) {
      leaves.push_back(leaf);
      return true;
    }
    return false;
  }

  // Preimage leaves of {x,y}. A leaf never crosses the minor, so either both
  // endpoints lie in the closed complement of the characteristic arc (lift
  // past mhi: one preimage leaf per gap arc, which also yields the majors for
  // the minor itself) or both lie in the closed characteristic arc (lift past
  // mlo: one preimage leaf per strip-side arc).
  std::vector<std::pair<uint64_t, uint64_t>> preimages(uint64_t x, uint64_t y) const {
    const uint64_t wlo = (mlo + modulus - mhi) % modulus;  // complement width
    auto pos = [&](uint64_t e) { return (e + modulus - mhi) % modulus; };
    const uint64_t px = pos(x), py = pos(y);
    uint64_t xl, yl;
    if ((px > wlo && px < modulus) || (py > wlo && py < modulus)) {
      // inside the characteristic arc: both endpoints must be
      if ((px < wlo && px > 0) || (py < wlo && py > 0))
        throw OracleAmbiguity("pullback leaf crosses the minor");
      xl = mlo + ((x + modulus - mlo) % modulus);
      yl = mlo + ((y + modulus - mlo) % modulus);
    } else {
      xl = mhi + px;
      yl = mhi + py;
    }
    if (xl % degree != 0 || yl % degree != 0)
      throw OracleAmbiguity("pullback endpoint not divisible at this depth");
    uint64_t F = modulus / degree;
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (int j = 0; j < degree; ++j) {
      uint64_t a = (xl / degree + j * F) % modulus;
      uint64_t b = (yl / degree + j * F) % modulus;
      out.emplace_back(a, b);
    }
    return out;
  }
};

}  // namespace

PullbackResult pullback_leaves(const PolynomialDescriptor& p, int N, int depth) {
  if (N < 1 || N % p.period != 0)
    throw InvalidInput("pullback bound must be a positive multiple of the period");
  if (depth < 0) throw InvalidInput("pullback depth must be non-negative");

  const int d = p.degree;
  uint64_t DN = pow_minus_one(d, N);
  uint64_t scale_pow = 1;
  for (int i = 0; i < depth; ++i) {
    if (scale_pow > UINT64_MAX / (2u * d * (DN + 1)))
      throw InvalidInput("pullback depth too large");
    scale_pow *= d;
  }

  Lamination lam;
  lam.degree = d;
  lam.modulus = scale_pow * DN;
  auto scaled = [&](const Angle& t) {
    return (t.num() * BigInt(lam.modulus / t.den().convert_to<uint64_t>()))
        .convert_to<uint64_t>();
  };
  lam.mlo = scaled(p.lower);
  lam.mhi = scaled(p.upper);

  // generation 0: the forward orbit of the characteristic leaf
  std::vector<std::pair<uint64_t, uint64_t>> frontier;
  {
    uint64_t a = lam.mlo, b = lam.mhi;
    for (int k = 0; k < p.period; ++k) {
      if (lam.add(a, b)) frontier.push_back(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
      a = (a * d) % lam.modulus;
      b = (b * d) % lam.modulus;
    }
  }

  for (int g = 1; g <= depth; ++g) {
    std::vector<std::pair<uint64_t, uint64_t>> next;
    for (const auto& leaf : frontier) {
      for (const auto& pre : lam.preimages(leaf.first, leaf.second))
        if (lam.add(pre.first, pre.second)) next.push_back(std::minmax(pre.first, pre.second));
    }
    frontier = std::move(next);
  }

  PullbackResult res;
  res.depth = depth;

  // retained leaves: both endpoints of period dividing N
  auto periodic_N = [&](uint64_t v) {
    return (static_cast<unsigned __int128>(v) * DN) % lam.modulus == 0;
  };
  for (const auto& leaf : lam.leaves)
    if (periodic_N(leaf.first) && periodic_N(leaf.second))
      res.retained.emplace_back(Angle(BigInt(leaf.first), BigInt(lam.modulus)),
                                Angle(BigInt(leaf.second), BigInt(lam.modulus)));
  // retained leaves must be pairwise unlinked
  for (size_t i = 0; i < res.retained.size(); ++i)
    for (size_t j = i + 1; j < res.retained.size(); ++j)
      if (circular_cross(res.retained[i], res.retained[j]))
        throw OracleAmbiguity("pullback produced crossing periodic leaves");

  // universe partition: leaf-graph connectivity plus leaf separation
  Universe u = Universe::periods_dividing(d, N);
  const uint32_t n = static_cast<uint32_t>(u.size());
  uint64_t uscale = lam.modulus / u.modulus();

  std::set<uint64_t> endpoint_values;
  for (const auto& leaf : lam.leaves) {
    endpoint_values.insert(leaf.first);
    endpoint_values.insert(leaf.second);
  }

  UnionFind uf(n);

  // separation: signature of strictly-containing leaf arcs via a sweep
  {
    struct Event {
      uint64_t pos;
      int kind;  // 0 = close, 1 = open
      uint32_t leaf;
      uint64_t other;  // the leaf's other endpoint
    };
    std::vector<Event> events;
    events.reserve(lam.leaves.size() * 2);
    for (uint32_t i = 0; i < lam.leaves.size(); ++i) {
      events.push_back({lam.leaves[i].first, 1, i, lam.leaves[i].second});
      events.push_back({lam.leaves[i].second, 0, i, lam.leaves[i].first});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
      if (a.pos != b.pos) return a.pos < b.pos;
      if (a.kind != b.kind) return a.kind < b.kind;  // closes before opens
      if (a.kind == 1) return a.other > b.other;     // outer arc opens first
      return a.other < b.other;
    });

    // state ids form a tree: pushing a leaf from state s gives a child state
    std::vector<std::pair<uint32_t, uint32_t>> state_parent{{UINT32_MAX, UINT32_MAX}};
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> state_lookup;
    std::vector<uint32_t> stack{0};

    std::vector<uint32_t> signature(n, 0);
    size_t ev = 0;
    for (uint32_t i = 0; i < n; ++i) {
      uint64_t pos = u.value(i) * uscale;
      while (ev < events.size() &&
             (events[ev].pos < pos || (events[ev].pos == pos && events[ev].kind == 0))) {
        if (events[ev].kind == 0) {
          if (stack.size() > 1) stack.pop_back();
        } else {
          auto key = std::make_pair(stack.back(), events[ev].leaf);
          auto it = state_lookup.find(key);
          if (it == state_lookup.end()) {
            it = state_lookup.emplace(key, static_cast<uint32_t>(state_parent.size())).first;
            state_parent.push_back(key);
          }
          stack.push_back(it->second);
        }
        ++ev;
      }
      signature[i] = stack.back();
    }

    // Signatures only group angles that are not leaf endpoints; endpoint
    // angles co-land exactly with their leaf-graph partners, while a gap
    // boundary can hold signature-equal single-ray angles next to them.
    std::unordered_map<uint32_t, uint32_t> sig_first;
    for (uint32_t i = 0; i < n; ++i) {
      if (lam.leaf_set.size() && endpoint_values.count(u.value(i) * uscale)) continue;
      auto [it, inserted] = sig_first.try_emplace(signature[i], i);
      if (!inserted) uf.unite(i, it->second);
    }
  }

  // leaf graph: endpoints of a leaf co-land; chains through preperiodic
  // endpoints still connect their periodic ends
  {
    std::unordered_map<uint64_t, uint32_t> node_of;
    std::vector<uint32_t> gparent;
    auto node = [&](uint64_t v) {
      auto [it, inserted] = node_of.try_emplace(v, static_cast<uint32_t>(gparent.size()));
      if (inserted) gparent.push_back(it->second);
      return it->second;
    };
    std::function<uint32_t(uint32_t)> gfind = [&](uint32_t x) {
      while (gparent[x] != x) x = gparent[x] = gparent[gparent[x]];
      return x;
    };
    for (const auto& leaf : lam.leaves)
      gparent[gfind(node(leaf.first))] = gfind(node(leaf.second));
    std::unordered_map<uint32_t, uint32_t> comp_first;
    for (uint32_t i = 0; i < n; ++i) {
      auto it = node_of.find(u.value(i) * uscale);
      if (it == node_of.end()) continue;
      uint32_t root = gfind(it->second);
      auto [jt, inserted] = comp_first.try_emplace(root, i);
      if (!inserted) uf.unite(i, jt->second);
    }
  }

  std::map<uint32_t, std::vector<Angle>> by_root;
  for (uint32_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(u.angle(i));
  for (auto& [root, cls] : by_root) res.classes.push_back(std::move(cls));
  std::sort(res.classes.begin(), res.classes.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return res;
}

PullbackResult stable_pullback_classes(const PolynomialDescriptor& p, int N) {
  PullbackResult prev = pullback_leaves(p, N, std::max(4, N));
  for (int depth = std::max(4, N) + 2; depth <= 26; depth += 2) {
    PullbackResult cur = pullback_leaves(p, N, depth);
    if (cur.classes == prev.classes) return cur;
    prev = std::move(cur);
  }
  throw OracleAmbiguity("pullback classes did not stabilize for " + p.str());
}

}  // namespace matecomb
