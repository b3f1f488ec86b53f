#include "edr/core.hpp"

#include <map>

#include "edr/error.hpp"

namespace edr {

bool hasCapability(const Ring& ring, Capability cap) {
  const Capabilities& c = ring.capabilities();
  switch (cap) {
    case Capability::Commutative: return c.commutative;
    case Capability::Domain: return c.domain;
    case Capability::RightEuclidean: return c.rightEuclidean;
    case Capability::LeftEuclidean: return c.leftEuclidean;
    case Capability::Finite: return c.finite;
    case Capability::InvarianceDecidable: return c.invarianceDecidable;
    case Capability::TwoSidedGeneratorComputable: return c.twoSidedGeneratorComputable;
  }
  return false;
}

void requireCapability(const Ring& ring, Capability cap, const char* operation) {
  if (!hasCapability(ring, cap))
    throw Error(ErrorCode::UnsupportedCapability, std::string(operation) + " is not available over " + ring.name());
}

std::optional<Element> rightDivide(const Element& a, const Element& b) {
  requireCapability(*a.ring(), Capability::RightEuclidean, "rightDivide");
  auto [q, r] = divmodRight(a, b);
  if (r.isZero()) return q;
  return std::nullopt;
}

std::optional<Element> leftDivide(const Element& a, const Element& b) {
  requireCapability(*a.ring(), Capability::LeftEuclidean, "leftDivide");
  auto [q, r] = divmodLeft(a, b);
  if (r.isZero()) return q;
  return std::nullopt;
}

BezoutWitness rightBezout(const Element& a, const Element& b) {
  requireSameRing(a, b);
  requireCapability(*a.ring(), Capability::RightEuclidean, "rightBezout");
  if (a.isZero() && b.isZero()) throw Error(ErrorCode::ZeroInput, "rightBezout(0, 0)");
  const Ring& R = *a.ring();
  // Invariant: r_i = a*s_i + b*t_i.
  Element r0 = a, r1 = b;
  Element s0 = R.one(), s1 = R.zero();
  Element t0 = R.zero(), t1 = R.one();
  while (!r1.isZero()) {
    auto [q, rem] = divmodRight(r0, r1);
    Element s2 = s0 - s1 * q;
    Element t2 = t0 - t1 * q;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Element u = rightNormalizer(r0);
  Element g = r0 * u;
  Element s = s0 * u;
  Element t = t0 * u;
  auto a1 = rightDivide(a, g);
  auto b1 = rightDivide(b, g);
  if (!a1 || !b1) throw Error(ErrorCode::InvalidParameters, "right gcd does not divide its inputs");
  return {g, s, t, *a1, *b1, Side::Right};
}

BezoutWitness leftBezout(const Element& a, const Element& b) {
  requireSameRing(a, b);
  requireCapability(*a.ring(), Capability::LeftEuclidean, "leftBezout");
  if (a.isZero() && b.isZero()) throw Error(ErrorCode::ZeroInput, "leftBezout(0, 0)");
  const Ring& R = *a.ring();
  // Invariant: r_i = s_i*a + t_i*b.
  Element r0 = a, r1 = b;
  Element s0 = R.one(), s1 = R.zero();
  Element t0 = R.zero(), t1 = R.one();
  while (!r1.isZero()) {
    auto [q, rem] = divmodLeft(r0, r1);
    Element s2 = s0 - q * s1;
    Element t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Element u = leftNormalizer(r0);
  Element g = u * r0;
  Element s = u * s0;
  Element t = u * t0;
  auto a1 = leftDivide(a, g);
  auto b1 = leftDivide(b, g);
  if (!a1 || !b1) throw Error(ErrorCode::InvalidParameters, "left gcd does not divide its inputs");
  return {g, s, t, *a1, *b1, Side::Left};
}

Element rightGcd(const std::vector<Element>& elems) {
  if (elems.empty()) throw Error(ErrorCode::ZeroInput, "rightGcd of an empty list");
  std::optional<Element> acc;
  for (const auto& e : elems) {
    if (e.isZero()) continue;
    acc = acc ? rightBezout(*acc, e).g : canonicalRight(e);
  }
  return acc ? *acc : elems.front().ring()->zero();
}

bool isInvariant(const Element& a) {
  const Ring& R = *a.ring();
  requireCapability(R, Capability::InvarianceDecidable, "isInvariant");
  if (R.capabilities().commutative) return true;
  if (a.isZero()) return true;
  for (const auto& r : R.generators()) {
    if (!rightDivide(r * a, a)) return false;
    if (!leftDivide(a * r, a)) return false;
  }
  return true;
}

namespace {

using Combination = std::vector<std::pair<Element, Element>>;

// Merges terms sharing the same left factor and drops zero terms.
Combination compact(const Combination& terms) {
  std::map<std::string, std::size_t> index;
  Combination out;
  for (const auto& [u, v] : terms) {
    if (u.isZero() || v.isZero()) continue;
    auto key = u.str();
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, out.size());
      out.emplace_back(u, v);
    } else {
      out[it->second].second += v;
    }
  }
  Combination nonzero;
  for (auto& term : out)
    if (!term.second.isZero()) nonzero.push_back(std::move(term));
  return nonzero;
}

}  // namespace

Element evaluateCombination(const Element& a, const Combination& combination) {
  Element acc = a.ring()->zero();
  for (const auto& [u, v] : combination) acc += u * a * v;
  return acc;
}

TwoSidedGenerator twoSidedGenerator(const Element& a) {
  const Ring& R = *a.ring();
  requireCapability(R, Capability::TwoSidedGeneratorComputable, "twoSidedGenerator");
  if (a.isZero()) throw Error(ErrorCode::ZeroInput, "twoSidedGenerator(0)");
  if (R.capabilities().commutative) {
    return {a, {{R.one(), R.one()}}, R.one(), R.one()};
  }

  // h = sum u*a*v throughout; each strict update lowers the Euclidean size.
  Element un = rightNormalizer(a);
  Element h = a * un;
  Combination comb{{R.one(), un}};
  const auto gens = R.generators();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : gens) {
      Element rh = r * h;
      if (rightDivide(rh, h)) continue;
      BezoutWitness w = rightBezout(h, rh);
      Combination next;
      for (const auto& [u, v] : comb) {
        next.emplace_back(u, v * w.s);
        next.emplace_back(r * u, v * w.t);
      }
      comb = compact(next);
      h = w.g;
      changed = true;
    }
  }
  auto rq = rightDivide(a, h);
  auto lq = leftDivide(a, h);
  if (!rq || !lq) throw Error(ErrorCode::InvalidParameters, "two-sided generator does not divide its input");
  return {h, std::move(comb), *rq, *lq};
}

bool generatesUnitIdeal(const Element& a) {
  if (a.isZero()) return false;
  if (isUnit(a)) return true;
  return isUnit(twoSidedGenerator(a).aStar);
}

}  // namespace edr
