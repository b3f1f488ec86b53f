#include "edr/probes.hpp"

#include <algorithm>
#include <unordered_map>

#include "edr/core.hpp"
#include "edr/error.hpp"
#include "edr/reduction.hpp"

namespace edr {

namespace {

constexpr std::size_t kReachableCap = 200000;

void requireNonzeroC(const Element& c) {
  if (c.isZero()) throw Error(ErrorCode::ZeroC, "c must be nonzero");
}

void requireTwoSidedUnimodular(const Element& a, const Element& b, const Element& c) {
  if (!generatesUnitIdeal(rightGcd({a, b, c})))
    throw Error(ErrorCode::NotTwoSidedUnimodular, "RaR + RbR + RcR is a proper ideal");
}

// Largest degree d with size^(d+1) <= 64, at least 0.
std::size_t degreeBudget(std::size_t alphabet) {
  std::size_t d = 0, count = alphabet * alphabet;
  while (count <= 64) {
    ++d;
    count *= alphabet;
  }
  return d;
}

std::vector<Element> searchSpace(const Ring& ring, std::size_t bound) {
  return ring.enumerate(bound == 0 ? defaultSearchBound(ring) : bound);
}

void ensure(bool ok, const char* identity) {
  if (!ok) throw Error(ErrorCode::InvalidWitness, std::string("identity failed: ") + identity);
}

}  // namespace

std::size_t defaultSearchBound(const Ring& ring) {
  const RingSpec& s = ring.spec();
  switch (s.kind) {
    case RingKind::Int: return 16;
    case RingKind::IntMod: return 1;
    case RingKind::PolyRat: return degreeBudget(3);
    case RingKind::PolyFp: return degreeBudget(static_cast<std::size_t>(s.prime));
    case RingKind::SkewPolyFq: {
      std::size_t q = 1;
      for (int i = 0; i < s.extensionDegree && q <= 64; ++i) q *= static_cast<std::size_t>(s.prime);
      return degreeBudget(q);
    }
    case RingKind::QuatPoly: return degreeBudget(9);
  }
  return 1;
}

bool isUnimodularRow(const std::vector<Element>& elems) {
  if (elems.empty()) throw Error(ErrorCode::ZeroInput, "empty row");
  for (const auto& e : elems) requireSameRing(elems.front(), e);
  Element g = rightGcd(elems);
  return !g.isZero() && isUnit(g);
}

std::optional<StableRange1Witness> findStableRange1Witness(const Element& a, const Element& b, std::size_t bound) {
  if (!isUnimodularRow({a, b})) throw Error(ErrorCode::NotUnimodular, "aR + bR is a proper right ideal");
  for (const auto& t : searchSpace(*a.ring(), bound))
    if (isUnit(a + b * t)) return StableRange1Witness{t};
  return std::nullopt;
}

std::optional<StableRange2Witness> findStableRange2Witness(const Element& a, const Element& b, const Element& c,
                                                           std::size_t bound) {
  if (!isUnimodularRow({a, b, c})) throw Error(ErrorCode::NotUnimodular, "aR + bR + cR is a proper right ideal");
  const auto elems = searchSpace(*a.ring(), bound);
  for (const auto& y : elems) {
    const Element by = b + c * y;
    for (const auto& x : elems)
      if (isUnimodularRow({a + c * x, by})) return StableRange2Witness{x, y};
  }
  return std::nullopt;
}

std::optional<SimpleRangeWitness> evaluateSimpleRangeCandidate(const Element& a, const Element& b, const Element& c,
                                                               const Element& p, const Element& q) {
  const Element alpha = p * a + q * b;
  const Element beta = p * c;
  if (alpha.isZero() && beta.isZero()) return std::nullopt;
  Element d = rightBezout(alpha, beta).g;
  bool unit = generatesUnitIdeal(d);
  return SimpleRangeWitness{p, q, std::move(d), unit};
}

bool validateSimpleRangeWitness(const Element& a, const Element& b, const Element& c, const SimpleRangeWitness& w) {
  requireSameRing(a, b);
  requireSameRing(a, c);
  requireSameRing(a, w.p);
  requireSameRing(a, w.q);
  if (!w.dStarUnit) return false;
  if (!isUnimodularRow({w.p, w.q})) return false;
  auto fresh = evaluateSimpleRangeCandidate(a, b, c, w.p, w.q);
  return fresh && fresh->dStarUnit && fresh->d == w.d;
}

std::optional<SimpleRangeWitness> normalizeSimpleRangeWitness(const Element& a, const Element& b, const Element& c,
                                                              const SimpleRangeWitness& w) {
  if (w.p.isZero() && w.q.isZero()) return std::nullopt;
  BezoutWitness t = rightBezout(w.p, w.q);
  if (isUnit(t.g)) return w;
  return evaluateSimpleRangeCandidate(a, b, c, t.a1, t.b1);
}

std::optional<SimpleRangeWitness> findSimpleRange2Witness(const Element& a, const Element& b, const Element& c,
                                                          std::size_t bound) {
  requireSameRing(a, b);
  requireSameRing(a, c);
  requireNonzeroC(c);
  requireTwoSidedUnimodular(a, b, c);
  const Ring& R = *a.ring();
  const auto elems = searchSpace(R, bound);

  auto accept = [&](const Element& p, const Element& q) -> std::optional<SimpleRangeWitness> {
    auto w = evaluateSimpleRangeCandidate(a, b, c, p, q);
    if (!w || !w->dStarUnit) return std::nullopt;
    auto n = normalizeSimpleRangeWitness(a, b, c, *w);
    if (n && validateSimpleRangeWitness(a, b, c, *n)) return n;
    return std::nullopt;
  };

  const Element one = R.one();
  for (const auto& q : elems)
    if (auto w = accept(one, q)) return w;
  for (const auto& q : elems)
    for (const auto& p : elems) {
      if (p.isOne()) continue;
      if (auto w = accept(p, q)) return w;
    }
  return std::nullopt;
}

Theorem32Result theorem32Witness(const Element& a, const Element& b, const Element& c, std::size_t bound) {
  requireSameRing(a, b);
  requireSameRing(a, c);
  const Ring& R = *a.ring();
  requireCapability(R, Capability::Commutative, "theorem32Witness");
  requireNonzeroC(c);
  requireTwoSidedUnimodular(a, b, c);
  const Element one = R.one();

  if (a.isZero() && b.isZero()) {
    // (0*0 + 0)R + cR = cR and RcR = R already.
    auto w = evaluateSimpleRangeCandidate(a, b, c, one, R.zero());
    ensure(w && validateSimpleRangeWitness(a, b, c, *w), "RcR = R");
    return {*w, std::nullopt};
  }

  BezoutWitness bz = rightBezout(a, b);
  const Element& d = bz.g;
  const Element cPrime = one - bz.a1 * bz.s - bz.b1 * bz.t;
  ensure((d * cPrime).isZero(), "d*(1 - a1*u - b1*v) = 0");
  ensure(bz.a1 * bz.s + bz.b1 * bz.t + cPrime == one, "a1*u + b1*v + c' = 1");

  auto sr2 = findStableRange2Witness(bz.a1, bz.b1, cPrime, bound);
  if (!sr2) throw Error(ErrorCode::HypothesisFailed, "no stable range 2 witness for (a1, b1, c') within the bound");
  const Element a0 = bz.a1 + cPrime * sr2->x;
  const Element b0 = bz.b1 + cPrime * sr2->y;
  ensure(a == d * a0, "a = d*a0");
  ensure(b == d * b0, "b = d*b0");
  ensure(isUnimodularRow({a0, b0}), "a0*R + b0*R = R");

  auto sr1 = findStableRange1Witness(a0, b0, bound);
  if (!sr1) throw Error(ErrorCode::HypothesisFailed, "no stable range 1 witness for (a0, b0) within the bound");
  const Element unit = a0 + b0 * sr1->t;
  ensure(isUnit(unit), "a0 + b0*t is a unit");
  ensure(a + b * sr1->t == d * unit, "a + b*t = d*w");

  auto w = evaluateSimpleRangeCandidate(a, b, c, one, sr1->t);
  ensure(w && validateSimpleRangeWitness(a, b, c, *w), "R(a + b*t)R + RcR = R");
  StableRange1Trace trace{d, bz.a1, bz.b1, bz.s, bz.t, cPrime, sr2->x, sr2->y, a0, b0, sr1->t, unit};
  return {*w, std::move(trace)};
}

SimpleRangeWitness witnessFromReduction(const Element& a, const Element& b, const Element& c) {
  requireSameRing(a, b);
  requireSameRing(a, c);
  requireNonzeroC(c);
  const Ring& R = *a.ring();
  if (b.isZero()) {
    auto w = evaluateSimpleRangeCandidate(a, b, c, R.one(), R.one());
    if (!w || !validateSimpleRangeWitness(a, b, c, *w))
      throw Error(ErrorCode::InvalidWitness, "(1, 1) does not satisfy R(a + b)R + RcR = R");
    return *w;
  }
  Matrix A = Matrix::fromRows(R.handle(), {{a, c}, {b, R.zero()}});
  Reduction red = canonical2x2(A, PivotStrategy::Elementary);
  auto w = evaluateSimpleRangeCandidate(a, b, c, red.cert.P(0, 0), red.cert.P(0, 1));
  if (w) w = normalizeSimpleRangeWitness(a, b, c, *w);
  if (!w || !validateSimpleRangeWitness(a, b, c, *w))
    throw Error(ErrorCode::InvalidWitness, "first row of the reducing P is not a witness");
  return *w;
}

bool checkProp34(const Element& a, const Element& b) {
  requireSameRing(a, b);
  if (!generatesUnitIdeal(a) || !generatesUnitIdeal(b)) return true;
  return generatesUnitIdeal(a * b);
}

SimpleDegreeResult simpleDegree(const Element& a, std::size_t nMax, std::size_t coeffBound) {
  if (a.isZero()) throw Error(ErrorCode::ZeroInput, "simpleDegree(0)");
  const Ring& R = *a.ring();
  SimpleDegreeResult result;
  result.bound = coeffBound;
  const auto elems = R.enumerate(coeffBound);

  struct Term {
    Element value, u, v;
  };
  std::vector<Term> terms;
  std::unordered_map<std::string, std::size_t> termIndex;
  for (const auto& v : elems)
    for (const auto& u : elems) {
      Element value = u * a * v;
      if (termIndex.emplace(value.str(), terms.size()).second) terms.push_back({std::move(value), u, v});
    }

  // node: a reachable sum with its parent node and the term that extends it
  struct Node {
    Element value;
    std::size_t parent, term, depth;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  const std::string target = R.one().str();

  auto finish = [&](std::size_t node) {
    result.n = nodes[node].depth;
    for (std::size_t k = node; k != kRoot; k = nodes[k].parent)
      result.combination.emplace_back(terms[nodes[k].term].u, terms[nodes[k].term].v);
    std::reverse(result.combination.begin(), result.combination.end());
    return result;
  };

  std::vector<std::size_t> frontier;
  for (std::size_t i = 0; i < terms.size() && nMax >= 1; ++i) {
    nodes.push_back({terms[i].value, kRoot, i, 1});
    seen.emplace(terms[i].value.str(), nodes.size() - 1);
    frontier.push_back(nodes.size() - 1);
    if (terms[i].value.str() == target) return finish(nodes.size() - 1);
  }
  for (std::size_t depth = 2; depth <= nMax && !frontier.empty(); ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t f : frontier)
      for (std::size_t i = 0; i < terms.size(); ++i) {
        Element value = nodes[f].value + terms[i].value;
        std::string key = value.str();
        if (seen.count(key)) continue;
        nodes.push_back({std::move(value), f, i, depth});
        seen.emplace(key, nodes.size() - 1);
        if (key == target) return finish(nodes.size() - 1);
        next.push_back(nodes.size() - 1);
        if (nodes.size() > kReachableCap) return result;
      }
    frontier = std::move(next);
  }
  return result;
}

}  // namespace edr
