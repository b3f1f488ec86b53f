#pragma once

// Witness searches for the range conditions on a ring: unimodular rows,
// stable range 1 and 2, simple range 2 and n-simplicity.
//
// Every search walks Ring::enumerate(bound) in its fixed order and returns
// std::nullopt when the budget runs out. That outcome only says "nothing
// found within the bound"; it never certifies that no witness exists.
// Pairs are scanned with the last-named variable in the outer loop, so the
// search for (x, y) tries every x for y = 0 before moving on.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "edr/ring.hpp"

namespace edr {

// A search bound of 0 means defaultSearchBound(ring).
inline constexpr std::size_t kDefaultSearchBound = 0;

/// Budget that keeps enumerate(bound) small (about 64 elements) so pair
/// searches stay cheap: |t| <= 16 over Z, degree cut-offs over polynomial
/// rings. Finite rings ignore the bound.
std::size_t defaultSearchBound(const Ring& ring);

struct StableRange1Witness {
  Element t;  // (a + b*t) is a unit
};

struct StableRange2Witness {
  Element x, y;  // (a + c*x)R + (b + c*y)R = R
};

/// pR + qR = R, (p*a + q*b)R + p*c*R = dR with d canonical, and RdR = R.
struct SimpleRangeWitness {
  Element p, q, d;
  bool dStarUnit = false;
};

struct SimpleDegreeResult {
  std::optional<std::size_t> n;
  std::vector<std::pair<Element, Element>> combination;  // sum u*a*v = 1
  std::size_t bound = 0;
};

/// Iterated right gcd is a unit. Throws ZeroInput for an empty list.
bool isUnimodularRow(const std::vector<Element>& elems);

/// Throws NotUnimodular unless aR + bR = R.
std::optional<StableRange1Witness> findStableRange1Witness(const Element& a, const Element& b,
                                                           std::size_t bound = kDefaultSearchBound);
/// Throws NotUnimodular unless aR + bR + cR = R.
std::optional<StableRange2Witness> findStableRange2Witness(const Element& a, const Element& b, const Element& c,
                                                           std::size_t bound = kDefaultSearchBound);

/// Candidate witness for (p, q): computes d and the two-sided check. Absent
/// when p*a + q*b and p*c are both zero.
std::optional<SimpleRangeWitness> evaluateSimpleRangeCandidate(const Element& a, const Element& b, const Element& c,
                                                               const Element& p, const Element& q);
/// Re-derives every invariant of a witness from scratch.
bool validateSimpleRangeWitness(const Element& a, const Element& b, const Element& c, const SimpleRangeWitness& w);
/// Factors t = rgcd(p, q) out of (p, q) and recomputes d.
std::optional<SimpleRangeWitness> normalizeSimpleRangeWitness(const Element& a, const Element& b, const Element& c,
                                                              const SimpleRangeWitness& w);

/// Tries p = 1 with q enumerated first, then all (p, q) pairs. Returned
/// witnesses are normalized and validated. Throws ZeroC and
/// NotTwoSidedUnimodular.
std::optional<SimpleRangeWitness> findSimpleRange2Witness(const Element& a, const Element& b, const Element& c,
                                                          std::size_t bound = kDefaultSearchBound);

/// Intermediate values of the constructive stable-range-1 argument.
struct StableRange1Trace {
  Element d, a1, b1, u, v;  // aR + bR = dR, a = d*a1, b = d*b1, a*u + b*v = d
  Element cPrime;           // 1 - a1*u - b1*v, annihilated by d
  Element lambda, mu;       // stable range 2 witness for (a1, b1, cPrime)
  Element a0, b0;           // a1 + cPrime*lambda, b1 + cPrime*mu
  Element t;                // a0 + b0*t is a unit
  Element unit;
};

struct Theorem32Result {
  SimpleRangeWitness witness;  // p = 1, q = t
  std::optional<StableRange1Trace> trace;  // absent for a = b = 0
};

/// Witness for a commutative Bezout ring of stable range 1, built step by
/// step; each identity is checked before moving on (InvalidWitness if one
/// fails). HypothesisFailed when a stable-range search comes back empty.
/// Throws UnsupportedCapability for noncommutative rings, ZeroC,
/// NotTwoSidedUnimodular.
Theorem32Result theorem32Witness(const Element& a, const Element& b, const Element& c,
                                 std::size_t bound = kDefaultSearchBound);

/// Reduces [[a, c], [b, 0]] and reads (p, q) off the first row of P; the
/// b = 0 case uses (1, 1). Throws ZeroC, InvalidWitness, ReductionFailed.
SimpleRangeWitness witnessFromReduction(const Element& a, const Element& b, const Element& c);

/// (RaR = R and RbR = R) implies RabR = R.
bool checkProp34(const Element& a, const Element& b);

/// Smallest n <= nMax with sum_{i<=n} u_i*a*v_i = 1 over enumerate(coeffBound),
/// found breadth-first over reachable sums (v-major scan of the (u, v)
/// products). Throws ZeroInput. Absent is inconclusive, including when the
/// reachable set outgrows an internal cap.
SimpleDegreeResult simpleDegree(const Element& a, std::size_t nMax, std::size_t coeffBound);

}  // namespace edr
