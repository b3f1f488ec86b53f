#pragma once

// Generic algorithms over an effective ring: exact divisibility, Bezout
// witnesses with cofactors, invariance tests and two-sided ideal
// generators. Everything here is built on the Ring primitives only.
//
// Generator-level invariance. If r*a lies in aR for every algebra generator
// r, then so does (r1*r2)*a = r1*(a*s2) = (r1*a)*s2 = a*s1*s2, and sums and
// integer multiples trivially do; hence Ra is contained in aR. The mirrored
// check a*r in Ra gives the other inclusion, so aR = Ra. The same argument
// shows that a fixed point h of h <- rgcd(h, r*h) satisfies Rh inside hR,
// which together with a in hR and h in RaR gives RaR = hR.

#include <optional>
#include <utility>
#include <vector>

#include "edr/ring.hpp"

namespace edr {

enum class Side { Left, Right };

/// Right side: a*s + b*t = g, a = g*a1, b = g*b1, aR + bR = gR.
/// Left side:  s*a + t*b = g, a = a1*g, b = b1*g, Ra + Rb = Rg.
struct BezoutWitness {
  Element g, s, t, a1, b1;
  Side side = Side::Right;
};

/// aStar generates RaR on both sides; combination lists pairs (u, v) with
/// sum u*a*v = aStar.
struct TwoSidedGenerator {
  Element aStar;
  std::vector<std::pair<Element, Element>> combination;
  Element rightQuotient;  // a = aStar * rightQuotient
  Element leftQuotient;   // a = leftQuotient * aStar
};

enum class Capability {
  Commutative,
  Domain,
  RightEuclidean,
  LeftEuclidean,
  Finite,
  InvarianceDecidable,
  TwoSidedGeneratorComputable,
};

bool hasCapability(const Ring& ring, Capability cap);
/// Throws UnsupportedCapability.
void requireCapability(const Ring& ring, Capability cap, const char* operation);

/// q with a = b*q, if any. Throws DivisionByZero.
std::optional<Element> rightDivide(const Element& a, const Element& b);
/// q with a = q*b, if any. Throws DivisionByZero.
std::optional<Element> leftDivide(const Element& a, const Element& b);

/// Precondition (a, b) != (0, 0); throws ZeroInput otherwise. g is the
/// canonical generator (unit part stripped on the matching side).
BezoutWitness rightBezout(const Element& a, const Element& b);
BezoutWitness leftBezout(const Element& a, const Element& b);

/// Canonical right gcd of a list, skipping zeros; zero for an all-zero list.
Element rightGcd(const std::vector<Element>& elems);

bool isInvariant(const Element& a);
TwoSidedGenerator twoSidedGenerator(const Element& a);

/// Evaluates sum u*a*v.
Element evaluateCombination(const Element& a, const std::vector<std::pair<Element, Element>>& combination);

/// RaR = R, i.e. the two-sided generator of a is a unit. False for zero.
bool generatesUnitIdeal(const Element& a);

}  // namespace edr
