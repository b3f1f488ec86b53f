#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "edr/ring.hpp"

namespace edr {

/// Builds a ring handle. Capability flags:
///   Int        commutative, domain, both Euclidean, invariance and two-sided
///              generators decidable;
///   IntMod     as Int plus finite, minus domain;
///   PolyRat,
///   PolyFp     as Int;
///   SkewPolyFq,
///   QuatPoly   as Int minus commutative.
/// Throws InvalidParameters for a bad modulus, a composite p, or an
/// untabulated extension field.
RingHandle makeRing(const RingSpec& spec);

/// Largest exponent accepted after '^'.
inline constexpr std::uint64_t kMaxParsedExponent = std::uint64_t{1} << 16;

/// Element grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' digits)?
///   atom   := digits ('/' digits)? | 'x' | 'g' | 'i' | 'j' | 'k' | '(' expr ')'
/// Whitespace is ignored; products keep their written order. Which symbols
/// exist depends on the ring. Throws ParseError (with offset) or
/// ExponentTooLarge.
Element parseElement(const RingHandle& ring, std::string_view text);

/// Canonical text form; parseElement(ring, printElement(e)) == e.
std::string printElement(const Element& e);

}  // namespace edr
