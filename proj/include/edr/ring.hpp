#pragma once

// The effective-ring contract. A Ring is an immutable description of a
// concrete ring together with payload-level primitives; an Element pairs a
// canonical payload with the handle of the ring that owns it.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "edr/arith.hpp"

namespace edr {

enum class RingKind { Int, IntMod, PolyRat, PolyFp, SkewPolyFq, QuatPoly };

const char* ringKindName(RingKind kind) noexcept;
std::optional<RingKind> ringKindFromName(std::string_view name) noexcept;

/// Parameters identifying a concrete ring. Only the fields relevant to the
/// kind are meaningful; the rest keep their defaults.
struct RingSpec {
  RingKind kind = RingKind::Int;
  Integer modulus = 0;          // IntMod: n >= 2
  std::int64_t prime = 0;       // PolyFp, SkewPolyFq
  int extensionDegree = 1;      // SkewPolyFq: coefficients in F_{p^n}
  int twist = 1;                // SkewPolyFq: x*a = a^(p^twist) * x

  friend bool operator==(const RingSpec& a, const RingSpec& b);
};

struct Capabilities {
  bool commutative = false;
  bool domain = false;
  bool rightEuclidean = false;
  bool leftEuclidean = false;
  bool finite = false;
  bool invarianceDecidable = false;
  bool twoSidedGeneratorComputable = false;
};

using Payload = std::variant<Integer, std::vector<Rational>, std::vector<std::int64_t>, std::vector<Quaternion>>;

class Ring;
using RingHandle = std::shared_ptr<const Ring>;

class Element {
 public:
  Element(RingHandle ring, Payload value);

  const RingHandle& ring() const noexcept { return ring_; }
  const Payload& payload() const noexcept { return value_; }

  bool isZero() const;
  bool isOne() const;
  std::string str() const;

  friend bool operator==(const Element& a, const Element& b);
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator-(const Element& a);

  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

 private:
  RingHandle ring_;
  Payload value_;
};

/// Result of Euclidean division. For divmodRight: a = b*quotient + remainder;
/// for divmodLeft: a = quotient*b + remainder.
struct QuotRem {
  Payload quotient;
  Payload remainder;
};

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  Ring(RingSpec spec, Capabilities caps, std::string name);
  virtual ~Ring() = default;
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  const RingSpec& spec() const noexcept { return spec_; }
  const Capabilities& capabilities() const noexcept { return caps_; }
  const std::string& name() const noexcept { return name_; }
  bool sameAs(const Ring& other) const noexcept { return this == &other || spec_ == other.spec_; }

  RingHandle handle() const { return shared_from_this(); }
  Element wrap(Payload p) const { return Element(handle(), std::move(p)); }
  Element zero() const { return wrap(zeroPayload()); }
  Element one() const { return wrap(onePayload()); }
  Element fromInteger(const Integer& v) const { return wrap(integerPayload(v)); }

  /// Algebra generators used by the invariance and two-sided-ideal closures.
  std::vector<Element> generators() const;
  /// Deterministic bounded enumeration used by the witness searches:
  /// Int lists 0, 1, -1, ..., bound, -bound; finite rings list every element
  /// in ascending canonical order regardless of bound; polynomial rings list
  /// every polynomial of degree <= bound over a fixed coefficient alphabet,
  /// by degree and then lexicographically from the leading coefficient.
  std::vector<Element> enumerate(std::size_t bound) const;
  /// Named constants of the element grammar (x, g, i, j, k).
  std::optional<Element> atom(std::string_view symbol) const;
  /// Throws ParseError-coded Error when the ring has no rational literals.
  Element fromRational(const Rational& v) const { return wrap(rationalPayload(v)); }

  // Payload-level primitives. Inputs are assumed canonical and owned by
  // this ring; outputs are canonical.
  virtual Payload zeroPayload() const = 0;
  virtual Payload onePayload() const = 0;
  virtual Payload integerPayload(const Integer& v) const = 0;
  virtual Payload rationalPayload(const Rational& v) const;
  virtual bool isZero(const Payload& a) const = 0;
  virtual Payload add(const Payload& a, const Payload& b) const = 0;
  virtual Payload sub(const Payload& a, const Payload& b) const = 0;
  virtual Payload neg(const Payload& a) const = 0;
  virtual Payload mul(const Payload& a, const Payload& b) const = 0;
  virtual bool isUnit(const Payload& a) const = 0;
  /// Two-sided inverse; throws NotAUnit.
  virtual Payload inverse(const Payload& a) const = 0;
  /// Precondition: b nonzero. Euclidean size of the remainder is strictly
  /// below that of b, or the remainder is zero.
  virtual QuotRem divmodRight(const Payload& a, const Payload& b) const = 0;
  virtual QuotRem divmodLeft(const Payload& a, const Payload& b) const = 0;
  /// Euclidean size of a nonzero element (|a|, degree, gcd(a, n), ...).
  virtual Integer size(const Payload& a) const = 0;
  /// Unit u with a*u the canonical generator of aR (1 for zero).
  virtual Payload rightNormalizer(const Payload& a) const = 0;
  /// Unit u with u*a the canonical generator of Ra (1 for zero).
  virtual Payload leftNormalizer(const Payload& a) const = 0;
  virtual std::string format(const Payload& a) const = 0;

 protected:
  virtual std::vector<Payload> generatorPayloads() const = 0;
  virtual std::vector<Payload> enumeratePayloads(std::size_t bound) const = 0;
  virtual std::optional<Payload> atomPayload(std::string_view symbol) const = 0;

 private:
  RingSpec spec_;
  Capabilities caps_;
  std::string name_;
};

/// Throws MixedRings unless both elements belong to the same ring.
void requireSameRing(const Element& a, const Element& b);

Element pow(const Element& a, std::uint64_t exponent);

bool isUnit(const Element& a);
/// Throws NotAUnit.
Element inverse(const Element& a);

/// a = b*q + r. Throws DivisionByZero.
std::pair<Element, Element> divmodRight(const Element& a, const Element& b);
/// a = q*b + r. Throws DivisionByZero.
std::pair<Element, Element> divmodLeft(const Element& a, const Element& b);
Integer euclideanSize(const Element& a);

/// a*u with u the right normalizer: the canonical generator of aR.
Element canonicalRight(const Element& a);
/// u*a with u the left normalizer: the canonical generator of Ra.
Element canonicalLeft(const Element& a);
Element rightNormalizer(const Element& a);
Element leftNormalizer(const Element& a);

}  // namespace edr
