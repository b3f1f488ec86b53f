#include "edr/ring.hpp"

#include "edr/error.hpp"

namespace edr {

const char* ringKindName(RingKind kind) noexcept {
  switch (kind) {
    case RingKind::Int: return "Int";
    case RingKind::IntMod: return "IntMod";
    case RingKind::PolyRat: return "PolyRat";
    case RingKind::PolyFp: return "PolyFp";
    case RingKind::SkewPolyFq: return "SkewPolyFq";
    case RingKind::QuatPoly: return "QuatPoly";
  }
  return "?";
}

std::optional<RingKind> ringKindFromName(std::string_view name) noexcept {
  for (auto k : {RingKind::Int, RingKind::IntMod, RingKind::PolyRat, RingKind::PolyFp, RingKind::SkewPolyFq,
                 RingKind::QuatPoly})
    if (name == ringKindName(k)) return k;
  return std::nullopt;
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RingKind::IntMod: return a.modulus == b.modulus;
    case RingKind::PolyFp: return a.prime == b.prime;
    case RingKind::SkewPolyFq:
      return a.prime == b.prime && a.extensionDegree == b.extensionDegree && a.twist == b.twist;
    default: return true;
  }
}

Element::Element(RingHandle ring, Payload value) : ring_(std::move(ring)), value_(std::move(value)) {}

bool Element::isZero() const { return ring_->isZero(value_); }
bool Element::isOne() const { return value_ == ring_->onePayload(); }
std::string Element::str() const { return ring_->format(value_); }

void requireSameRing(const Element& a, const Element& b) {
  if (!a.ring()->sameAs(*b.ring()))
    throw Error(ErrorCode::MixedRings, "elements of " + a.ring()->name() + " and " + b.ring()->name());
}

bool operator==(const Element& a, const Element& b) {
  return a.ring_->sameAs(*b.ring_) && a.value_ == b.value_;
}

Element operator+(const Element& a, const Element& b) {
  requireSameRing(a, b);
  return Element(a.ring_, a.ring_->add(a.value_, b.value_));
}

Element operator-(const Element& a, const Element& b) {
  requireSameRing(a, b);
  return Element(a.ring_, a.ring_->sub(a.value_, b.value_));
}

Element operator*(const Element& a, const Element& b) {
  requireSameRing(a, b);
  return Element(a.ring_, a.ring_->mul(a.value_, b.value_));
}

Element operator-(const Element& a) { return Element(a.ring_, a.ring_->neg(a.value_)); }

Ring::Ring(RingSpec spec, Capabilities caps, std::string name)
    : spec_(std::move(spec)), caps_(caps), name_(std::move(name)) {}

Payload Ring::rationalPayload(const Rational& v) const {
  if (v.get_den() == 1) return integerPayload(v.get_num());
  throw Error(ErrorCode::ParseError, "rational literals are not elements of " + name_);
}

std::vector<Element> Ring::generators() const {
  std::vector<Element> out;
  for (auto& p : generatorPayloads()) out.push_back(wrap(std::move(p)));
  return out;
}

std::vector<Element> Ring::enumerate(std::size_t bound) const {
  std::vector<Element> out;
  auto payloads = enumeratePayloads(bound);
  out.reserve(payloads.size());
  for (auto& p : payloads) out.push_back(wrap(std::move(p)));
  return out;
}

std::optional<Element> Ring::atom(std::string_view symbol) const {
  if (auto p = atomPayload(symbol)) return wrap(std::move(*p));
  return std::nullopt;
}

Element pow(const Element& a, std::uint64_t exponent) {
  Element result = a.ring()->one();
  Element base = a;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

bool isUnit(const Element& a) { return a.ring()->isUnit(a.payload()); }

Element inverse(const Element& a) { return a.ring()->wrap(a.ring()->inverse(a.payload())); }

std::pair<Element, Element> divmodRight(const Element& a, const Element& b) {
  requireSameRing(a, b);
  if (b.isZero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  auto qr = a.ring()->divmodRight(a.payload(), b.payload());
  return {a.ring()->wrap(std::move(qr.quotient)), a.ring()->wrap(std::move(qr.remainder))};
}

std::pair<Element, Element> divmodLeft(const Element& a, const Element& b) {
  requireSameRing(a, b);
  if (b.isZero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  auto qr = a.ring()->divmodLeft(a.payload(), b.payload());
  return {a.ring()->wrap(std::move(qr.quotient)), a.ring()->wrap(std::move(qr.remainder))};
}

Integer euclideanSize(const Element& a) { return a.ring()->size(a.payload()); }

Element rightNormalizer(const Element& a) { return a.ring()->wrap(a.ring()->rightNormalizer(a.payload())); }
Element leftNormalizer(const Element& a) { return a.ring()->wrap(a.ring()->leftNormalizer(a.payload())); }
Element canonicalRight(const Element& a) { return a * rightNormalizer(a); }
Element canonicalLeft(const Element& a) { return leftNormalizer(a) * a; }

}  // namespace edr
