#pragma once

#include <string>
#include <vector>

#include "edr/core.hpp"
#include "edr/instances.hpp"
#include "edr/matrix.hpp"

namespace edr::test {

inline RingHandle integers() { return makeRing(RingSpec{RingKind::Int}); }
inline RingHandle integersMod(long n) {
  RingSpec s{RingKind::IntMod};
  s.modulus = n;
  return makeRing(s);
}
inline RingHandle rationalPoly() { return makeRing(RingSpec{RingKind::PolyRat}); }
inline RingHandle primePoly(long p) {
  RingSpec s{RingKind::PolyFp};
  s.prime = p;
  return makeRing(s);
}
inline RingHandle skewPoly(long p, int n, int twist = 1) {
  RingSpec s{RingKind::SkewPolyFq};
  s.prime = p;
  s.extensionDegree = n;
  s.twist = twist;
  return makeRing(s);
}
inline RingHandle quatPoly() { return makeRing(RingSpec{RingKind::QuatPoly}); }

inline Element el(const RingHandle& R, const std::string& text) { return parseElement(R, text); }

inline Matrix mat(const RingHandle& R, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Element>> out;
  for (const auto& row : rows) {
    std::vector<Element> r;
    for (const auto& e : row) r.push_back(el(R, e));
    out.push_back(std::move(r));
  }
  return Matrix::fromRows(R, out);
}

inline Matrix intMat(const RingHandle& R, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Element>> out;
  for (const auto& row : rows) {
    std::vector<Element> r;
    for (long v : row) r.push_back(R->fromInteger(Integer(v)));
    out.push_back(std::move(r));
  }
  return Matrix::fromRows(R, out);
}

inline std::vector<std::string> strs(const std::vector<Element>& elems) {
  std::vector<std::string> out;
  for (const auto& e : elems) out.push_back(printElement(e));
  return out;
}

}  // namespace edr::test
