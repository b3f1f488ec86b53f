#include <doctest.h>

#include <random>

#include "edr/error.hpp"
#include "support.hpp"

using namespace edr;
using namespace edr::test;

TEST_CASE("swap rows of the identity") {
  auto Z = integers();
  Matrix I = Matrix::identity(Z, 3);
  auto cert = applyRowOp(EquivalenceCertificate::identity(I), SwapOp{0, 2});
  CHECK(cert.P == cert.Pinv);
  CHECK(cert.D == cert.P);
  CHECK(verifyCertificate(I, cert));
}

TEST_CASE("row addition clears an entry") {
  auto Z = integers();
  Matrix A = intMat(Z, {{1, 0}, {3, 1}});
  auto cert = applyRowOp(EquivalenceCertificate::identity(A), AddMultipleOp{1, 0, el(Z, "-3")});
  CHECK(cert.D == Matrix::identity(Z, 2));
  CHECK(verifyCertificate(A, cert));
}

TEST_CASE("quaternion row scaling records the inverse unit") {
  auto H = quatPoly();
  Matrix A = mat(H, {{"x", "1"}, {"i", "x - j"}});
  auto cert = applyRowOp(EquivalenceCertificate::identity(A), ScaleOp{0, el(H, "k")});
  CHECK(cert.Pinv(0, 0) == el(H, "-k"));
  CHECK(cert.D(0, 0) == el(H, "k*x"));
  CHECK(verifyCertificate(A, cert));
  auto colCert = applyColOp(EquivalenceCertificate::identity(A), ScaleOp{1, el(H, "i")});
  CHECK(colCert.D(1, 1) == el(H, "(x - j)*i"));
  CHECK(verifyCertificate(A, colCert));
}

TEST_CASE("operation errors") {
  auto Z = integers();
  Matrix A = intMat(Z, {{1, 2}, {3, 4}});
  auto cert = EquivalenceCertificate::identity(A);
  try {
    cert.applyRow(ScaleOp{0, el(Z, "2")});
    FAIL("scaled by a non-unit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAUnit);
  }
  try {
    cert.applyCol(SwapOp{0, 5});
    FAIL("index out of range accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
  CHECK_THROWS_AS(A * intMat(Z, {{1, 2, 3}}), Error);
  CHECK_THROWS_AS(Matrix(Z, 0, 2), Error);
}

TEST_CASE("forged certificate is rejected") {
  auto Z = integers();
  Matrix A = intMat(Z, {{2, 4}, {6, 8}});
  auto cert = EquivalenceCertificate::identity(A);
  CHECK(verifyCertificate(A, cert));
  cert.D(1, 1) = el(Z, "9");
  CHECK_FALSE(verifyCertificate(A, cert));
  auto other = EquivalenceCertificate::identity(A);
  other.Pinv(0, 1) = el(Z, "1");
  CHECK_FALSE(verifyCertificate(A, other));
  CHECK_THROWS_AS(verifyCertificate(intMat(Z, {{1, 2, 3}}), EquivalenceCertificate::identity(A)), Error);
}

TEST_CASE("random operation sequences keep certificates valid") {
  std::vector<RingHandle> rings{integers(), integersMod(12), primePoly(3), skewPoly(2, 2), quatPoly()};
  std::mt19937 rng(7);
  for (const auto& R : rings) {
    CAPTURE(R->name());
    auto elems = R->enumerate(R->spec().kind == RingKind::Int ? 3 : 1);
    std::vector<Element> units;
    for (const auto& e : elems)
      if (isUnit(e)) units.push_back(e);
    auto pick = [&](const std::vector<Element>& v) { return v[rng() % v.size()]; };
    for (int trial = 0; trial < 20; ++trial) {
      Matrix A(R, 3, 2);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) A(i, j) = pick(elems);
      auto cert = EquivalenceCertificate::identity(A);
      // The same ops applied as explicit elementary matrices.
      Matrix P = Matrix::identity(R, 3), Q = Matrix::identity(R, 2);
      for (int step = 0; step < 12; ++step) {
        bool row = rng() % 2 == 0;
        std::size_t n = row ? 3 : 2;
        std::size_t s = rng() % n, t = (s + 1 + rng() % (n - 1)) % n;
        Matrix E = Matrix::identity(R, n);
        switch (rng() % 3) {
          case 0:
            if (row) cert.applyRow(SwapOp{s, t}); else cert.applyCol(SwapOp{s, t});
            E(s, s) = R->zero();
            E(t, t) = R->zero();
            E(s, t) = R->one();
            E(t, s) = R->one();
            break;
          case 1: {
            Element u = pick(units);
            if (row) cert.applyRow(ScaleOp{s, u}); else cert.applyCol(ScaleOp{s, u});
            E(s, s) = u;
            break;
          }
          default: {
            Element f = pick(elems);
            if (row) {
              cert.applyRow(AddMultipleOp{t, s, f});
              E(t, s) = f;
            } else {
              cert.applyCol(AddMultipleOp{t, s, f});
              E(s, t) = f;
            }
          }
        }
        if (row) P = E * P; else Q = Q * E;
      }
      CHECK(verifyCertificate(A, cert));
      CHECK(cert.P == P);
      CHECK(cert.Q == Q);
    }
  }
}

TEST_CASE("compose chains certificates") {
  auto Z = integers();
  Matrix A = intMat(Z, {{2, 4}, {6, 8}});
  auto first = applyRowOp(EquivalenceCertificate::identity(A), AddMultipleOp{1, 0, el(Z, "-3")});
  auto second = applyColOp(EquivalenceCertificate::identity(first.D), AddMultipleOp{1, 0, el(Z, "-2")});
  auto both = compose(first, second);
  CHECK(verifyCertificate(A, both));
  CHECK(both.D == intMat(Z, {{2, 0}, {0, -4}}));
}

TEST_CASE("isTotalDivisor") {
  auto Z = integers();
  CHECK(isTotalDivisor(el(Z, "2"), el(Z, "4")));
  CHECK_FALSE(isTotalDivisor(el(Z, "4"), el(Z, "2")));
  CHECK(isTotalDivisor(el(Z, "5"), el(Z, "0")));
  CHECK_FALSE(isTotalDivisor(el(Z, "0"), el(Z, "5")));
  for (const auto& a : Z->enumerate(6))
    for (const auto& b : Z->enumerate(6)) {
      if (a.isZero()) continue;
      CHECK(isTotalDivisor(a, b) == rightDivide(b, a).has_value());
    }
  auto H = quatPoly();
  CHECK(isTotalDivisor(el(H, "x - i"), el(H, "x^2 + 1")));
  CHECK_FALSE(isTotalDivisor(el(H, "x - i"), el(H, "x - j")));
  // RbR = R whenever b has a unit two-sided generator, so only units divide it totally.
  CHECK_FALSE(isTotalDivisor(el(H, "x - i"), el(H, "(x - i)*(x - j)")));
  for (const auto& u : {el(H, "1"), el(H, "k"), el(H, "-2*i")})
    for (const char* b : {"x", "x - i", "x^2 + 1", "0"}) CHECK(isTotalDivisor(u, el(H, b)));
}

TEST_CASE("diagonal report") {
  auto H = quatPoly();
  Matrix D = mat(H, {{"1", "0"}, {"0", "x - i"}});
  DiagonalReport rep = makeDiagonalReport(D);
  CHECK(rep.diagonal.size() == 2);
  CHECK(rep.totalDivisorChain == std::vector<bool>{true});
  CHECK(rep.invariantFlags == std::vector<bool>{true, false});
}
