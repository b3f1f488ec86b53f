#include <doctest.h>

#include "edr/error.hpp"
#include "edr/probes.hpp"
#include "support.hpp"

using namespace edr;
using namespace edr::test;

TEST_CASE("isUnimodularRow") {
  auto Z = integers();
  CHECK(isUnimodularRow({el(Z, "2"), el(Z, "3")}));
  CHECK_FALSE(isUnimodularRow({el(Z, "2"), el(Z, "4")}));
  CHECK_FALSE(isUnimodularRow({el(Z, "0"), el(Z, "0")}));
  auto Z12 = integersMod(12);
  CHECK(isUnimodularRow({el(Z12, "3"), el(Z12, "4")}));
  CHECK_THROWS_AS(isUnimodularRow({}), Error);
}

TEST_CASE("stable range 1 witnesses") {
  auto Z12 = integersMod(12);
  auto w = findStableRange1Witness(el(Z12, "3"), el(Z12, "4"));
  REQUIRE(w);
  CHECK(w->t == el(Z12, "1"));

  auto Z = integers();
  w = findStableRange1Witness(el(Z, "-1"), el(Z, "8"));
  REQUIRE(w);
  CHECK(w->t.isZero());
  w = findStableRange1Witness(el(Z, "2"), el(Z, "3"));
  REQUIRE(w);
  CHECK(w->t == el(Z, "-1"));
  // 5 + 7t is never +-1, so the search runs dry; that is not an error.
  CHECK_FALSE(findStableRange1Witness(el(Z, "5"), el(Z, "7"), 20).has_value());
  try {
    findStableRange1Witness(el(Z, "2"), el(Z, "4"));
    FAIL("non-unimodular pair accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnimodular);
  }
}

TEST_CASE("stable range 2 witnesses") {
  auto Z = integers();
  auto w = findStableRange2Witness(el(Z, "3"), el(Z, "5"), el(Z, "7"));
  REQUIRE(w);
  CHECK(w->x.isZero());
  CHECK(w->y.isZero());
  w = findStableRange2Witness(el(Z, "1"), el(Z, "6"), el(Z, "9"));
  REQUIRE(w);
  CHECK(w->x.isZero());
  CHECK(w->y.isZero());
  w = findStableRange2Witness(el(Z, "2"), el(Z, "4"), el(Z, "3"));
  REQUIRE(w);
  CHECK(w->x == el(Z, "1"));
  CHECK(w->y.isZero());
  CHECK_THROWS_AS(findStableRange2Witness(el(Z, "2"), el(Z, "4"), el(Z, "6")), Error);
}

TEST_CASE("simple range 2 witnesses") {
  auto Z = integers();
  auto w = findSimpleRange2Witness(el(Z, "2"), el(Z, "3"), el(Z, "4"));
  REQUIRE(w);
  CHECK(w->p == el(Z, "1"));
  CHECK(w->q == el(Z, "1"));
  CHECK(w->d == el(Z, "1"));
  CHECK(w->dStarUnit);

  w = findSimpleRange2Witness(el(Z, "1"), el(Z, "8"), el(Z, "6"));
  REQUIRE(w);
  CHECK(w->q.isZero());
  CHECK(w->d == el(Z, "1"));

  w = findSimpleRange2Witness(el(Z, "6"), el(Z, "10"), el(Z, "15"));
  REQUIRE(w);
  CHECK(w->p == el(Z, "1"));
  CHECK(w->q == el(Z, "1"));

  try {
    findSimpleRange2Witness(el(Z, "2"), el(Z, "3"), el(Z, "0"));
    FAIL("c = 0 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroC);
  }
  try {
    findSimpleRange2Witness(el(Z, "2"), el(Z, "4"), el(Z, "6"));
    FAIL("proper ideal accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTwoSidedUnimodular);
  }
}

TEST_CASE("simple range 2 over Z succeeds with p = 1") {
  auto Z = integers();
  std::size_t count = 0;
  for (long a = -20; a <= 20; a += 3)
    for (long b = -20; b <= 20; b += 2)
      for (long c = -20; c <= 20; c += 5) {
        if (c == 0) continue;
        Element A = Z->fromInteger(a), B = Z->fromInteger(b), C = Z->fromInteger(c);
        if (!isUnimodularRow({A, B, C})) continue;
        auto w = findSimpleRange2Witness(A, B, C, 20);
        REQUIRE(w);
        CHECK(w->p.isOne());
        CHECK(validateSimpleRangeWitness(A, B, C, *w));
        ++count;
      }
  CHECK(count > 100);
}

TEST_CASE("normalization factors out the common right divisor") {
  auto Z = integers();
  Element a = el(Z, "2"), b = el(Z, "3"), c = el(Z, "4");
  auto raw = evaluateSimpleRangeCandidate(a, b, c, el(Z, "3"), el(Z, "3"));
  REQUIRE(raw);
  auto n = normalizeSimpleRangeWitness(a, b, c, *raw);
  REQUIRE(n);
  CHECK(n->p == el(Z, "1"));
  CHECK(n->q == el(Z, "1"));
  CHECK(validateSimpleRangeWitness(a, b, c, *n));
  CHECK_FALSE(validateSimpleRangeWitness(a, b, c, *raw));
}

TEST_CASE("theorem32Witness") {
  auto Z12 = integersMod(12);
  Theorem32Result r = theorem32Witness(el(Z12, "2"), el(Z12, "3"), el(Z12, "4"));
  CHECK(validateSimpleRangeWitness(el(Z12, "2"), el(Z12, "3"), el(Z12, "4"), r.witness));
  CHECK(r.witness.p.isOne());
  REQUIRE(r.trace);
  CHECK((r.trace->d * r.trace->cPrime).isZero());
  CHECK(isUnit(el(Z12, "2") + el(Z12, "3") * r.witness.q));

  r = theorem32Witness(el(Z12, "1"), el(Z12, "5"), el(Z12, "7"));
  CHECK(r.witness.q.isZero());

  auto Z30 = integersMod(30);
  r = theorem32Witness(el(Z30, "6"), el(Z30, "5"), el(Z30, "10"));
  CHECK(validateSimpleRangeWitness(el(Z30, "6"), el(Z30, "5"), el(Z30, "10"), r.witness));

  r = theorem32Witness(el(Z30, "0"), el(Z30, "0"), el(Z30, "7"));
  CHECK_FALSE(r.trace.has_value());

  CHECK_THROWS_AS(theorem32Witness(el(quatPoly(), "x"), el(quatPoly(), "1"), el(quatPoly(), "1")), Error);
}

TEST_CASE("witnessFromReduction") {
  auto Z = integers();
  SimpleRangeWitness w = witnessFromReduction(el(Z, "2"), el(Z, "5"), el(Z, "3"));
  CHECK(validateSimpleRangeWitness(el(Z, "2"), el(Z, "5"), el(Z, "3"), w));
  w = witnessFromReduction(el(Z, "1"), el(Z, "0"), el(Z, "6"));
  CHECK(w.p.isOne());
  CHECK(w.q.isOne());
  auto F2 = primePoly(2);
  w = witnessFromReduction(el(F2, "x"), el(F2, "x + 1"), el(F2, "x^2"));
  CHECK(validateSimpleRangeWitness(el(F2, "x"), el(F2, "x + 1"), el(F2, "x^2"), w));
  auto H = quatPoly();
  w = witnessFromReduction(el(H, "x - i"), el(H, "x^2 + 1"), el(H, "x - j"));
  CHECK(validateSimpleRangeWitness(el(H, "x - i"), el(H, "x^2 + 1"), el(H, "x - j"), w));
}

TEST_CASE("checkProp34") {
  auto Z = integers();
  CHECK(checkProp34(el(Z, "1"), el(Z, "-1")));
  CHECK(checkProp34(el(Z, "2"), el(Z, "3")));  // premise fails
  auto H = quatPoly();
  CHECK(isUnit(twoSidedGenerator(el(H, "(x - i)*(x - j)")).aStar));
  CHECK(checkProp34(el(H, "x - i"), el(H, "x - j")));
  auto F4 = skewPoly(2, 2);
  CHECK(checkProp34(el(F4, "x + 1"), el(F4, "g*x + 1")));
}

TEST_CASE("simpleDegree") {
  auto Z12 = integersMod(12);
  SimpleDegreeResult r = simpleDegree(el(Z12, "5"), 3, 0);
  REQUIRE(r.n);
  CHECK(*r.n == 1);
  REQUIRE(r.combination.size() == 1);
  CHECK(r.combination[0].first == el(Z12, "5"));
  CHECK(r.combination[0].second == el(Z12, "1"));

  auto Z = integers();
  r = simpleDegree(el(Z, "1"), 2, 2);
  REQUIRE(r.n);
  CHECK(*r.n == 1);
  CHECK(r.combination[0].first.isOne());
  CHECK(r.combination[0].second.isOne());
  CHECK_FALSE(simpleDegree(el(Z, "2"), 3, 3).n.has_value());
  CHECK_FALSE(simpleDegree(el(Z12, "4"), 4, 0).n.has_value());
  CHECK_THROWS_AS(simpleDegree(el(Z, "0"), 2, 2), Error);

  auto H = quatPoly();
  r = simpleDegree(el(H, "x - i"), 3, 1);
  if (r.n) CHECK(evaluateCombination(el(H, "x - i"), r.combination).isOne());
}
