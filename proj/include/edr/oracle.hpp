#pragma once

// Brute-force reference answers for checking the main algorithms. Nothing
// here calls into the reduction or probe code: invariant factors come from
// determinantal minors, and finite-ring questions are answered from full
// addition and multiplication tables.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "edr/matrix.hpp"

namespace edr {

struct InvariantFactors {
  std::vector<Element> factors;    // d_k = minorGcds[k] / minorGcds[k-1]
  std::vector<Element> minorGcds;  // gcd of all k x k minors, k = 1..min(m, n)
};

/// Cofactor-expansion determinant of a square matrix over a commutative ring.
Element determinant(const Matrix& a);

/// Commutative Euclidean domains only (UnsupportedCapability otherwise).
/// Factors past the rank are zero.
InvariantFactors minorGcdFactors(const Matrix& a);

enum class OracleCondition { SR1, SR2, Simple2, NSimple };

const char* oracleConditionName(OracleCondition c) noexcept;
std::optional<OracleCondition> oracleConditionFromName(const std::string& name);

/// sr1: {t}; sr2: {x, y}; simple2: {p, q}; nsimple: n and (u_i, v_i) pairs
/// flattened as u_1, v_1, u_2, v_2, ...
struct OracleWitness {
  std::vector<Element> values;
  std::size_t n = 0;
};

/// Element tables for a finite ring.
class ExhaustiveOracle {
 public:
  /// Throws UnsupportedCapability unless the ring is finite.
  explicit ExhaustiveOracle(RingHandle ring);

  const RingHandle& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return elems_.size(); }

  bool isUnit(std::size_t a) const { return unit_[a]; }
  /// aR + bR = R.
  bool rightUnimodular(std::size_t a, std::size_t b) const;
  /// Two-sided ideal generated by the listed elements contains 1.
  bool twoSidedUnit(const std::vector<std::size_t>& gens) const;

  /// Inputs: sr1 (a, b), sr2 (a, b, c), simple2 (a, b, c), nsimple (a) with
  /// nMax. The first witness in element order (last variable outermost).
  /// Preconditions of the matching probe are not checked here; a triple
  /// that is not unimodular simply has no witness.
  std::optional<OracleWitness> solve(OracleCondition condition, const std::vector<Element>& inputs,
                                     std::size_t nMax = 8) const;

 private:
  std::size_t index(const Element& e) const;

  RingHandle ring_;
  std::vector<Element> elems_;
  std::vector<std::size_t> add_, mul_;  // row-major n x n tables
  std::vector<bool> unit_;
  std::size_t zero_ = 0, one_ = 0;
};

/// Convenience wrapper building an ExhaustiveOracle per call.
std::optional<OracleWitness> exhaustiveWitnessOracle(const RingHandle& ring, OracleCondition condition,
                                                     const std::vector<Element>& inputs, std::size_t nMax = 8);

}  // namespace edr
