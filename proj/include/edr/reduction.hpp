#pragma once

// Certified matrix reductions: unimodular completion, Hermite
// triangularization, the simple-range pivot step and diagonal reduction
// with a total-divisor chain.
//
// Shape convention for the pivot step: the input is [[a, c], [b, 0]] and
// the pivot lands in position (0, 0); the clearing that follows produces
// the triangular form [[x, y], [0, z]] before the final diagonal.

#include <cstddef>

#include "edr/error.hpp"
#include "edr/matrix.hpp"
#include "edr/probes.hpp"

namespace edr {

/// An invertible matrix with its exact inverse.
struct Completion {
  Matrix matrix;
  Matrix inverse;
};

/// Invertible 2x2 matrix with first row (p, q). Commutative rings use the
/// cofactor form [[p, q], [-t, s]] from p*s + q*t = 1; otherwise the matrix
/// is assembled from elementary column operations taking (p, q) to (1, 0).
/// Throws NotUnimodular unless pR + qR = R.
Completion completeRow(const Element& p, const Element& q);
/// Invertible 2x2 matrix with first column (u, v). Throws NotUnimodular
/// unless Ru + Rv = R.
Completion completeColumn(const Element& u, const Element& v);

struct RowReduction {
  Element g;
  EquivalenceCertificate cert;  // (a b) * Q = (g 0)
};

/// Throws ZeroInput for (0, 0).
RowReduction hermiteReduceRow(const Element& a, const Element& b);

/// Row operations clear everything below the diagonal; when there are more
/// columns than rows the tail of the last row is then compressed onto the
/// diagonal with column operations.
EquivalenceCertificate hermiteTriangularize(const Matrix& a);

/// A must be [[a, c], [b, 0]] with c != 0. P = completeRow(p, q) and
/// Q = completeColumn(u, v) where (p*a + q*b)*u + p*c*v = d, so the (0, 0)
/// entry of P*A*Q is d and RdR = R. Throws ZeroC, InvalidWitness,
/// DimensionMismatch.
EquivalenceCertificate lemma36Pivot(const Matrix& a, const SimpleRangeWitness& witness);

enum class PivotStrategy {
  /// Use the simple-range pivot on [[a, c], [b, 0]] when it applies, then
  /// fall back to Euclidean elimination.
  SimpleRange,
  /// Euclidean elimination only.
  Elementary,
};

struct Reduction {
  EquivalenceCertificate cert;
  DiagonalReport report;
};

/// Raised when a ring or matrix falls outside what the reduction can
/// handle. Carries the partially reduced certificate.
class ReductionFailed : public Error {
 public:
  ReductionFailed(const std::string& message, EquivalenceCertificate partial);
  const EquivalenceCertificate& partial() const noexcept { return partial_; }

 private:
  EquivalenceCertificate partial_;
};

/// diag(e1, e2) with e1 a total divisor of e2, entries canonical. Already
/// canonical diagonal input comes back with the identity certificate.
/// searchBound 0 means defaultSearchBound(ring) for the witness search.
Reduction canonical2x2(const Matrix& a, PivotStrategy strategy = PivotStrategy::SimpleRange,
                       std::size_t searchBound = 0);

/// Diagonal form with the total-divisor chain and zeros last. Any shape over
/// commutative rings; min(rows, cols) <= 2 over noncommutative ones
/// (UnsupportedCapability otherwise).
Reduction diagonalReduce(const Matrix& a);

/// Zeros trail, every adjacent pair is a total-divisor pair and every
/// nonzero entry except the last nonzero one is invariant.
bool verifyDKChain(const DiagonalReport& report);

}  // namespace edr
