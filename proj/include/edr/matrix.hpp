#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "edr/ring.hpp"

namespace edr {

/// Dense row-major matrix over a single ring.
class Matrix {
 public:
  /// Zero matrix. Throws DimensionMismatch for an empty shape.
  Matrix(RingHandle ring, std::size_t rows, std::size_t cols);

  static Matrix identity(RingHandle ring, std::size_t n);
  /// Throws DimensionMismatch for ragged input, MixedRings for foreign entries.
  static Matrix fromRows(RingHandle ring, const std::vector<std::vector<Element>>& rows);

  const RingHandle& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  /// Bounds-checked access; throws IndexOutOfRange.
  const Element& at(std::size_t i, std::size_t j) const;

  bool isZero() const;
  bool isDiagonal() const;
  bool isUpperTriangular() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  /// Throws DimensionMismatch.
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  RingHandle ring_;
  std::size_t rows_, cols_;
  std::vector<Element> entries_;
};

struct SwapOp {
  std::size_t first, second;
};

/// Rows are scaled on the left, columns on the right.
struct ScaleOp {
  std::size_t index;
  Element unit;
};

/// Row: row[target] += factor * row[source].
/// Column: col[target] += col[source] * factor.
struct AddMultipleOp {
  std::size_t target, source;
  Element factor;
};

using ElementaryOp = std::variant<SwapOp, ScaleOp, AddMultipleOp>;

/// P*A*Q = D with P, Q invertible and their inverses carried explicitly.
struct EquivalenceCertificate {
  Matrix P, Pinv, Q, Qinv, D;

  static EquivalenceCertificate identity(const Matrix& a);

  /// In-place updates: D <- E*D, P <- E*P, Pinv <- Pinv*E^-1 (rows) and
  /// D <- D*F, Q <- Q*F, Qinv <- F^-1*Qinv (columns). Throws NotAUnit,
  /// IndexOutOfRange.
  void applyRow(const ElementaryOp& op);
  void applyCol(const ElementaryOp& op);
};

EquivalenceCertificate applyRowOp(EquivalenceCertificate cert, const ElementaryOp& op);
EquivalenceCertificate applyColOp(EquivalenceCertificate cert, const ElementaryOp& op);

/// `second` must have been issued against first.D; the result maps the
/// original matrix straight to second.D.
EquivalenceCertificate compose(const EquivalenceCertificate& first, const EquivalenceCertificate& second);

/// Checks P*Pinv = Pinv*P = I, Q*Qinv = Qinv*Q = I and P*A*Q = D exactly.
/// Throws DimensionMismatch when the shapes do not fit together.
bool verifyCertificate(const Matrix& a, const EquivalenceCertificate& cert);

/// RbR is contained in aR and in Ra. Computed from the two-sided generator
/// b* of b (both-sided divisibility of b* by a); plain divisibility over
/// commutative rings. True whenever b = 0.
bool isTotalDivisor(const Element& a, const Element& b);

struct DiagonalReport {
  std::vector<Element> diagonal;       // min(rows, cols) entries
  std::vector<bool> totalDivisorChain;  // flag i: entry i totally divides entry i+1
  std::vector<bool> invariantFlags;     // per entry
};

/// Reads the diagonal of D and evaluates both flag lists.
DiagonalReport makeDiagonalReport(const Matrix& d);

}  // namespace edr
