#include "edr/matrix.hpp"

#include <algorithm>

#include "edr/core.hpp"
#include "edr/error.hpp"

namespace edr {

Matrix::Matrix(RingHandle ring, std::size_t rows, std::size_t cols) : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::DimensionMismatch, "matrices need positive dimensions");
  entries_.assign(rows * cols, ring_->zero());
}

Matrix Matrix::identity(RingHandle ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring->one();
  return m;
}

Matrix Matrix::fromRows(RingHandle ring, const std::vector<std::vector<Element>>& rows) {
  if (rows.empty() || rows.front().empty()) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  Matrix m(ring, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (!rows[i][j].ring()->sameAs(*ring)) throw Error(ErrorCode::MixedRings, "entry from a different ring");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

const Element& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  return (*this)(i, j);
}

bool Matrix::isZero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Element& e) { return e.isZero(); });
}

bool Matrix::isDiagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).isZero()) return false;
  return true;
}

bool Matrix::isUpperTriangular() const {
  for (std::size_t i = 1; i < rows_; ++i)
    for (std::size_t j = 0; j < std::min(i, cols_); ++j)
      if (!(*this)(i, j).isZero()) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ring_->sameAs(*b.ring_) && a.entries_ == b.entries_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "product of incompatible shapes");
  if (!a.ring_->sameAs(*b.ring_)) throw Error(ErrorCode::MixedRings, "product of matrices over different rings");
  Matrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Element& aik = a(i, k);
      if (aik.isZero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Element& bkj = b(k, j);
        if (!bkj.isZero()) c(i, j) += aik * bkj;
      }
    }
  return c;
}

namespace {

void checkIndex(std::size_t idx, std::size_t n) {
  if (idx >= n) throw Error(ErrorCode::IndexOutOfRange, "elementary operation index out of range");
}

void swapRows(Matrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swapCols(Matrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
void scaleRowLeft(Matrix& m, std::size_t r, const Element& u) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = u * m(r, j);
}
void scaleColRight(Matrix& m, std::size_t c, const Element& u) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = m(i, c) * u;
}
// row[t] += f * row[s]
void addRow(Matrix& m, std::size_t t, std::size_t s, const Element& f) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m(s, j).isZero()) m(t, j) += f * m(s, j);
}
// col[t] += col[s] * f
void addCol(Matrix& m, std::size_t t, std::size_t s, const Element& f) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m(i, s).isZero()) m(i, t) += m(i, s) * f;
}

}  // namespace

EquivalenceCertificate EquivalenceCertificate::identity(const Matrix& a) {
  return {Matrix::identity(a.ring(), a.rows()), Matrix::identity(a.ring(), a.rows()),
          Matrix::identity(a.ring(), a.cols()), Matrix::identity(a.ring(), a.cols()), a};
}

void EquivalenceCertificate::applyRow(const ElementaryOp& op) {
  const std::size_t n = D.rows();
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, SwapOp>) {
          checkIndex(o.first, n);
          checkIndex(o.second, n);
          swapRows(D, o.first, o.second);
          swapRows(P, o.first, o.second);
          swapCols(Pinv, o.first, o.second);
        } else if constexpr (std::is_same_v<T, ScaleOp>) {
          checkIndex(o.index, n);
          Element inv = inverse(o.unit);
          scaleRowLeft(D, o.index, o.unit);
          scaleRowLeft(P, o.index, o.unit);
          scaleColRight(Pinv, o.index, inv);
        } else {
          checkIndex(o.target, n);
          checkIndex(o.source, n);
          if (o.target == o.source) throw Error(ErrorCode::IndexOutOfRange, "row added to itself");
          addRow(D, o.target, o.source, o.factor);
          addRow(P, o.target, o.source, o.factor);
          addCol(Pinv, o.source, o.target, -o.factor);
        }
      },
      op);
}

void EquivalenceCertificate::applyCol(const ElementaryOp& op) {
  const std::size_t n = D.cols();
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, SwapOp>) {
          checkIndex(o.first, n);
          checkIndex(o.second, n);
          swapCols(D, o.first, o.second);
          swapCols(Q, o.first, o.second);
          swapRows(Qinv, o.first, o.second);
        } else if constexpr (std::is_same_v<T, ScaleOp>) {
          checkIndex(o.index, n);
          Element inv = inverse(o.unit);
          scaleColRight(D, o.index, o.unit);
          scaleColRight(Q, o.index, o.unit);
          scaleRowLeft(Qinv, o.index, inv);
        } else {
          checkIndex(o.target, n);
          checkIndex(o.source, n);
          if (o.target == o.source) throw Error(ErrorCode::IndexOutOfRange, "column added to itself");
          addCol(D, o.target, o.source, o.factor);
          addCol(Q, o.target, o.source, o.factor);
          addRow(Qinv, o.source, o.target, -o.factor);
        }
      },
      op);
}

EquivalenceCertificate applyRowOp(EquivalenceCertificate cert, const ElementaryOp& op) {
  cert.applyRow(op);
  return cert;
}

EquivalenceCertificate applyColOp(EquivalenceCertificate cert, const ElementaryOp& op) {
  cert.applyCol(op);
  return cert;
}

EquivalenceCertificate compose(const EquivalenceCertificate& first, const EquivalenceCertificate& second) {
  return {second.P * first.P, first.Pinv * second.Pinv, first.Q * second.Q, second.Qinv * first.Qinv, second.D};
}

bool verifyCertificate(const Matrix& a, const EquivalenceCertificate& c) {
  const std::size_t m = a.rows(), n = a.cols();
  auto square = [](const Matrix& x, std::size_t k) { return x.rows() == k && x.cols() == k; };
  if (!square(c.P, m) || !square(c.Pinv, m) || !square(c.Q, n) || !square(c.Qinv, n) || c.D.rows() != m ||
      c.D.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "certificate shape does not match the matrix");
  const RingHandle& R = a.ring();
  const Matrix Im = Matrix::identity(R, m), In = Matrix::identity(R, n);
  return c.P * c.Pinv == Im && c.Pinv * c.P == Im && c.Q * c.Qinv == In && c.Qinv * c.Q == In &&
         c.P * a * c.Q == c.D;
}

bool isTotalDivisor(const Element& a, const Element& b) {
  requireSameRing(a, b);
  if (b.isZero()) return true;
  if (a.isZero()) return false;
  if (a.ring()->capabilities().commutative) return rightDivide(b, a).has_value();
  requireCapability(*a.ring(), Capability::TwoSidedGeneratorComputable, "isTotalDivisor");
  Element bStar = twoSidedGenerator(b).aStar;
  return rightDivide(bStar, a).has_value() && leftDivide(bStar, a).has_value();
}

DiagonalReport makeDiagonalReport(const Matrix& d) {
  DiagonalReport rep;
  const std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < k; ++i) rep.diagonal.push_back(d(i, i));
  for (std::size_t i = 0; i + 1 < k; ++i) rep.totalDivisorChain.push_back(isTotalDivisor(rep.diagonal[i], rep.diagonal[i + 1]));
  for (const auto& e : rep.diagonal) rep.invariantFlags.push_back(isInvariant(e));
  return rep;
}

}  // namespace edr
