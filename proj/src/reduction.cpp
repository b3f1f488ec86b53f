#include "edr/reduction.hpp"

#include <algorithm>

#include "edr/core.hpp"

namespace edr {

ReductionFailed::ReductionFailed(const std::string& message, EquivalenceCertificate partial)
    : Error(ErrorCode::ReductionFailed, message), partial_(std::move(partial)) {}

namespace {

constexpr std::size_t kStepLimit = 200000;

bool commutative(const Ring& R) { return R.capabilities().commutative; }

// Elementary-operation driver over a certificate. Every method keeps
// P*A*Q = D and the stored inverses in sync.
class Engine {
 public:
  explicit Engine(EquivalenceCertificate c) : cert(std::move(c)) {}

  EquivalenceCertificate cert;

  Element& at(std::size_t i, std::size_t j) { return cert.D(i, j); }
  std::size_t rows() const { return cert.D.rows(); }
  std::size_t cols() const { return cert.D.cols(); }

  void rowAdd(std::size_t t, std::size_t s, const Element& f) {
    if (f.isZero()) return;
    tick();
    cert.applyRow(AddMultipleOp{t, s, f});
  }
  void colAdd(std::size_t t, std::size_t s, const Element& f) {
    if (f.isZero()) return;
    tick();
    cert.applyCol(AddMultipleOp{t, s, f});
  }
  void rowSwap(std::size_t a, std::size_t b) {
    if (a != b) cert.applyRow(SwapOp{a, b});
  }
  void colSwap(std::size_t a, std::size_t b) {
    if (a != b) cert.applyCol(SwapOp{a, b});
  }
  void rowScale(std::size_t i, const Element& u) {
    if (!u.isOne()) cert.applyRow(ScaleOp{i, u});
  }
  void colScale(std::size_t i, const Element& u) {
    if (!u.isOne()) cert.applyCol(ScaleOp{i, u});
  }

  // Column Euclid on row i over columns [from, cols): leaves (i, from) as a
  // right gcd of the segment and zeros after it.
  void compressRow(std::size_t i, std::size_t from) {
    while (true) {
      std::size_t best = cols();
      for (std::size_t j = from; j < cols(); ++j)
        if (!at(i, j).isZero() && (best == cols() || euclideanSize(at(i, j)) < euclideanSize(at(i, best)))) best = j;
      if (best == cols()) return;
      colSwap(from, best);
      bool clean = true;
      for (std::size_t j = from + 1; j < cols(); ++j) {
        if (at(i, j).isZero()) continue;
        auto [q, r] = divmodRight(at(i, j), at(i, from));
        colAdd(j, from, -q);
        if (!r.isZero()) clean = false;
      }
      if (clean) return;
    }
  }

  // Row Euclid on column j over rows [from, rows).
  void compressColumn(std::size_t j, std::size_t from) {
    while (true) {
      std::size_t best = rows();
      for (std::size_t i = from; i < rows(); ++i)
        if (!at(i, j).isZero() && (best == rows() || euclideanSize(at(i, j)) < euclideanSize(at(best, j)))) best = i;
      if (best == rows()) return;
      rowSwap(from, best);
      bool clean = true;
      for (std::size_t i = from + 1; i < rows(); ++i) {
        if (at(i, j).isZero()) continue;
        auto [q, r] = divmodLeft(at(i, j), at(from, j));
        rowAdd(i, from, -q);
        if (!r.isZero()) clean = false;
      }
      if (clean) return;
    }
  }

  // Diagonalizes the block [k0, rEnd) x [k0, cEnd), assuming everything
  // outside it in those rows and columns is already zero.
  void diagonalize(std::size_t k0, std::size_t rEnd, std::size_t cEnd) {
    for (std::size_t k = k0; k < std::min(rEnd, cEnd); ++k) {
      while (true) {
        if (!movePivot(k, rEnd, cEnd)) return;
        bool clean = true;
        for (std::size_t i = k + 1; i < rEnd; ++i) {
          if (at(i, k).isZero()) continue;
          auto [q, r] = divmodLeft(at(i, k), at(k, k));
          rowAdd(i, k, -q);
          if (!r.isZero()) clean = false;
        }
        if (!clean) continue;
        for (std::size_t j = k + 1; j < cEnd; ++j) {
          if (at(k, j).isZero()) continue;
          auto [q, r] = divmodRight(at(k, j), at(k, k));
          colAdd(j, k, -q);
          if (!r.isZero()) clean = false;
        }
        if (clean) break;
      }
    }
  }

  // Moves zero diagonal entries behind the nonzero ones.
  void zerosLast() {
    const std::size_t k = std::min(rows(), cols());
    std::size_t next = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (at(i, i).isZero()) continue;
      if (i != next) {
        rowSwap(i, next);
        colSwap(i, next);
      }
      ++next;
    }
  }

  void repairChain() {
    const std::size_t k = std::min(rows(), cols());
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        if (isTotalDivisor(at(i, i), at(i + 1, i + 1))) continue;
        fixPair(i);
        changed = true;
      }
    }
  }

  void normalizeDiagonal() {
    const std::size_t k = std::min(rows(), cols());
    for (std::size_t i = 0; i < k; ++i)
      if (!at(i, i).isZero()) colScale(i, rightNormalizer(at(i, i)));
  }

  [[noreturn]] void fail(const std::string& why) const { throw ReductionFailed(why, cert); }

 private:
  std::size_t steps_ = 0;

  void tick() {
    if (++steps_ > kStepLimit) fail("step limit reached");
  }

  bool movePivot(std::size_t k, std::size_t rEnd, std::size_t cEnd) {
    std::size_t bi = rEnd, bj = cEnd;
    for (std::size_t i = k; i < rEnd; ++i)
      for (std::size_t j = k; j < cEnd; ++j) {
        if (at(i, j).isZero()) continue;
        if (bi == rEnd || euclideanSize(at(i, j)) < euclideanSize(at(bi, bj))) {
          bi = i;
          bj = j;
        }
      }
    if (bi == rEnd) return false;
    if (!at(k, k).isZero() && euclideanSize(at(k, k)) == euclideanSize(at(bi, bj))) return true;
    rowSwap(k, bi);
    colSwap(k, bj);
    return true;
  }

  // Entries i and i+1 (alpha, beta) fail the chain. Mixing a suitable
  // multiple of beta into alpha's row or column and re-diagonalizing the
  // block strictly lowers alpha's size.
  void fixPair(std::size_t i) {
    const Element alpha = at(i, i);
    const Element beta = at(i + 1, i + 1);
    if (alpha.isZero()) {
      rowSwap(i, i + 1);
      colSwap(i, i + 1);
      return;
    }
    const Ring& R = *alpha.ring();
    if (commutative(R)) {
      rowAdd(i, i + 1, R.one());
    } else {
      auto combination = twoSidedGenerator(beta).combination;
      bool done = false;
      for (const auto& [u, v] : combination) {
        if (!rightDivide(u * beta, alpha)) {
          rowAdd(i, i + 1, u);
          done = true;
          break;
        }
      }
      if (!done)
        for (const auto& [u, v] : combination) {
          if (!leftDivide(beta * v, alpha)) {
            colAdd(i, i + 1, v);
            done = true;
            break;
          }
        }
      if (!done) fail("no combination term breaks the divisibility of " + beta.str() + " by " + alpha.str());
    }
    diagonalize(i, i + 2, i + 2);
  }
};

void requireEuclidean(const Ring& R, const char* what) {
  requireCapability(R, Capability::RightEuclidean, what);
  requireCapability(R, Capability::LeftEuclidean, what);
}

Matrix square2(const RingHandle& R, const Element& a, const Element& b, const Element& c, const Element& d) {
  return Matrix::fromRows(R, {{a, b}, {c, d}});
}

bool isCanonicalDiagonal(const Matrix& a) {
  if (!a.isDiagonal()) return false;
  const std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < k; ++i) {
    const Element& d = a(i, i);
    if (!d.isZero() && !(canonicalRight(d) == d)) return false;
    if (i + 1 < k) {
      if (d.isZero() && !a(i + 1, i + 1).isZero()) return false;
      if (!isTotalDivisor(d, a(i + 1, i + 1))) return false;
    }
  }
  return true;
}

Reduction finish(const Matrix& a, EquivalenceCertificate cert) {
  if (!verifyCertificate(a, cert)) throw ReductionFailed("certificate failed verification", cert);
  DiagonalReport report = makeDiagonalReport(cert.D);
  return {std::move(cert), std::move(report)};
}

// Pivot path on a 2x2 matrix: bring the second row to (b, 0), pivot with a
// simple-range witness, and clear around the unit pivot. Returns false when
// the path does not apply; the engine state is still a valid certificate.
bool simpleRangePath(Engine& e, std::size_t bound) {
  while (!e.at(1, 1).isZero()) {
    auto [q, r] = divmodRight(e.at(1, 0), e.at(1, 1));
    e.colAdd(0, 1, -q);
    e.colSwap(0, 1);
  }
  const Element a = e.at(0, 0), c = e.at(0, 1), b = e.at(1, 0);
  if (c.isZero()) return false;
  if (!generatesUnitIdeal(rightGcd({a, b, c}))) return false;
  auto witness = findSimpleRange2Witness(a, b, c, bound);
  if (!witness) return false;

  EquivalenceCertificate pivot = lemma36Pivot(e.cert.D, *witness);
  e.cert = compose(e.cert, pivot);
  const Element x = e.at(0, 0);
  if (!isUnit(x)) return false;
  const Element xinv = inverse(x);
  e.rowAdd(1, 0, -(e.at(1, 0) * xinv));
  e.colAdd(1, 0, -(xinv * e.at(0, 1)));
  e.colScale(0, xinv);
  if (!e.at(1, 1).isZero()) e.colScale(1, rightNormalizer(e.at(1, 1)));
  return true;
}

}  // namespace

Completion completeRow(const Element& p, const Element& q) {
  requireSameRing(p, q);
  const RingHandle R = p.ring();
  requireEuclidean(*R, "completeRow");
  if (p.isZero() && q.isZero()) throw Error(ErrorCode::NotUnimodular, "(0, 0) is not unimodular");
  BezoutWitness w = rightBezout(p, q);
  if (!isUnit(w.g)) throw Error(ErrorCode::NotUnimodular, "pR + qR is proper: right gcd " + w.g.str());
  if (commutative(*R)) {
    // p*s + q*t = 1
    Completion c{square2(R, p, q, -w.t, w.s), square2(R, w.s, -q, w.t, p)};
    return c;
  }
  Engine e(EquivalenceCertificate::identity(Matrix::fromRows(R, {{p, q}})));
  e.compressRow(0, 0);
  e.colScale(0, inverse(e.at(0, 0)));
  // (p q) * Q = (1 0), so (p q) = (1 0) * Qinv.
  Completion c{e.cert.Qinv, e.cert.Q};
  if (!(c.matrix(0, 0) == p) || !(c.matrix(0, 1) == q))
    throw Error(ErrorCode::InvalidParameters, "row completion lost its first row");
  return c;
}

Completion completeColumn(const Element& u, const Element& v) {
  requireSameRing(u, v);
  const RingHandle R = u.ring();
  requireEuclidean(*R, "completeColumn");
  if (u.isZero() && v.isZero()) throw Error(ErrorCode::NotUnimodular, "(0, 0) is not unimodular");
  BezoutWitness w = leftBezout(u, v);
  if (!isUnit(w.g)) throw Error(ErrorCode::NotUnimodular, "Ru + Rv is proper: left gcd " + w.g.str());
  if (commutative(*R)) {
    // s*u + t*v = 1
    return {square2(R, u, -w.t, v, w.s), square2(R, w.s, w.t, -v, u)};
  }
  Engine e(EquivalenceCertificate::identity(Matrix::fromRows(R, {{u}, {v}})));
  e.compressColumn(0, 0);
  e.rowScale(0, inverse(e.at(0, 0)));
  // P * (u v)^T = (1 0)^T, so (u v)^T = Pinv * (1 0)^T.
  Completion c{e.cert.Pinv, e.cert.P};
  if (!(c.matrix(0, 0) == u) || !(c.matrix(1, 0) == v))
    throw Error(ErrorCode::InvalidParameters, "column completion lost its first column");
  return c;
}

RowReduction hermiteReduceRow(const Element& a, const Element& b) {
  requireSameRing(a, b);
  const RingHandle R = a.ring();
  requireEuclidean(*R, "hermiteReduceRow");
  BezoutWitness w = rightBezout(a, b);
  const Matrix A = Matrix::fromRows(R, {{a, b}});
  const Matrix I1 = Matrix::identity(R, 1);
  if (commutative(*R)) {
    Element det = w.s * w.a1 + w.t * w.b1;
    if (isUnit(det)) {
      Element di = inverse(det);
      Matrix Q = square2(R, w.s, -w.b1, w.t, w.a1);
      Matrix Qinv = square2(R, di * w.a1, di * w.b1, -(di * w.t), di * w.s);
      EquivalenceCertificate cert{I1, I1, Q, Qinv, A * Q};
      if (verifyCertificate(A, cert) && cert.D(0, 0) == w.g && cert.D(0, 1).isZero()) return {w.g, std::move(cert)};
    }
  }
  Engine e(EquivalenceCertificate::identity(A));
  e.compressRow(0, 0);
  e.colScale(0, rightNormalizer(e.at(0, 0)));
  if (!(e.at(0, 0) == w.g)) throw Error(ErrorCode::InvalidParameters, "row reduction disagrees with the right gcd");
  return {w.g, std::move(e.cert)};
}

EquivalenceCertificate hermiteTriangularize(const Matrix& a) {
  requireEuclidean(*a.ring(), "hermiteTriangularize");
  Engine e(EquivalenceCertificate::identity(a));
  const std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t j = 0; j < k; ++j) {
    bool below = false;
    for (std::size_t i = j + 1; i < a.rows(); ++i) below = below || !e.at(i, j).isZero();
    if (below) e.compressColumn(j, j);
  }
  if (a.cols() > a.rows()) {
    const std::size_t last = a.rows() - 1;
    bool tail = false;
    for (std::size_t j = last + 1; j < a.cols(); ++j) tail = tail || !e.at(last, j).isZero();
    if (tail) {
      e.compressRow(last, last);
      e.colScale(last, rightNormalizer(e.at(last, last)));
    }
  }
  if (!verifyCertificate(a, e.cert) || !e.cert.D.isUpperTriangular())
    throw ReductionFailed("triangularization failed verification", e.cert);
  return std::move(e.cert);
}

EquivalenceCertificate lemma36Pivot(const Matrix& A, const SimpleRangeWitness& witness) {
  if (A.rows() != 2 || A.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "pivot step needs a 2x2 matrix");
  if (!A(1, 1).isZero()) throw Error(ErrorCode::InvalidParameters, "pivot step needs a zero in position (1, 1)");
  const Element& a = A(0, 0);
  const Element& c = A(0, 1);
  const Element& b = A(1, 0);
  if (c.isZero()) throw Error(ErrorCode::ZeroC, "pivot step needs c != 0");
  if (!witness.p.ring()->sameAs(*A.ring()) || !witness.q.ring()->sameAs(*A.ring()))
    throw Error(ErrorCode::MixedRings, "witness from a different ring");
  if (!validateSimpleRangeWitness(a, b, c, witness))
    throw Error(ErrorCode::InvalidWitness, "(p, q) is not a simple range witness for this matrix");

  const Element alpha = witness.p * a + witness.q * b;
  const Element beta = witness.p * c;
  BezoutWitness w = rightBezout(alpha, beta);
  auto complete = [](auto fn, const Element& x, const Element& y) {
    try {
      return fn(x, y);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NotUnimodular) throw;
      throw Error(ErrorCode::InvalidWitness, err.what());
    }
  };
  const Completion P = complete(completeRow, witness.p, witness.q);
  const Completion Q = complete(completeColumn, w.s, w.t);
  EquivalenceCertificate cert{P.matrix, P.inverse, Q.matrix, Q.inverse, P.matrix * A * Q.matrix};
  if (!(cert.D(0, 0) == w.g) || !verifyCertificate(A, cert))
    throw Error(ErrorCode::InvalidWitness, "pivot certificate does not check out");
  return cert;
}

Reduction canonical2x2(const Matrix& a, PivotStrategy strategy, std::size_t searchBound) {
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "canonical2x2 needs a 2x2 matrix");
  requireEuclidean(*a.ring(), "canonical2x2");
  requireCapability(*a.ring(), Capability::TwoSidedGeneratorComputable, "canonical2x2");
  if (a.isZero() || isCanonicalDiagonal(a)) return finish(a, EquivalenceCertificate::identity(a));

  if (searchBound == 0) searchBound = defaultSearchBound(*a.ring());
  Engine e(EquivalenceCertificate::identity(a));
  if (strategy == PivotStrategy::SimpleRange && simpleRangePath(e, searchBound)) return finish(a, std::move(e.cert));
  e.diagonalize(0, 2, 2);
  e.zerosLast();
  e.repairChain();
  e.normalizeDiagonal();
  return finish(a, std::move(e.cert));
}

Reduction diagonalReduce(const Matrix& a) {
  const Ring& R = *a.ring();
  requireEuclidean(R, "diagonalReduce");
  if (!commutative(R)) {
    if (std::min(a.rows(), a.cols()) > 2)
      throw Error(ErrorCode::UnsupportedCapability,
                  "noncommutative diagonal reduction is limited to matrices with at most two rows or columns");
    requireCapability(R, Capability::TwoSidedGeneratorComputable, "diagonalReduce");
  }
  if (a.rows() == 2 && a.cols() == 2) return canonical2x2(a);
  if (a.isZero() || isCanonicalDiagonal(a)) return finish(a, EquivalenceCertificate::identity(a));
  Engine e(EquivalenceCertificate::identity(a));
  e.diagonalize(0, a.rows(), a.cols());
  e.zerosLast();
  e.repairChain();
  e.normalizeDiagonal();
  return finish(a, std::move(e.cert));
}

bool verifyDKChain(const DiagonalReport& report) {
  const auto& d = report.diagonal;
  if (d.empty()) return true;
  if (report.totalDivisorChain.size() + 1 != d.size()) return false;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].isZero()) continue;
    if (i != nonzero) return false;
    ++nonzero;
  }
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (!report.totalDivisorChain[i] || !isTotalDivisor(d[i], d[i + 1])) return false;
  for (std::size_t i = 0; i + 1 < nonzero; ++i)
    if (!isInvariant(d[i])) return false;
  return true;
}

}  // namespace edr
