#pragma once

// Exact scalar arithmetic used underneath the ring instances: big integers
// and rationals (GMP), rational quaternions, and small finite fields.

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

namespace edr {

using Integer = mpz_class;
using Rational = mpq_class;

bool isPrime(std::int64_t n);

/// Rational quaternion w + x*i + y*j + z*k.
struct Quaternion {
  Rational w, x, y, z;

  Quaternion() = default;
  Quaternion(Rational w_, Rational x_, Rational y_, Rational z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  explicit Quaternion(const Rational& real) : w(real), x(0), y(0), z(0) {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  bool isZero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  Rational norm() const { return w * w + x * x + y * y + z * z; }
  /// Precondition: nonzero.
  Quaternion inverse() const;

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
};

/// The finite field F_{p^n}, stored as F_p[g]/(m(g)) for a fixed primitive
/// minimal polynomial m. An element is encoded as the integer whose base-p
/// digits are its coefficients on 1, g, g^2, ..., g^{n-1}; that code is the
/// canonical payload.
class GaloisField {
 public:
  using Code = std::int64_t;

  /// Throws InvalidParameters for composite p, a (p, n) pair missing from
  /// the built-in polynomial table, or a field too large to tabulate.
  GaloisField(std::int64_t p, int n);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return n_; }
  std::int64_t order() const { return q_; }
  /// Minimal polynomial of g, low coefficient first, monic.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code pow(Code a, std::uint64_t e) const;
  /// a^(p^k) for k in [0, n).
  Code frobenius(Code a, int k) const;
  Code fromInteger(const Integer& v) const;
  Code generator() const { return n_ == 1 ? primitiveRoot_ : p_; }

  std::vector<std::int64_t> digits(Code a) const;
  Code fromDigits(const std::vector<std::int64_t>& d) const;

  /// Table of minimal polynomials shipped with the library.
  static std::optional<std::vector<std::int64_t>> tabulatedModulus(std::int64_t p, int n);

 private:
  std::int64_t p_;
  int n_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;
  // Only for n > 1: discrete log tables with respect to g.
  std::vector<Code> exp_;
  std::vector<std::int64_t> log_;
  Code primitiveRoot_ = 1;
};

}  // namespace edr
