#include "edr/arith.hpp"

#include <map>
#include <utility>

#include "edr/error.hpp"

namespace edr {

bool isPrime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Quaternion Quaternion::inverse() const {
  const Rational n = norm();
  return {w / n, -x / n, -y / n, -z / n};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

namespace {

constexpr std::int64_t kMaxTabulatedOrder = std::int64_t{1} << 20;

// Conway polynomials, constant term first.
const std::map<std::pair<std::int64_t, int>, std::vector<std::int64_t>>& modulusTable() {
  static const std::map<std::pair<std::int64_t, int>, std::vector<std::int64_t>> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{11, 1}, {9, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 1}, {11, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t powmod(std::int64_t a, std::uint64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::int64_t smallestPrimitiveRoot(std::int64_t p) {
  if (p == 2) return 1;
  std::vector<std::int64_t> factors;
  std::int64_t m = p - 1;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : factors)
      if (powmod(g, static_cast<std::uint64_t>((p - 1) / f), p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;
}

}  // namespace

std::optional<std::vector<std::int64_t>> GaloisField::tabulatedModulus(std::int64_t p, int n) {
  const auto& t = modulusTable();
  auto it = t.find({p, n});
  if (it == t.end()) return std::nullopt;
  return it->second;
}

GaloisField::GaloisField(std::int64_t p, int n) : p_(p), n_(n), q_(1) {
  if (!isPrime(p) || p >= (std::int64_t{1} << 31))
    throw Error(ErrorCode::InvalidParameters, "characteristic " + std::to_string(p) + " is not a supported prime");
  if (n < 1) throw Error(ErrorCode::InvalidParameters, "field degree must be positive");

  if (n == 1) {
    q_ = p;
    if (auto m = tabulatedModulus(p, 1)) {
      modulus_ = *m;
      primitiveRoot_ = (p - modulus_[0]) % p;
    } else {
      primitiveRoot_ = smallestPrimitiveRoot(p);
      modulus_ = {(p - primitiveRoot_) % p, 1};
    }
    return;
  }

  auto m = tabulatedModulus(p, n);
  if (!m)
    throw Error(ErrorCode::InvalidParameters,
                "no minimal polynomial tabulated for F_" + std::to_string(p) + "^" + std::to_string(n));
  modulus_ = *m;
  for (int i = 0; i < n; ++i) {
    q_ *= p;
    if (q_ > kMaxTabulatedOrder) throw Error(ErrorCode::InvalidParameters, "field too large to tabulate");
  }

  // Powers of g by shifting the digit vector and reducing by the modulus.
  exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
  log_.assign(static_cast<std::size_t>(q_), -1);
  std::vector<std::int64_t> cur(static_cast<std::size_t>(n), 0);
  cur[0] = 1;
  for (std::int64_t e = 0; e < q_ - 1; ++e) {
    Code code = fromDigits(cur);
    if (log_[static_cast<std::size_t>(code)] != -1)
      throw Error(ErrorCode::InvalidParameters, "tabulated minimal polynomial is not primitive");
    exp_[static_cast<std::size_t>(e)] = code;
    log_[static_cast<std::size_t>(code)] = e;
    std::int64_t top = cur[static_cast<std::size_t>(n - 1)];
    for (int i = n - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    for (int i = 0; i < n; ++i)
      cur[static_cast<std::size_t>(i)] =
          ((cur[static_cast<std::size_t>(i)] - top * modulus_[static_cast<std::size_t>(i)]) % p + p) % p;
  }
  if (fromDigits(cur) != 1) throw Error(ErrorCode::InvalidParameters, "tabulated minimal polynomial is not primitive");
}

std::vector<std::int64_t> GaloisField::digits(Code a) const {
  std::vector<std::int64_t> d(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    d[static_cast<std::size_t>(i)] = a % p_;
    a /= p_;
  }
  return d;
}

GaloisField::Code GaloisField::fromDigits(const std::vector<std::int64_t>& d) const {
  Code c = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) c = c * p_ + *it;
  return c;
}

GaloisField::Code GaloisField::add(Code a, Code b) const {
  if (n_ == 1) {
    Code s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Code r = 0, scale = 1;
  for (int i = 0; i < n_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

GaloisField::Code GaloisField::neg(Code a) const {
  if (n_ == 1) return a == 0 ? 0 : p_ - a;
  Code r = 0, scale = 1;
  for (int i = 0; i < n_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

GaloisField::Code GaloisField::sub(Code a, Code b) const { return add(a, neg(b)); }

GaloisField::Code GaloisField::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  if (n_ == 1) return mulmod(a, b, p_);
  std::int64_t e = (log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)]) % (q_ - 1);
  return exp_[static_cast<std::size_t>(e)];
}

GaloisField::Code GaloisField::inv(Code a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_q");
  if (n_ == 1) return powmod(a, static_cast<std::uint64_t>(p_ - 2), p_);
  std::int64_t e = (q_ - 1 - log_[static_cast<std::size_t>(a)]) % (q_ - 1);
  return exp_[static_cast<std::size_t>(e)];
}

GaloisField::Code GaloisField::pow(Code a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (n_ == 1) return powmod(a, e, p_);
  auto m = static_cast<std::uint64_t>(q_ - 1);
  auto l = static_cast<std::uint64_t>(log_[static_cast<std::size_t>(a)]);
  auto r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(l) * (e % m)) % m);
  return exp_[static_cast<std::size_t>(r)];
}

GaloisField::Code GaloisField::frobenius(Code a, int k) const {
  k %= n_;
  if (k < 0) k += n_;
  if (k == 0 || a == 0) return a;
  std::uint64_t e = 1;
  for (int i = 0; i < k; ++i) e *= static_cast<std::uint64_t>(p_);
  return pow(a, e);
}

GaloisField::Code GaloisField::fromInteger(const Integer& v) const {
  Integer r = v % p_;
  if (r < 0) r += p_;
  return r.get_si();
}

}  // namespace edr
