#include "edr/instances.hpp"

#include <algorithm>
#include <numeric>

#include "edr/error.hpp"

namespace edr {
namespace {

constexpr std::size_t kMaxEnumeration = std::size_t{1} << 20;

Capabilities euclideanCaps(bool commutative) {
  Capabilities c;
  c.commutative = commutative;
  c.domain = true;
  c.rightEuclidean = true;
  c.leftEuclidean = true;
  c.invarianceDecidable = true;
  c.twoSidedGeneratorComputable = true;
  return c;
}

// ---------------------------------------------------------------- Z

class IntegerRing final : public Ring {
 public:
  IntegerRing() : Ring(RingSpec{}, euclideanCaps(true), "Z") {}

  Payload zeroPayload() const override { return Integer(0); }
  Payload onePayload() const override { return Integer(1); }
  Payload integerPayload(const Integer& v) const override { return v; }
  bool isZero(const Payload& a) const override { return get(a) == 0; }
  Payload add(const Payload& a, const Payload& b) const override { return Integer(get(a) + get(b)); }
  Payload sub(const Payload& a, const Payload& b) const override { return Integer(get(a) - get(b)); }
  Payload neg(const Payload& a) const override { return Integer(-get(a)); }
  Payload mul(const Payload& a, const Payload& b) const override { return Integer(get(a) * get(b)); }
  bool isUnit(const Payload& a) const override { return abs(get(a)) == 1; }
  Payload inverse(const Payload& a) const override {
    if (!isUnit(a)) throw Error(ErrorCode::NotAUnit, get(a).get_str() + " is not a unit of Z");
    return get(a);
  }
  QuotRem divmodRight(const Payload& a, const Payload& b) const override {
    Integer m = abs(get(b));
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), get(a).get_mpz_t(), m.get_mpz_t());
    Integer q;
    mpz_divexact(q.get_mpz_t(), Integer(get(a) - r).get_mpz_t(), get(b).get_mpz_t());
    return {q, r};
  }
  QuotRem divmodLeft(const Payload& a, const Payload& b) const override { return divmodRight(a, b); }
  Integer size(const Payload& a) const override { return abs(get(a)); }
  Payload rightNormalizer(const Payload& a) const override { return Integer(get(a) < 0 ? -1 : 1); }
  Payload leftNormalizer(const Payload& a) const override { return rightNormalizer(a); }
  std::string format(const Payload& a) const override { return get(a).get_str(); }

 protected:
  std::vector<Payload> generatorPayloads() const override { return {}; }
  std::vector<Payload> enumeratePayloads(std::size_t bound) const override {
    std::vector<Payload> out{Integer(0)};
    for (std::size_t t = 1; t <= bound; ++t) {
      out.emplace_back(Integer(static_cast<unsigned long>(t)));
      out.emplace_back(Integer(-static_cast<long>(t)));
    }
    return out;
  }
  std::optional<Payload> atomPayload(std::string_view) const override { return std::nullopt; }

 private:
  static const Integer& get(const Payload& p) { return std::get<Integer>(p); }
};

// ---------------------------------------------------------------- Z/n

class IntModRing final : public Ring {
 public:
  explicit IntModRing(const RingSpec& spec)
      : Ring(spec, caps(), "Z/" + spec.modulus.get_str()), n_(spec.modulus) {}

  Payload zeroPayload() const override { return Integer(0); }
  Payload onePayload() const override { return Integer(1); }
  Payload integerPayload(const Integer& v) const override { return reduce(v); }
  bool isZero(const Payload& a) const override { return get(a) == 0; }
  Payload add(const Payload& a, const Payload& b) const override { return reduce(get(a) + get(b)); }
  Payload sub(const Payload& a, const Payload& b) const override { return reduce(get(a) - get(b)); }
  Payload neg(const Payload& a) const override { return reduce(-get(a)); }
  Payload mul(const Payload& a, const Payload& b) const override { return reduce(get(a) * get(b)); }
  bool isUnit(const Payload& a) const override { return gcd(get(a), n_) == 1; }
  Payload inverse(const Payload& a) const override {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), get(a).get_mpz_t(), n_.get_mpz_t()) == 0)
      throw Error(ErrorCode::NotAUnit, get(a).get_str() + " is not a unit of " + name());
    return reduce(r);
  }
  // With d = gcd(b, n): a = b*q + r where r = a mod d and b*q = a - r is
  // solved modulo n/d. The size gcd(r, n) <= r < d when r != 0.
  QuotRem divmodRight(const Payload& a, const Payload& b) const override {
    const Integer& av = get(a);
    const Integer& bv = get(b);
    Integer d = gcd(bv, n_);
    Integer r = av % d;
    Integer m = n_ / d;
    Integer target = (av - r) / d;
    Integer q = 0;
    if (m > 1) {
      Integer bInv;
      Integer bRed = Integer(bv / d) % m;
      mpz_invert(bInv.get_mpz_t(), bRed.get_mpz_t(), m.get_mpz_t());
      q = (target * bInv) % m;
    }
    return {reduce(q), reduce(r)};
  }
  QuotRem divmodLeft(const Payload& a, const Payload& b) const override { return divmodRight(a, b); }
  Integer size(const Payload& a) const override { return gcd(get(a), n_); }
  // Unit u with a*u = gcd(a, n): invert a/d modulo n/d and lift to a unit mod n.
  Payload rightNormalizer(const Payload& a) const override {
    const Integer& av = get(a);
    if (av == 0) return Integer(1);
    Integer d = gcd(av, n_);
    Integer m = n_ / d;
    Integer u0 = 0;
    if (m > 1) {
      Integer red = Integer(av / d) % m;
      mpz_invert(u0.get_mpz_t(), red.get_mpz_t(), m.get_mpz_t());
    }
    for (Integer u = u0; u < n_ + m; u += m)
      if (gcd(u, n_) == 1) return reduce(u);
    return Integer(1);  // unreachable: a unit lift always exists
  }
  Payload leftNormalizer(const Payload& a) const override { return rightNormalizer(a); }
  std::string format(const Payload& a) const override { return get(a).get_str(); }

 protected:
  std::vector<Payload> generatorPayloads() const override { return {}; }
  std::vector<Payload> enumeratePayloads(std::size_t) const override {
    if (n_ > Integer(static_cast<unsigned long>(kMaxEnumeration)))
      throw Error(ErrorCode::InvalidParameters, "ring too large to enumerate");
    std::vector<Payload> out;
    for (Integer v = 0; v < n_; ++v) out.emplace_back(v);
    return out;
  }
  std::optional<Payload> atomPayload(std::string_view) const override { return std::nullopt; }

 private:
  static Capabilities caps() {
    Capabilities c = euclideanCaps(true);
    c.domain = false;
    c.finite = true;
    return c;
  }
  static const Integer& get(const Payload& p) { return std::get<Integer>(p); }
  Integer reduce(const Integer& v) const {
    Integer r = v % n_;
    if (r < 0) r += n_;
    return r;
  }

  Integer n_;
};

// ---------------------------------------------------------------- coefficients

struct FormattedCoeff {
  std::string text;
  bool compound = false;  // needs parentheses in front of x^k
};

struct RationalCoeffs {
  using value_type = Rational;

  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  bool isZero(const Rational& a) const { return a == 0; }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational inv(const Rational& a) const { return 1 / a; }
  Rational twist(const Rational& a, long) const { return a; }
  Rational fromInteger(const Integer& v) const { return Rational(v); }
  std::optional<Rational> fromRational(const Rational& v) const { return v; }
  std::optional<Rational> atom(std::string_view) const { return std::nullopt; }
  std::vector<Rational> alphabet() const { return {0, 1, -1}; }
  FormattedCoeff format(const Rational& a) const { return {a.get_str(), false}; }
};

struct FiniteCoeffs {
  using value_type = std::int64_t;

  std::shared_ptr<const GaloisField> field;
  int twistExponent = 0;  // sigma = Frobenius^twistExponent
  bool exposeGenerator = false;

  std::int64_t zero() const { return 0; }
  std::int64_t one() const { return 1; }
  bool isZero(std::int64_t a) const { return a == 0; }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return field->add(a, b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return field->sub(a, b); }
  std::int64_t neg(std::int64_t a) const { return field->neg(a); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return field->mul(a, b); }
  std::int64_t inv(std::int64_t a) const { return field->inv(a); }
  std::int64_t twist(std::int64_t a, long k) const {
    if (twistExponent == 0) return a;
    long n = field->degree();
    long e = ((static_cast<long>(twistExponent) * k) % n + n) % n;
    return field->frobenius(a, static_cast<int>(e));
  }
  std::int64_t fromInteger(const Integer& v) const { return field->fromInteger(v); }
  std::optional<std::int64_t> fromRational(const Rational&) const { return std::nullopt; }
  std::optional<std::int64_t> atom(std::string_view s) const {
    if (exposeGenerator && s == "g") return field->generator();
    return std::nullopt;
  }
  std::vector<std::int64_t> alphabet() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(field->order()));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  FormattedCoeff format(std::int64_t a) const {
    if (field->degree() == 1) return {std::to_string(a), false};
    auto d = field->digits(a);
    std::vector<std::string> terms;
    for (int i = field->degree() - 1; i >= 0; --i) {
      std::int64_t c = d[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      std::string mono = i == 0 ? "" : (i == 1 ? "g" : "g^" + std::to_string(i));
      if (mono.empty())
        terms.push_back(std::to_string(c));
      else
        terms.push_back(c == 1 ? mono : std::to_string(c) + "*" + mono);
    }
    if (terms.empty()) return {"0", false};
    std::string s = terms.front();
    for (std::size_t t = 1; t < terms.size(); ++t) s += " + " + terms[t];
    return {s, terms.size() > 1};
  }
};

struct QuaternionCoeffs {
  using value_type = Quaternion;

  Quaternion zero() const { return Quaternion(Rational(0)); }
  Quaternion one() const { return Quaternion(Rational(1)); }
  bool isZero(const Quaternion& a) const { return a.isZero(); }
  Quaternion add(const Quaternion& a, const Quaternion& b) const { return a + b; }
  Quaternion sub(const Quaternion& a, const Quaternion& b) const { return a - b; }
  Quaternion neg(const Quaternion& a) const { return -a; }
  Quaternion mul(const Quaternion& a, const Quaternion& b) const { return a * b; }
  Quaternion inv(const Quaternion& a) const { return a.inverse(); }
  Quaternion twist(const Quaternion& a, long) const { return a; }
  Quaternion fromInteger(const Integer& v) const { return Quaternion(Rational(v)); }
  std::optional<Quaternion> fromRational(const Rational& v) const { return Quaternion(v); }
  std::optional<Quaternion> atom(std::string_view s) const {
    if (s == "i") return Quaternion::i();
    if (s == "j") return Quaternion::j();
    if (s == "k") return Quaternion::k();
    return std::nullopt;
  }
  std::vector<Quaternion> alphabet() const {
    return {zero(), one(), -one(), Quaternion::i(), -Quaternion::i(), Quaternion::j(), -Quaternion::j(),
            Quaternion::k(), -Quaternion::k()};
  }
  FormattedCoeff format(const Quaternion& a) const {
    std::vector<std::string> terms;
    auto part = [&terms](const Rational& c, const char* unit) {
      if (c == 0) return;
      if (*unit == '\0') {
        terms.push_back(c.get_str());
      } else if (c == 1) {
        terms.emplace_back(unit);
      } else if (c == -1) {
        terms.push_back(std::string("-") + unit);
      } else {
        terms.push_back(c.get_str() + "*" + unit);
      }
    };
    part(a.w, "");
    part(a.x, "i");
    part(a.y, "j");
    part(a.z, "k");
    if (terms.empty()) return {"0", false};
    std::string s = terms.front();
    for (std::size_t t = 1; t < terms.size(); ++t) {
      if (terms[t][0] == '-')
        s += " - " + terms[t].substr(1);
      else
        s += " + " + terms[t];
    }
    return {s, terms.size() > 1};
  }
};

// ---------------------------------------------------------------- polynomials

// Dense (skew) polynomials sum c_k x^k, constant first, no trailing zeros.
// Multiplication follows x*a = twist(a, 1)*x.
template <class Coeffs>
class PolyRing final : public Ring {
 public:
  using C = typename Coeffs::value_type;
  using Poly = std::vector<C>;

  PolyRing(const RingSpec& spec, Capabilities caps, std::string name, Coeffs coeffs,
           std::vector<std::string> generatorSymbols)
      : Ring(spec, caps, std::move(name)), k_(std::move(coeffs)), generatorSymbols_(std::move(generatorSymbols)) {}

  Payload zeroPayload() const override { return Poly{}; }
  Payload onePayload() const override { return Poly{k_.one()}; }
  Payload integerPayload(const Integer& v) const override { return trim(Poly{k_.fromInteger(v)}); }
  Payload rationalPayload(const Rational& v) const override {
    if (auto c = k_.fromRational(v)) return trim(Poly{*c});
    return Ring::rationalPayload(v);
  }
  bool isZero(const Payload& a) const override { return get(a).empty(); }

  Payload add(const Payload& a, const Payload& b) const override { return addP(get(a), get(b)); }
  Payload sub(const Payload& a, const Payload& b) const override { return addP(get(a), negP(get(b))); }
  Payload neg(const Payload& a) const override { return negP(get(a)); }
  Payload mul(const Payload& a, const Payload& b) const override { return mulP(get(a), get(b)); }

  bool isUnit(const Payload& a) const override { return get(a).size() == 1; }
  Payload inverse(const Payload& a) const override {
    if (!isUnit(a)) throw Error(ErrorCode::NotAUnit, format(a) + " is not a unit of " + name());
    return Poly{k_.inv(get(a)[0])};
  }

  // a = b*q + r: the term c x^s with lc(b) * twist(c, deg b) = lc(a) removes
  // the leading term of a.
  QuotRem divmodRight(const Payload& a, const Payload& b) const override {
    Poly r = get(a);
    const Poly& bp = get(b);
    const long db = static_cast<long>(bp.size()) - 1;
    const C lcInv = k_.inv(bp.back());
    Poly q;
    while (!r.empty() && static_cast<long>(r.size()) - 1 >= db) {
      long shift = static_cast<long>(r.size()) - 1 - db;
      C c = k_.twist(k_.mul(lcInv, r.back()), -db);
      Poly term(static_cast<std::size_t>(shift) + 1, k_.zero());
      term.back() = c;
      q = addP(q, term);
      r = addP(r, negP(mulP(bp, term)));
    }
    return {q, r};
  }

  // a = q*b + r: the term c x^s with c * twist(lc(b), s) = lc(a).
  QuotRem divmodLeft(const Payload& a, const Payload& b) const override {
    Poly r = get(a);
    const Poly& bp = get(b);
    const long db = static_cast<long>(bp.size()) - 1;
    Poly q;
    while (!r.empty() && static_cast<long>(r.size()) - 1 >= db) {
      long shift = static_cast<long>(r.size()) - 1 - db;
      C c = k_.mul(r.back(), k_.inv(k_.twist(bp.back(), shift)));
      Poly term(static_cast<std::size_t>(shift) + 1, k_.zero());
      term.back() = c;
      q = addP(q, term);
      r = addP(r, negP(mulP(term, bp)));
    }
    return {q, r};
  }

  Integer size(const Payload& a) const override {
    return Integer(static_cast<unsigned long>(get(a).empty() ? 0 : get(a).size() - 1));
  }
  Payload rightNormalizer(const Payload& a) const override {
    const Poly& p = get(a);
    if (p.empty()) return onePayload();
    return Poly{k_.twist(k_.inv(p.back()), -static_cast<long>(p.size() - 1))};
  }
  Payload leftNormalizer(const Payload& a) const override {
    const Poly& p = get(a);
    if (p.empty()) return onePayload();
    return Poly{k_.inv(p.back())};
  }

  std::string format(const Payload& a) const override {
    const Poly& p = get(a);
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t d = p.size(); d-- > 0;) {
      if (k_.isZero(p[d])) continue;
      std::string mono = d == 0 ? "" : (d == 1 ? "x" : "x^" + std::to_string(d));
      FormattedCoeff fc = k_.format(p[d]);
      std::string term;
      if (mono.empty()) {
        term = fc.text;
      } else if (fc.text == "1") {
        term = mono;
      } else if (fc.text == "-1") {
        term = "-" + mono;
      } else if (fc.compound) {
        term = "(" + fc.text + ")*" + mono;
      } else {
        term = fc.text + "*" + mono;
      }
      if (out.empty()) {
        out = term;
      } else if (!fc.compound && term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

 protected:
  std::vector<Payload> generatorPayloads() const override {
    std::vector<Payload> out;
    for (const auto& s : generatorSymbols_) out.push_back(*atomPayload(s));
    return out;
  }

  std::vector<Payload> enumeratePayloads(std::size_t bound) const override {
    const std::vector<C> alpha = k_.alphabet();
    std::vector<Payload> out;
    for (const auto& c : alpha) out.push_back(trim(Poly{c}));
    for (std::size_t deg = 1; deg <= bound; ++deg) {
      // Odometer over (lead, c_{deg-1}, ..., c_0); lead skips the zero symbol.
      std::vector<std::size_t> idx(deg + 1, 0);
      idx[0] = 1;
      bool done = alpha.size() < 2;
      while (!done) {
        if (out.size() >= kMaxEnumeration) throw Error(ErrorCode::InvalidParameters, "enumeration bound too large");
        Poly p(deg + 1, k_.zero());
        for (std::size_t t = 0; t <= deg; ++t) p[deg - t] = alpha[idx[t]];
        out.push_back(std::move(p));
        std::size_t t = deg + 1;
        while (t-- > 0) {
          if (++idx[t] < alpha.size()) break;
          if (t == 0) {
            done = true;
            break;
          }
          idx[t] = 0;
        }
      }
    }
    return out;
  }

  std::optional<Payload> atomPayload(std::string_view symbol) const override {
    if (symbol == "x") return Poly{k_.zero(), k_.one()};
    if (auto c = k_.atom(symbol)) return trim(Poly{*c});
    return std::nullopt;
  }

 private:
  static const Poly& get(const Payload& p) { return std::get<Poly>(p); }

  Poly trim(Poly p) const {
    while (!p.empty() && k_.isZero(p.back())) p.pop_back();
    return p;
  }
  Poly addP(const Poly& a, const Poly& b) const {
    const Poly& longer = a.size() >= b.size() ? a : b;
    const Poly& shorter = a.size() >= b.size() ? b : a;
    Poly r = longer;
    for (std::size_t t = 0; t < shorter.size(); ++t) r[t] = k_.add(r[t], shorter[t]);
    return trim(std::move(r));
  }
  Poly negP(const Poly& a) const {
    Poly r(a.size(), k_.zero());
    for (std::size_t t = 0; t < a.size(); ++t) r[t] = k_.neg(a[t]);
    return r;
  }
  Poly mulP(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, k_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (k_.isZero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (k_.isZero(b[j])) continue;
        r[i + j] = k_.add(r[i + j], k_.mul(a[i], k_.twist(b[j], static_cast<long>(i))));
      }
    }
    return trim(std::move(r));
  }

  Coeffs k_;
  std::vector<std::string> generatorSymbols_;
};

std::string skewName(const RingSpec& s) {
  return "F_" + std::to_string(s.prime) + "^" + std::to_string(s.extensionDegree) + "[x;Frob^" +
         std::to_string(s.twist) + "]";
}

}  // namespace

RingHandle makeRing(const RingSpec& spec) {
  switch (spec.kind) {
    case RingKind::Int:
      return std::make_shared<IntegerRing>();
    case RingKind::IntMod:
      if (spec.modulus < 2) throw Error(ErrorCode::InvalidParameters, "IntMod modulus must be >= 2");
      return std::make_shared<IntModRing>(spec);
    case RingKind::PolyRat: {
      RingSpec s{RingKind::PolyRat};
      return std::make_shared<PolyRing<RationalCoeffs>>(s, euclideanCaps(true), "Q[x]", RationalCoeffs{},
                                                       std::vector<std::string>{"x"});
    }
    case RingKind::PolyFp: {
      if (!isPrime(spec.prime)) throw Error(ErrorCode::InvalidParameters, "PolyFp needs a prime p");
      RingSpec s{RingKind::PolyFp};
      s.prime = spec.prime;
      FiniteCoeffs k{std::make_shared<GaloisField>(spec.prime, 1), 0, false};
      return std::make_shared<PolyRing<FiniteCoeffs>>(s, euclideanCaps(true), "F_" + std::to_string(spec.prime) + "[x]",
                                                      k, std::vector<std::string>{"x"});
    }
    case RingKind::SkewPolyFq: {
      if (!isPrime(spec.prime)) throw Error(ErrorCode::InvalidParameters, "SkewPolyFq needs a prime p");
      if (spec.extensionDegree < 1) throw Error(ErrorCode::InvalidParameters, "extension degree must be >= 1");
      if (spec.twist < 0) throw Error(ErrorCode::InvalidParameters, "twist exponent must be >= 0");
      RingSpec s{RingKind::SkewPolyFq};
      s.prime = spec.prime;
      s.extensionDegree = spec.extensionDegree;
      s.twist = spec.twist;
      auto field = std::make_shared<GaloisField>(spec.prime, spec.extensionDegree);
      FiniteCoeffs k{field, spec.twist % spec.extensionDegree, true};
      return std::make_shared<PolyRing<FiniteCoeffs>>(s, euclideanCaps(false), skewName(s), k,
                                                      std::vector<std::string>{"g", "x"});
    }
    case RingKind::QuatPoly: {
      RingSpec s{RingKind::QuatPoly};
      return std::make_shared<PolyRing<QuaternionCoeffs>>(s, euclideanCaps(false), "H_Q[x]", QuaternionCoeffs{},
                                                         std::vector<std::string>{"i", "j", "x"});
    }
  }
  throw Error(ErrorCode::InvalidParameters, "unknown ring kind");
}

std::string printElement(const Element& e) { return e.str(); }

}  // namespace edr
