#include "edr/oracle.hpp"

#include <unordered_map>

#include "edr/core.hpp"
#include "edr/error.hpp"

namespace edr {

namespace {

// Plain Euclid, kept apart from the Bezout code it is meant to check.
Element gcd(Element a, Element b) {
  while (!b.isZero()) {
    Element r = divmodRight(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.isZero() ? a : canonicalRight(a);
}

Matrix submatrix(const Matrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix s(a.ring(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i], cols[j]);
  return s;
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void forEachSubset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Element determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  requireCapability(*a.ring(), Capability::Commutative, "determinant");
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  Element det = a.ring()->zero();
  std::vector<std::size_t> rest(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) rest[i] = i + 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).isZero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    Element term = a(0, j) * determinant(submatrix(a, rest, cols));
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

InvariantFactors minorGcdFactors(const Matrix& a) {
  const Ring& R = *a.ring();
  requireCapability(R, Capability::Commutative, "minorGcdFactors");
  requireCapability(R, Capability::Domain, "minorGcdFactors");
  requireCapability(R, Capability::RightEuclidean, "minorGcdFactors");
  InvariantFactors out;
  const std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t size = 1; size <= k; ++size) {
    Element g = R.zero();
    forEachSubset(a.rows(), size, [&](const std::vector<std::size_t>& rows) {
      forEachSubset(a.cols(), size, [&](const std::vector<std::size_t>& cols) {
        g = gcd(g, determinant(submatrix(a, rows, cols)));
      });
    });
    out.minorGcds.push_back(g);
  }
  Element prev = R.one();
  for (const auto& g : out.minorGcds) {
    if (g.isZero()) {
      out.factors.push_back(g);
      continue;
    }
    auto [q, r] = divmodRight(g, prev);
    if (!r.isZero()) throw Error(ErrorCode::InvalidParameters, "minor gcds do not form a divisibility chain");
    out.factors.push_back(canonicalRight(q));
    prev = g;
  }
  return out;
}

const char* oracleConditionName(OracleCondition c) noexcept {
  switch (c) {
    case OracleCondition::SR1: return "sr1";
    case OracleCondition::SR2: return "sr2";
    case OracleCondition::Simple2: return "simple2";
    case OracleCondition::NSimple: return "nsimple";
  }
  return "?";
}

std::optional<OracleCondition> oracleConditionFromName(const std::string& name) {
  for (auto c : {OracleCondition::SR1, OracleCondition::SR2, OracleCondition::Simple2, OracleCondition::NSimple})
    if (name == oracleConditionName(c)) return c;
  return std::nullopt;
}

ExhaustiveOracle::ExhaustiveOracle(RingHandle ring) : ring_(std::move(ring)) {
  requireCapability(*ring_, Capability::Finite, "ExhaustiveOracle");
  elems_ = ring_->enumerate(0);
  const std::size_t n = elems_.size();
  std::unordered_map<std::string, std::size_t> keys;
  for (std::size_t i = 0; i < n; ++i) keys.emplace(elems_[i].str(), i);
  auto lookup = [&](const Element& e) { return keys.at(e.str()); };
  add_.resize(n * n);
  mul_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add_[i * n + j] = lookup(elems_[i] + elems_[j]);
      mul_[i * n + j] = lookup(elems_[i] * elems_[j]);
    }
  zero_ = lookup(ring_->zero());
  one_ = lookup(ring_->one());
  unit_.assign(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (mul_[i * n + j] == one_ && mul_[j * n + i] == one_) unit_[i] = true;
}

std::size_t ExhaustiveOracle::index(const Element& e) const {
  requireSameRing(ring_->zero(), e);
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i] == e) return i;
  throw Error(ErrorCode::InvalidParameters, "element missing from the enumeration");
}

bool ExhaustiveOracle::rightUnimodular(std::size_t a, std::size_t b) const {
  const std::size_t n = size();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      if (add_[mul_[a * n + r] * n + mul_[b * n + s]] == one_) return true;
  return false;
}

bool ExhaustiveOracle::twoSidedUnit(const std::vector<std::size_t>& gens) const {
  const std::size_t n = size();
  std::vector<bool> isGen(n, false);
  for (std::size_t g : gens)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) isGen[mul_[mul_[u * n + g] * n + v]] = true;
  std::vector<std::size_t> products;
  for (std::size_t i = 0; i < n; ++i)
    if (isGen[i]) products.push_back(i);
  // Additive closure from zero.
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> stack{zero_};
  reached[zero_] = true;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t p : products) {
      std::size_t y = add_[x * n + p];
      if (!reached[y]) {
        reached[y] = true;
        stack.push_back(y);
      }
    }
  }
  return reached[one_];
}

std::optional<OracleWitness> ExhaustiveOracle::solve(OracleCondition condition, const std::vector<Element>& inputs,
                                                     std::size_t nMax) const {
  static const std::size_t arity[] = {2, 3, 3, 1};
  if (inputs.size() != arity[static_cast<int>(condition)])
    throw Error(ErrorCode::InvalidParameters, std::string("wrong number of inputs for ") + oracleConditionName(condition));
  std::vector<std::size_t> in;
  for (const auto& e : inputs) in.push_back(index(e));
  const std::size_t n = size();
  auto mul = [&](std::size_t x, std::size_t y) { return mul_[x * n + y]; };
  auto add = [&](std::size_t x, std::size_t y) { return add_[x * n + y]; };

  switch (condition) {
    case OracleCondition::SR1:
      for (std::size_t t = 0; t < n; ++t)
        if (unit_[add(in[0], mul(in[1], t))]) return OracleWitness{{elems_[t]}, 0};
      return std::nullopt;
    case OracleCondition::SR2:
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
          if (rightUnimodular(add(in[0], mul(in[2], x)), add(in[1], mul(in[2], y))))
            return OracleWitness{{elems_[x], elems_[y]}, 0};
      return std::nullopt;
    case OracleCondition::Simple2:
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t p = 0; p < n; ++p) {
          if (!rightUnimodular(p, q)) continue;
          if (twoSidedUnit({add(mul(p, in[0]), mul(q, in[1])), mul(p, in[2])}))
            return OracleWitness{{elems_[p], elems_[q]}, 0};
        }
      return std::nullopt;
    case OracleCondition::NSimple: {
      // Breadth-first over sums; parent links rebuild one shortest combination.
      struct Step {
        std::size_t parent, u, v;
      };
      constexpr std::size_t kNone = static_cast<std::size_t>(-1);
      std::vector<std::optional<Step>> via(n);
      std::vector<std::size_t> depth(n, 0);
      std::vector<std::size_t> frontier{zero_};
      std::vector<bool> reached(n, false);
      reached[zero_] = true;
      via[zero_] = Step{kNone, 0, 0};
      for (std::size_t d = 1; d <= nMax && !reached[one_]; ++d) {
        std::vector<std::size_t> next;
        for (std::size_t s : frontier)
          for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = 0; u < n; ++u) {
              std::size_t y = add(s, mul(mul(u, in[0]), v));
              if (reached[y]) continue;
              reached[y] = true;
              via[y] = Step{s, u, v};
              depth[y] = d;
              next.push_back(y);
            }
        frontier = std::move(next);
      }
      if (!reached[one_] || one_ == zero_) return std::nullopt;
      OracleWitness w;
      w.n = depth[one_];
      std::vector<std::size_t> chain;
      for (std::size_t k = one_; k != zero_; k = via[k]->parent) chain.push_back(k);
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        w.values.push_back(elems_[via[*it]->u]);
        w.values.push_back(elems_[via[*it]->v]);
      }
      return w;
    }
  }
  return std::nullopt;
}

std::optional<OracleWitness> exhaustiveWitnessOracle(const RingHandle& ring, OracleCondition condition,
                                                     const std::vector<Element>& inputs, std::size_t nMax) {
  return ExhaustiveOracle(ring).solve(condition, inputs, nMax);
}

}  // namespace edr
