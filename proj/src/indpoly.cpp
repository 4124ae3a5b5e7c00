#include "indopt/indpoly.hpp"

#include <stdexcept>

#include "indopt/canonical.hpp"

namespace indopt {

const IntPolynomial* IndependenceCache::find(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return nullptr;
  ++hits_;
  return &it->second;
}

void IndependenceCache::insert(const std::string& key, const IntPolynomial& value) {
  if (capacity_ == 0) return;
  if (entries_.size() >= capacity_) {
    entries_.clear();
    ++resets_;
  }
  entries_.emplace(key, value);
}

namespace {

IntPolynomial connected_polynomial(const Graph& c, IndependenceCache& cache);

IntPolynomial polynomial_of(const Graph& g, IndependenceCache& cache) {
  if (g.is_null()) return IntPolynomial::constant(1);
  IntPolynomial result = IntPolynomial::constant(1);
  int isolated = 0;
  for (VertexSet part : components(g)) {
    if (part.size() == 1) {
      ++isolated;
      continue;
    }
    result = result * connected_polynomial(induced_subgraph(g, part), cache);
  }
  return isolated > 0 ? result * binomial_power(isolated) : result;
}

IntPolynomial connected_polynomial(const Graph& c, IndependenceCache& cache) {
  const int n = c.order();
  if (is_clique(c, c.vertices())) return IntPolynomial{1, n};

  std::string key;
  if (n >= cache.min_order()) {
    key = canonical_form(c);
    if (const IntPolynomial* hit = cache.find(key)) return *hit;
  }

  int pivot = 0;
  for (int v = 1; v < n; ++v) {
    if (c.degree(v) > c.degree(pivot)) pivot = v;
  }
  IntPolynomial result =
      polynomial_of(delete_vertex(c, pivot), cache) +
      variable() * polynomial_of(induced_subgraph(c, c.vertices() - closed_neighborhood(c, pivot)),
                                 cache);
  if (!key.empty()) cache.insert(key, result);
  return result;
}

}  // namespace

IntPolynomial independence_polynomial(const Graph& g, IndependenceCache& cache) {
  return polynomial_of(g, cache);
}

IntPolynomial independence_polynomial(const Graph& g) {
  thread_local IndependenceCache cache;
  return polynomial_of(g, cache);
}

IntPolynomial independence_polynomial_oracle(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOracleOrder) {
    throw std::invalid_argument("subset oracle limited to order " +
                                std::to_string(kMaxOracleOrder));
  }
  std::vector<std::uint64_t> counts(n + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool independent = true;
    for (int v : VertexSet(mask)) {
      if (g.neighbors(v).bits() & mask) {
        independent = false;
        break;
      }
    }
    if (independent) ++counts[std::popcount(mask)];
  }
  std::vector<BigInt> coeffs(counts.begin(), counts.end());
  return IntPolynomial(std::move(coeffs));
}

LexDecomposition lex_decomposition(int n, int m) {
  const int full = n * (n - 1) / 2;
  if (n < 1 || n > kMaxOrder || m < 0 || m >= full) {
    throw std::invalid_argument("lex decomposition needs 0 <= m < C(n,2)");
  }
  LexDecomposition d;
  d.remainder = m;
  while (d.remainder >= n - 1 - d.dominating) {
    d.remainder -= n - 1 - d.dominating;
    ++d.dominating;
  }
  return d;
}

namespace {

void check_lex_range(int n, int m) {
  if (n < 1 || n > kMaxOrder || m < 0 || m > n * (n - 1) / 2) {
    throw std::invalid_argument("lex polynomial needs 1 <= n <= 62 and 0 <= m <= C(n,2)");
  }
}

}  // namespace

IntPolynomial lex_polynomial_closed(int n, int m) {
  check_lex_range(n, m);
  if (m == n * (n - 1) / 2) return IntPolynomial{1, n};
  const auto [l, j] = lex_decomposition(n, m);
  // Pivot on the vertex of degree l + j: removing it leaves the l
  // dominating vertices joined to an independent set of n - l - 1; removing
  // its closed neighbourhood leaves n - l - j - 1 isolated vertices.
  return binomial_power(n - l - 1) + IntPolynomial{0, l} +
         variable() * binomial_power(n - l - j - 1);
}

IntPolynomial lex_polynomial_displayed(int n, int m) {
  check_lex_range(n, m);
  if (m == n * (n - 1) / 2) return IntPolynomial{1, n};
  const auto [l, j] = lex_decomposition(n, m);
  return IntPolynomial{1, l} * binomial_power(n - l - j - 1) * (binomial_power(j) + variable());
}

}  // namespace indopt
