#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>

#include "indopt/graph.hpp"
#include "indopt/polynomial.hpp"

namespace indopt {

/// Memo of component polynomials keyed by canonical form. Bounded: when
/// `capacity` entries are reached the whole cache is dropped. Not
/// thread-safe; give each worker its own.
class IndependenceCache {
 public:
  static constexpr std::size_t kDefaultCapacity = std::size_t{1} << 20;
  /// Components smaller than this are cheaper to recompute than to canonicalize.
  static constexpr int kDefaultMinOrder = 9;

  explicit IndependenceCache(std::size_t capacity = kDefaultCapacity,
                             int min_order = kDefaultMinOrder)
      : capacity_(capacity), min_order_(min_order) {}

  const IntPolynomial* find(const std::string& key) const;
  void insert(const std::string& key, const IntPolynomial& value);

  std::size_t size() const { return entries_.size(); }
  std::size_t hits() const { return hits_; }
  std::size_t resets() const { return resets_; }
  int min_order() const { return min_order_; }

 private:
  std::size_t capacity_;
  int min_order_;
  std::unordered_map<std::string, IntPolynomial> entries_;
  mutable std::size_t hits_ = 0;
  std::size_t resets_ = 0;
};

/// I(G, x): coefficient j counts independent sets of size j.
///
/// Factors over connected components; each component recurses on a
/// maximum-degree vertex v (lowest index on ties) with
/// I(C) = I(C - v) + x * I(C - N[v]). Cliques and single vertices are base
/// cases. The null graph gives 1.
IntPolynomial independence_polynomial(const Graph& g, IndependenceCache& cache);
/// Uses a thread-local cache.
IntPolynomial independence_polynomial(const Graph& g);

inline constexpr int kMaxOracleOrder = 25;

/// Direct definition: tests every vertex subset for independence.
/// Throws std::invalid_argument for orders above 25.
IntPolynomial independence_polynomial_oracle(const Graph& g);

/// Decomposition m = (n-1) + (n-2) + ... + (n-l) + j with 0 <= j <= n-l-2,
/// for 0 <= m < C(n,2).
struct LexDecomposition {
  int dominating = 0;  // l
  int remainder = 0;   // j
};
LexDecomposition lex_decomposition(int n, int m);

/// Closed form of I for the lexicographic graph on n vertices and m edges:
/// 1 + n x when m = C(n,2), otherwise
/// (1+x)^(n-l-1) + l x + x (1+x)^(n-l-j-1).
IntPolynomial lex_polynomial_closed(int n, int m);

/// The product (1 + l x)(1+x)^(n-l-j-1)((1+x)^j + x) as it appears in the
/// literature. It agrees with the lex graph only when l = 0 or m = C(n,2);
/// kept for discrepancy reporting.
IntPolynomial lex_polynomial_displayed(int n, int m);

}  // namespace indopt
