#include "indopt/kindpoly.hpp"

#include <stdexcept>
#include <thread>

#include "indopt/indpoly.hpp"

namespace indopt {
namespace {

void sweep(const std::vector<std::uint64_t>& cliques, std::uint64_t begin, std::uint64_t end,
           std::vector<std::uint64_t>& counts) {
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    bool free = true;
    for (std::uint64_t c : cliques) {
      if ((mask & c) == c) {
        free = false;
        break;
      }
    }
    if (free) ++counts[std::popcount(mask)];
  }
}

}  // namespace

IntPolynomial k_independence_polynomial(const Graph& g, int k, int workers) {
  if (k < 2) throw std::invalid_argument("k-independence needs k >= 2");
  const int n = g.order();
  if (n > kMaxOracleOrder) {
    throw std::invalid_argument("k-independence sweep limited to order " +
                                std::to_string(kMaxOracleOrder));
  }
  std::vector<std::uint64_t> cliques;
  for (VertexSet c : k_cliques(g, k)) cliques.push_back(c.bits());

  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint64_t> counts(n + 1, 0);
  if (workers <= 1 || total < 4096) {
    sweep(cliques, 0, total, counts);
  } else {
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1));
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(total, chunk * w);
      const std::uint64_t end = std::min(total, begin + chunk);
      threads.emplace_back(sweep, std::cref(cliques), begin, end, std::ref(partial[w]));
    }
    for (auto& t : threads) t.join();
    for (const auto& p : partial) {
      for (int j = 0; j <= n; ++j) counts[j] += p[j];
    }
  }
  return IntPolynomial(std::vector<BigInt>(counts.begin(), counts.end()));
}

int r_value(const Graph& g, int k) { return k_independence_polynomial(g, k).degree(); }

CliqueCounts join_clique_counts(const CliqueCounts& a, const CliqueCounts& b) {
  if (a.empty() || b.empty()) return {};
  CliqueCounts out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Rational clique_ratio(int l, int i) {
  if (l < 3) throw std::domain_error("clique ratio needs l >= 3 (l = 2 compares a graph with itself)");
  const int pairs = l * (l - 1) / 2;
  if (i < 2 || i > pairs) {
    throw std::domain_error("clique ratio needs 2 <= i <= C(l,2); denominator vanishes otherwise");
  }
  const int big = l * (l - 2);
  const BigInt num = binomial(big, i) + BigInt(l) * binomial(big, i - 1);
  const BigInt den = binomial(pairs, i) * (BigInt(1) << i);
  return Rational(num, den);
}

}  // namespace indopt
