#include "indopt/dominance.hpp"

#include <algorithm>
#include <stdexcept>

namespace indopt {
namespace {

// Rational polynomials for the Sturm machinery; low-to-high, trimmed.
using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly to_rational(const IntPolynomial& f) {
  RPoly out;
  for (const BigInt& c : f.coefficients()) out.emplace_back(c);
  return out;
}

Rational eval(const RPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RPoly derivative(const RPoly& p) {
  RPoly out;
  for (std::size_t j = 1; j < p.size(); ++j) out.push_back(p[j] * static_cast<int>(j));
  trim(out);
  return out;
}

/// Quotient and remainder of a by b (b nonzero).
std::pair<RPoly, RPoly> divide(RPoly a, const RPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  RPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

/// Scales by 1/|leading coefficient|; positive scaling keeps Sturm signs.
void normalize(RPoly& p) {
  if (p.empty()) return;
  const Rational lead = abs(p.back());
  for (Rational& c : p) c /= lead;
}

RPoly gcd(RPoly a, RPoly b) {
  while (!b.empty()) {
    RPoly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  normalize(a);
  return a;
}

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

class SturmChain {
 public:
  explicit SturmChain(const RPoly& p) {
    chain_.push_back(p);
    RPoly d = derivative(p);
    normalize(d);
    while (!d.empty()) {
      chain_.push_back(d);
      RPoly r = divide(chain_[chain_.size() - 2], chain_.back()).second;
      for (Rational& c : r) c = -c;
      normalize(r);
      d = std::move(r);
    }
  }

  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const RPoly& p : chain_) {
      const int s = sign(eval(p, x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  const RPoly& base() const { return chain_.front(); }

 private:
  std::vector<RPoly> chain_;
};

/// Square-free part with the factor x^v removed, so 0 is not a root.
RPoly squarefree_without_zero_root(const IntPolynomial& d) {
  RPoly p = to_rational(d);
  const RPoly g = gcd(p, derivative(p));
  RPoly s = divide(p, g).first;
  std::size_t zeros = 0;
  while (zeros < s.size() && s[zeros] == 0) ++zeros;
  s.erase(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(zeros));
  normalize(s);
  return s;
}

/// Integer strictly greater than every root modulus.
Rational cauchy_bound(const RPoly& p) {
  Rational worst = 0;
  for (std::size_t j = 0; j + 1 < p.size(); ++j) worst = std::max(worst, Rational(abs(p[j] / p.back())));
  const BigInt whole = numerator(worst) / denominator(worst);
  return Rational(whole + 2);
}

/// A point strictly inside (a, b) that is not a root of p.
Rational interior_nonroot(const RPoly& p, const Rational& a, const Rational& b) {
  for (int den = 2;; ++den) {
    for (int num = 1; num < den; ++num) {
      Rational x = a + (b - a) * Rational(num, den);
      if (eval(p, x) != 0) return x;
    }
  }
}

}  // namespace

std::vector<std::pair<Rational, Rational>> isolate_positive_roots(const IntPolynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  const RPoly s = squarefree_without_zero_root(d);
  std::vector<std::pair<Rational, Rational>> out;
  if (s.size() <= 1) return out;
  const SturmChain chain(s);
  std::vector<std::pair<Rational, Rational>> pending{{Rational(0), cauchy_bound(s)}};
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    const int roots = chain.variations(a) - chain.variations(b);
    if (roots == 0) continue;
    if (roots == 1) {
      out.emplace_back(a, b);
      continue;
    }
    const Rational mid = interior_nonroot(s, a, b);
    pending.emplace_back(a, mid);
    pending.emplace_back(mid, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NonnegativityResult nonneg_on_nonneg_axis(const IntPolynomial& d) {
  if (all_coefficients_nonnegative(d)) return {};
  const RPoly s = squarefree_without_zero_root(d);
  const auto intervals = isolate_positive_roots(d);

  // d keeps one sign on each gap between consecutive distinct roots.
  std::vector<Rational> probes{Rational(0)};
  if (!intervals.empty()) {
    auto [a, b] = intervals.front();
    // Need a point in (0, first root): shrink from the left until the
    // root sits strictly right of a positive point.
    const SturmChain chain(s);
    Rational lo = a;
    Rational hi = b;
    while (lo == 0) {
      const Rational mid = interior_nonroot(s, lo, hi);
      if (chain.variations(mid) - chain.variations(hi) == 1) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    probes.push_back(lo);
    for (const auto& interval : intervals) probes.push_back(interval.second);
  }
  probes.push_back(cauchy_bound(s.size() > 1 ? s : RPoly{Rational(1), Rational(1)}));

  for (const Rational& x : probes) {
    if (eval(d, x) < 0) return {false, x};
  }
  return {};
}

std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::kEqual: return "EQUAL";
    case Dominance::kCoeffwiseGe: return "COEFFWISE_GE";
    case Dominance::kEverywhereGe: return "EVERYWHERE_GE";
    case Dominance::kEverywhereLe: return "EVERYWHERE_LE";
    case Dominance::kCrosses: return "CROSSES";
  }
  return "?";
}

DominanceVerdict dominance(const IntPolynomial& f, const IntPolynomial& g) {
  const IntPolynomial d = f - g;
  if (d.is_zero()) return {Dominance::kEqual, std::nullopt, std::nullopt};
  if (all_coefficients_nonnegative(d)) return {Dominance::kCoeffwiseGe, std::nullopt, std::nullopt};
  const NonnegativityResult below = nonneg_on_nonneg_axis(d);
  if (below.nonnegative) return {Dominance::kEverywhereGe, std::nullopt, std::nullopt};
  const NonnegativityResult above = nonneg_on_nonneg_axis(-d);
  if (above.nonnegative) return {Dominance::kEverywhereLe, std::nullopt, std::nullopt};
  Rational lo = *below.witness;
  Rational hi = *above.witness;
  if (hi < lo) std::swap(lo, hi);
  return {Dominance::kCrosses, lo, hi};
}

std::strong_ordering compare_near_zero(const IntPolynomial& f, const IntPolynomial& g) {
  const int top = std::max(f.degree(), g.degree());
  for (int j = 0; j <= top; ++j) {
    const BigInt a = f[j];
    const BigInt b = g[j];
    if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_near_infinity(const IntPolynomial& f, const IntPolynomial& g) {
  for (int j = std::max(f.degree(), g.degree()); j >= 0; --j) {
    const BigInt a = f[j];
    const BigInt b = g[j];
    if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace indopt
