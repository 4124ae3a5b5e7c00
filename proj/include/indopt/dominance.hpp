#pragma once

#include <compare>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "indopt/polynomial.hpp"

namespace indopt {

/// Outcome of deciding whether d(x) >= 0 for every x >= 0.
struct NonnegativityResult {
  bool nonnegative = true;
  /// Set iff !nonnegative: an exact x >= 0 with d(x) < 0.
  std::optional<Rational> witness;
};

/// Exact decision of d >= 0 on [0, inf).
///
/// Nonnegative coefficients answer immediately. Otherwise the distinct
/// positive roots of d are isolated with a Sturm chain over the rationals
/// and d is sampled at 0, between consecutive roots and beyond the last one.
NonnegativityResult nonneg_on_nonneg_axis(const IntPolynomial& d);

/// Disjoint open intervals (a, b), 0 <= a < b, each holding exactly one
/// distinct positive real root of d; neither endpoint is a root, except
/// that a may be 0. Sorted increasingly. d must be nonzero.
std::vector<std::pair<Rational, Rational>> isolate_positive_roots(const IntPolynomial& d);

enum class Dominance {
  kEqual,
  kCoeffwiseGe,
  kEverywhereGe,
  kEverywhereLe,
  kCrosses,
};

std::string_view to_string(Dominance d);

/// Comparison of f and g on [0, inf). For kCrosses, f - g takes strictly
/// opposite nonzero signs at x_lo < x_hi.
struct DominanceVerdict {
  Dominance tag = Dominance::kEqual;
  std::optional<Rational> x_lo;
  std::optional<Rational> x_hi;

  /// True for every tag meaning f >= g on all of [0, inf).
  bool first_dominates() const {
    return tag == Dominance::kEqual || tag == Dominance::kCoeffwiseGe ||
           tag == Dominance::kEverywhereGe;
  }
};

DominanceVerdict dominance(const IntPolynomial& f, const IntPolynomial& g);

/// Order of f and g for all sufficiently small x > 0: decided by the first
/// differing coefficient.
std::strong_ordering compare_near_zero(const IntPolynomial& f, const IntPolynomial& g);
/// Order for all sufficiently large x: decided by the last differing coefficient.
std::strong_ordering compare_near_infinity(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace indopt
