#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indopt/search.hpp"

namespace indopt {

enum class TheoremTag { kTheorem1, kTheorem2, kTheorem3, kTheorem4, kTheorem5, kTheorem6, kLemma4 };

/// "thm1" ... "thm6", "lemma4".
std::optional<TheoremTag> parse_theorem(std::string_view tag);
std::string_view to_string(TheoremTag t);

/// Unset n or m means "every admissible value" where the check sweeps.
struct VerifyParams {
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> k;
  int l = 3;
  int a = 3;
  int b = 1;
  int trials = 200;
  int max_n = 10;
  std::uint64_t seed = 42;
  SearchOptions search;
};

struct VerificationReport {
  TheoremTag tag = TheoremTag::kTheorem1;
  bool passed = false;
  std::vector<std::string> evidence;
  std::vector<std::string> failures;
};

/// Runs the construction and exhaustive search checks for one result at
/// the requested parameters. Throws std::invalid_argument when the
/// parameters violate the result's hypotheses.
VerificationReport verify_theorem(TheoremTag tag, const VerifyParams& params);

/// Searches every class S_{n,m} with n <= max_n (within budget) for one
/// with no optimally-least graph for I. Finding none is evidence only.
struct ExplorationReport {
  int max_n = 0;
  int classes_checked = 0;
  int classes_skipped = 0;
  std::vector<OptimalityReport> counterexamples;
};
ExplorationReport explore_least(int max_n, const SearchOptions& options = {});

}  // namespace indopt
