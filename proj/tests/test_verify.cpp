#include <doctest.h>

#include "indopt/verify.hpp"

using namespace indopt;

namespace {

VerifyParams with_n(int n) {
  VerifyParams p;
  p.n = n;
  return p;
}

}  // namespace

TEST_CASE("tags") {
  for (const char* tag : {"thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "lemma4"}) {
    const auto t = parse_theorem(tag);
    REQUIRE(t.has_value());
    CHECK(to_string(*t) == tag);
  }
  CHECK_FALSE(parse_theorem("thm7").has_value());
}

TEST_CASE("passing checks") {
  CHECK(verify_theorem(TheoremTag::kTheorem1, with_n(5)).passed);
  CHECK(verify_theorem(TheoremTag::kTheorem2, with_n(6)).passed);
  CHECK(verify_theorem(TheoremTag::kTheorem4, with_n(6)).passed);
  CHECK(verify_theorem(TheoremTag::kTheorem5, {}).passed);
  CHECK(verify_theorem(TheoremTag::kTheorem6, {}).passed);
  VerifyParams lemma;
  lemma.trials = 50;
  const auto r = verify_theorem(TheoremTag::kLemma4, lemma);
  CHECK(r.passed);
  CHECK(r.failures.empty());
}

TEST_CASE("the cubic coefficient of 2K_a u K_b is a^2 b") {
  VerifyParams p;
  p.a = 3;
  p.b = 1;
  const auto r = verify_theorem(TheoremTag::kTheorem3, p);
  CHECK_FALSE(r.passed);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].find("x^3 coefficient 9") != std::string::npos);
}

TEST_CASE("deleted-edge family at n = 7 passes") {
  // Only the three-clique formula is left failing.
  VerifyParams p = with_n(7);
  p.a = 2;
  p.b = 1;
  const auto r = verify_theorem(TheoremTag::kTheorem3, p);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].find("2C(a,3)+C(b,3) = 0") != std::string::npos);
}

TEST_CASE("hypothesis violations throw") {
  CHECK_THROWS_AS(verify_theorem(TheoremTag::kTheorem1, {}), std::invalid_argument);
  VerifyParams p = with_n(6);
  p.m = 2;
  CHECK_THROWS_AS(verify_theorem(TheoremTag::kTheorem2, p), std::invalid_argument);
  p.m = 4;
  CHECK_THROWS_AS(verify_theorem(TheoremTag::kTheorem4, p), std::invalid_argument);
  VerifyParams bad5;
  bad5.n = 12;
  CHECK_THROWS_AS(verify_theorem(TheoremTag::kTheorem5, bad5), std::invalid_argument);
}

TEST_CASE("exploration reports evidence") {
  const auto r = explore_least(5);
  CHECK(r.classes_checked == 1 + 2 + 4 + 7 + 11);
  CHECK(r.counterexamples.empty());
}
