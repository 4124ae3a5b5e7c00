#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace indopt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial with arbitrary-precision integer coefficients.
///
/// Canonical form: no trailing zero coefficients, so the zero polynomial is
/// the empty coefficient vector and equality is structural.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^j; zero beyond the degree.
  BigInt operator[](int j) const;
  std::span<const BigInt> coefficients() const { return c_; }

  bool operator==(const IntPolynomial&) const = default;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);

 private:
  void trim();
  std::vector<BigInt> c_;
};

IntPolynomial operator+(IntPolynomial f, const IntPolynomial& g);
IntPolynomial operator-(IntPolynomial f, const IntPolynomial& g);
IntPolynomial operator-(const IntPolynomial& f);
IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial operator*(const BigInt& s, const IntPolynomial& f);

IntPolynomial pow(const IntPolynomial& f, int e);
/// (1 + x)^n.
IntPolynomial binomial_power(int n);
/// The polynomial x.
inline IntPolynomial variable() { return IntPolynomial::monomial(1, 1); }

Rational eval(const IntPolynomial& f, const Rational& x);

bool all_coefficients_nonnegative(const IntPolynomial& f);

/// Total order on coefficient vectors (shorter first, then lexicographic);
/// used for deterministic containers, not as a mathematical ordering.
struct PolynomialLess {
  bool operator()(const IntPolynomial& a, const IntPolynomial& b) const;
};

/// "c0 + c1*x + c2*x^2 + ..." with zero terms omitted; "0" for zero.
std::string to_string(const IntPolynomial& f);
/// Coefficients c0..cd as decimal strings.
std::vector<std::string> to_decimal_strings(const IntPolynomial& f);
IntPolynomial from_decimal_strings(const std::vector<std::string>& coefficients);

/// "p/q" with q > 0, always including the denominator.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

BigInt binomial(int n, int k);

}  // namespace indopt
