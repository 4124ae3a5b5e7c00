#include "indopt/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace indopt {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  c_.reserve(coefficients.size());
  for (long long c : coefficients) c_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

BigInt IntPolynomial::operator[](int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return 0;
  return c_[j];
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

IntPolynomial operator+(IntPolynomial f, const IntPolynomial& g) { return f += g; }
IntPolynomial operator-(IntPolynomial f, const IntPolynomial& g) { return f -= g; }
IntPolynomial operator-(const IntPolynomial& f) { return IntPolynomial() - f; }

IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  auto a = f.coefficients();
  auto b = g.coefficients();
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& s, const IntPolynomial& f) {
  std::vector<BigInt> out(f.coefficients().begin(), f.coefficients().end());
  for (BigInt& c : out) c *= s;
  return IntPolynomial(std::move(out));
}

IntPolynomial pow(const IntPolynomial& f, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial exponent");
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPolynomial binomial_power(int n) {
  if (n < 0) throw std::invalid_argument("negative binomial exponent");
  std::vector<BigInt> c(n + 1);
  for (int j = 0; j <= n; ++j) c[j] = binomial(n, j);
  return IntPolynomial(std::move(c));
}

Rational eval(const IntPolynomial& f, const Rational& x) {
  Rational acc = 0;
  auto c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

bool all_coefficients_nonnegative(const IntPolynomial& f) {
  return std::all_of(f.coefficients().begin(), f.coefficients().end(),
                     [](const BigInt& c) { return c >= 0; });
}

bool PolynomialLess::operator()(const IntPolynomial& a, const IntPolynomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto x = a.coefficients();
  auto y = b.coefficients();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::string to_string(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  auto c = f.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    BigInt magnitude = abs(c[j]);
    if (out.empty()) {
      if (c[j] < 0) out += "-";
    } else {
      out += c[j] < 0 ? " - " : " + ";
    }
    out += magnitude.str();
    if (j == 1) out += "*x";
    if (j > 1) out += "*x^" + std::to_string(j);
  }
  return out;
}

std::vector<std::string> to_decimal_strings(const IntPolynomial& f) {
  std::vector<std::string> out;
  for (const BigInt& c : f.coefficients()) out.push_back(c.str());
  return out;
}

IntPolynomial from_decimal_strings(const std::vector<std::string>& coefficients) {
  std::vector<BigInt> c;
  c.reserve(coefficients.size());
  for (const std::string& s : coefficients) {
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) {
      throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
    }
    c.emplace_back(s);
  }
  return IntPolynomial(std::move(c));
}

std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto valid = [](const std::string& s, bool allow_sign) {
    std::size_t start = allow_sign && !s.empty() && s[0] == '-' ? 1 : 0;
    return s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos;
  };
  if (!valid(num, true) || !valid(den, false) || BigInt(den) == 0) {
    throw std::invalid_argument("not a rational \"p/q\": \"" + text + "\"");
  }
  return Rational(BigInt(num), BigInt(den));
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace indopt
