#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace coedge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial over the integers, coefficients in ascending degree.
///
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class ExactPolynomial {
public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<BigInt> coeffs);

  static ExactPolynomial constant(BigInt c);
  /// x - r
  static ExactPolynomial linear_root(const BigInt& r);
  static ExactPolynomial monomial(int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  BigInt coeff(int i) const;
  const BigInt& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  BigInt eval(const BigInt& x) const;
  /// Exact value at a rational point.
  Rational eval(const Rational& x) const;
  /// Sign of the value at a rational point, computed over the integers.
  int sign_at(const Rational& x) const;
  /// Sign as x tends to +infinity (to -infinity when `negative_infinity`).
  int sign_at_infinity(bool negative_infinity) const;

  ExactPolynomial derivative() const;
  BigInt content() const;
  /// Divides out the content and makes the leading coefficient positive.
  ExactPolynomial primitive_part() const;

  friend ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(const BigInt& c, const ExactPolynomial& a);
  ExactPolynomial operator-() const;

  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

  /// e.g. "x^3 - 3*x - 2"
  std::string to_string() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b.
ExactPolynomial pseudo_remainder(const ExactPolynomial& a, const ExactPolynomial& b);

/// Quotient of a by b when b divides a over the integers; throws otherwise.
ExactPolynomial divide_exact(const ExactPolynomial& a, const ExactPolynomial& b);

/// True when b divides a over the rationals.
bool divides(const ExactPolynomial& b, const ExactPolynomial& a);

/// Primitive greatest common divisor with positive leading coefficient
/// (primitive polynomial remainder sequence).
ExactPolynomial gcd(const ExactPolynomial& a, const ExactPolynomial& b);

/// p / gcd(p, p'), primitive.
ExactPolynomial squarefree_part(const ExactPolynomial& p);

/// p = c * prod_i f_i^i. Returns the nonconstant f_i paired with i, in
/// increasing multiplicity. Factors are primitive with positive leading
/// coefficient and pairwise coprime.
std::vector<std::pair<ExactPolynomial, int>> squarefree_decomposition(const ExactPolynomial& p);

/// Sturm chain of a squarefree polynomial.
class SturmSequence {
public:
  explicit SturmSequence(const ExactPolynomial& squarefree);

  /// Number of distinct real roots in (lo, hi].
  int count_in(const Rational& lo, const Rational& hi) const;
  /// Number of distinct real roots strictly below x.
  int count_below(const Rational& x) const;
  int count_real() const;
  const ExactPolynomial& base() const { return chain_.front(); }

private:
  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool negative_infinity) const;
  std::vector<ExactPolynomial> chain_;
};

/// Integer bound B with every real root of p in (-B, B).
BigInt root_bound(const ExactPolynomial& p);

/// Square integer matrix with machine-sized entries.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// det(xI - M), computed modulo enough primes to exceed the Hadamard bound
/// on its coefficients and lifted by Chinese remaindering.
ExactPolynomial characteristic_polynomial(const IntMatrix& m);

}  // namespace coedge
