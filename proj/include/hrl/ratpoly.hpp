#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hrl/rational.hpp"

namespace hrl {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i;
/// the highest stored coefficient is never zero, so the zero polynomial has
/// no coefficients at all.
class RatPoly {
 public:
  /// Degree reported for the zero polynomial. Stands in for minus infinity;
  /// callers must test is_zero() before doing degree arithmetic.
  static constexpr int kZeroDegree = -1;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<long> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int power);
  static RatPoly x() { return monomial(Rational(1), 1); }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i, zero beyond the degree.
  Rational coeff(int i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  RatPoly derivative() const;
  RatPoly monic() const;

  Rational operator()(const Rational& x) const;
  std::complex<double> operator()(std::complex<double> z) const;
  std::complex<long double> eval(std::complex<long double> z) const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& other);
  RatPoly& operator-=(const RatPoly& other);
  RatPoly& operator*=(const RatPoly& other);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  std::vector<double> to_doubles() const;
  std::vector<long double> to_long_doubles() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

RatPoly pow(const RatPoly& p, unsigned n);

/// Quotient and remainder of exact division over Q. Throws InvalidInput on a
/// zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// a / b where b is known to divide a; throws ContractViolation otherwise.
RatPoly divide_exact(const RatPoly& a, const RatPoly& b);

/// Monic gcd through the Euclidean remainder sequence. gcd(a, 0) = monic(a).
/// Throws InvalidInput when both are zero.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Positive rational c with p / c an integer polynomial whose coefficients
/// have gcd 1. Zero for the zero polynomial.
Rational content(const RatPoly& p);

/// p / content(p): integer coefficients, same sign pattern as p.
RatPoly primitive_part(const RatPoly& p);

/// Monic p / gcd(p, p'). Throws InvalidInput on zero.
RatPoly squarefree_part(const RatPoly& p);
bool is_squarefree(const RatPoly& p);

/// Yun's decomposition: factors[i] is monic, squarefree and collects the roots
/// of multiplicity i+1, so p = lc(p) * prod factors[i]^(i+1).
std::vector<RatPoly> squarefree_factorization(const RatPoly& p);

/// W(p, q) = p' q - q' p.
RatPoly wronskian(const RatPoly& p, const RatPoly& q);

/// Q1^2 - 4 Q2, the discriminant of 1 + Q1 t + Q2 t^2 in t.
RatPoly discriminant_char(const RatPoly& q1, const RatPoly& q2);

/// Canonical text such as "x^4-8x^3+21x^2-14x-16" or "1/2x^2-3"; "0" for the
/// zero polynomial. The expression parser reads it back to the same value.
std::string to_string(const RatPoly& p);

/// Largest |coefficient| ratio bound 1 + max |c_i / c_lead|; every complex
/// root has modulus strictly below it. p must have degree >= 1.
Rational cauchy_bound(const RatPoly& p);

}  // namespace hrl
