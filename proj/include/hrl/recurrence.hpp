#pragma once

#include <vector>

#include "hrl/ratpoly.hpp"

namespace hrl {

/// Coefficients Q_1..Q_k of P_i + Q_1 P_{i-1} + ... + Q_k P_{i-k} = 0 with
/// P_0 = 1 and P_j = 0 for j < 0.
class RecurrenceSpec {
 public:
  /// Throws ValidationError when qs is empty or Q_k is identically zero.
  explicit RecurrenceSpec(std::vector<RatPoly> qs);

  int order() const noexcept { return static_cast<int>(qs_.size()); }
  const std::vector<RatPoly>& qs() const noexcept { return qs_; }

 private:
  std::vector<RatPoly> qs_;
};

/// A validated order-2 pair (Q1, Q2) for the reality criterion. Construction
/// rejects Q2 = 0, deg Q1 < 1, a common factor of Q1 and Q2, and
/// Q1^2 = 4 Q2. The discriminant D = Q1^2 - 4 Q2 is cached.
class RecurrencePair {
 public:
  RecurrencePair(RatPoly q1, RatPoly q2);
  /// Requires order 2.
  static RecurrencePair from_spec(const RecurrenceSpec& spec);

  const RatPoly& q1() const noexcept { return q1_; }
  const RatPoly& q2() const noexcept { return q2_; }
  const RatPoly& discriminant() const noexcept { return d_; }
  /// Numerator Q1^2 of f = Q1^2 / Q2.
  const RatPoly& q1_squared() const noexcept { return q1_sq_; }
  RecurrenceSpec spec() const { return RecurrenceSpec({q1_, q2_}); }

  /// Q1^2 - s Q2, whose roots are the preimages f^{-1}(s).
  RatPoly fiber(const Rational& s) const;

 private:
  RatPoly q1_, q2_, q1_sq_, d_;
};

RatPoly discriminant_char(const RecurrencePair& pair);

/// P_0 .. P_n with exact coefficients.
std::vector<RatPoly> generate_sequence(const RecurrenceSpec& spec, int n);

/// Coefficients of t^0 .. t^n in 1 / (1 + Q_1 t + ... + Q_k t^k), computed
/// by Newton iteration on the truncated power series.
std::vector<RatPoly> expand_generating_function(const RecurrenceSpec& spec, int n);

/// Floating-point P_0 .. P_n (coefficients low to high). For plotting only.
std::vector<std::vector<long double>> generate_sequence_numeric(const RecurrenceSpec& spec, int n);

}  // namespace hrl
