#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrl/ratpoly.hpp"

namespace hrl {

/// A rational or one of the two infinities; used as a Sturm interval endpoint.
class ExtRational {
 public:
  enum class Kind { kNegInf, kFinite, kPosInf };

  ExtRational(const Rational& v) : kind_(Kind::kFinite), value_(v) {}  // NOLINT(implicit)
  static ExtRational neg_inf() { return ExtRational(Kind::kNegInf); }
  static ExtRational pos_inf() { return ExtRational(Kind::kPosInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::kFinite; }
  const Rational& value() const { return value_; }

  friend bool operator<(const ExtRational& a, const ExtRational& b);

 private:
  explicit ExtRational(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
};

/// Sign of p at an extended rational (limits at the infinities).
int sign_at(const RatPoly& p, const ExtRational& x);

/// Sturm chain p, p', -rem(...), ... of a squarefree polynomial. Each member
/// is scaled by a positive constant to integer primitive form, which leaves
/// every sign variation count unchanged.
class SturmSequence {
 public:
  /// Throws ContractViolation when p is not squarefree and InvalidInput on
  /// the zero polynomial.
  explicit SturmSequence(const RatPoly& p);

  const std::vector<RatPoly>& chain() const noexcept { return chain_; }
  int variations(const ExtRational& x) const;
  /// Number of distinct real roots in (lo, hi]; requires lo < hi.
  int count(const ExtRational& lo, const ExtRational& hi) const;
  int count_all() const { return count(ExtRational::neg_inf(), ExtRational::pos_inf()); }

 private:
  std::vector<RatPoly> chain_;
};

/// Real roots of a squarefree p in (lo, hi].
int sturm_count(const RatPoly& p, const ExtRational& lo, const ExtRational& hi);

/// A real algebraic number: the unique root of a squarefree defining
/// polynomial inside an isolating interval. Either lo == hi and the value is
/// that rational, or lo < hi, neither endpoint is a root, and exactly one root
/// lies in the open interval. Values are immutable; refine() returns a new one.
class AlgebraicNumber {
 public:
  AlgebraicNumber(RatPoly defining, Rational lo, Rational hi);
  static AlgebraicNumber from_rational(const Rational& v);

  const RatPoly& defining() const noexcept { return defining_; }
  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  bool is_rational() const { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }

  /// Halves the interval, or collapses it when the midpoint is the root.
  AlgebraicNumber refine() const;
  AlgebraicNumber refine_to(const Rational& max_width) const;

  /// Midpoint after refining to the given width.
  double approximate(double max_width = 1e-10) const;
  /// The double nearest the value.
  double to_double() const;

  /// Human readable: "5", or "root of x^2-5 in (2, 3)".
  std::string describe() const;

 private:
  RatPoly defining_;
  Rational lo_, hi_;
};

/// Distinct real roots of p, ascending, with pairwise disjoint isolating
/// intervals. Starts from the Cauchy bound and bisects with Sturm counts.
std::vector<AlgebraicNumber> isolate_real_roots(const RatPoly& p);

/// The same number with its defining polynomial replaced by a proper rational
/// factor of least degree found, made primitive with a positive leading
/// coefficient. Candidate factors come from products of numerically computed
/// roots and are accepted only after exact division; a linear factor turns
/// the number rational. Returns a unchanged when nothing smaller is found.
AlgebraicNumber reduce_defining(const AlgebraicNumber& a);

/// Exact sign of p at the number a encodes.
int sign_at(const RatPoly& p, const AlgebraicNumber& a);

/// -1, 0, +1 ordering of two real algebraic numbers; exact.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
int compare(const AlgebraicNumber& a, const Rational& r);

}  // namespace hrl
