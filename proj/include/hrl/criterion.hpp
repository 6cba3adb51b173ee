#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hrl/real_roots.hpp"
#include "hrl/recurrence.hpp"

namespace hrl {

enum class ConditionId { kA, kB, kC, kD, kE };
enum class Status { kPass, kFail, kNumericOnlyPass };

char condition_letter(ConditionId id);
std::string status_name(Status s);
inline bool is_passing(Status s) { return s != Status::kFail; }

/// A real critical point of f = Q1^2 / Q2, or the point at infinity.
struct CriticalPoint {
  /// Empty for the point at infinity.
  std::optional<AlgebraicNumber> point;
  /// Order of the zero of f' there (multiplicity as a root of W(Q1^2, Q2)).
  int order = 1;
  int q1_sign = 0;
  int q2_sign = 0;
  int d_sign = 0;
  /// Exact f-value when it is rational (always for the point at infinity).
  std::optional<Rational> exact_value;
  /// Display-only estimates; infinite at poles and at infinity.
  double x_estimate = 0.0;
  double value_estimate = 0.0;
  bool value_in_open_0_4 = false;
};

/// One exact sample s of the fiber family Q1^2 - s Q2.
struct FiberSample {
  Rational s;
  int degree = 0;
  int squarefree_degree = 0;
  int real_roots = 0;  // distinct
  bool all_real() const { return real_roots == squarefree_degree; }
};

struct Witness {
  enum class Kind {
    kRepeatedFactor,  // a polynomial with a multiple root
    kSturmDeficit,    // a polynomial with fewer real roots than its degree
    kAlgebraicPoint,  // an exact real point (critical point, zero of Q1)
    kRationalSample,  // a sweep sample s whose fiber is not real-rooted
    kRealFiber,       // a value s whose whole preimage is real
    kCurvePoint,      // a traced point on a curve component
  };
  Kind kind = Kind::kAlgebraicPoint;
  std::string text;
  std::optional<AlgebraicNumber> point;
  std::optional<Rational> sample;
  /// The fiber value is infinity (preimages are the zeros of Q2).
  bool sample_is_infinity = false;
  std::optional<RatPoly> polynomial;
  int real_roots = 0;
  int expected_roots = 0;
  std::optional<int> sign;
  std::optional<Rational> exact_value;
  std::optional<double> point_estimate;
  std::optional<double> value_estimate;
  std::optional<std::complex<double>> curve_point;
};

struct ConditionReport {
  ConditionId id = ConditionId::kA;
  Status status = Status::kPass;
  std::optional<Witness> witness;
  std::string summary;
  std::vector<std::string> notes;
  /// Real zeros relevant to the condition (Q1 for A and E, D for C).
  std::vector<AlgebraicNumber> roots;
  std::vector<CriticalPoint> critical_points;
  std::vector<FiberSample> samples;
  /// For B: which of the other conditions also fail.
  std::vector<ConditionId> cross_links;
  std::string method;
};

/// Closed real interval; an empty endpoint means infinite.
struct SupportInterval {
  std::optional<AlgebraicNumber> lo;
  std::optional<AlgebraicNumber> hi;
};

struct Verdict {
  std::vector<ConditionReport> reports;  // A, B, C, D, E
  Status overall = Status::kFail;
  std::vector<SupportInterval> support;
  const ConditionReport& report(ConditionId id) const;
};

/// Objects every check needs, computed once per pair and immutable after.
class CriterionContext {
 public:
  explicit CriterionContext(RecurrencePair pair);

  const RecurrencePair& pair() const noexcept { return pair_; }
  /// W(Q1^2, Q2); its zeros are the finite critical points of f.
  const RatPoly& wronskian() const noexcept { return w_; }
  const std::vector<AlgebraicNumber>& q1_roots() const noexcept { return q1_roots_; }
  const std::vector<AlgebraicNumber>& q2_roots() const noexcept { return q2_roots_; }
  const std::vector<AlgebraicNumber>& d_roots() const noexcept { return d_roots_; }
  /// Real finite critical points ascending, then infinity when critical.
  const std::vector<CriticalPoint>& critical_points() const noexcept { return critical_; }
  /// Order of infinity as a critical point: 2 deg f - 2 - deg W.
  int order_at_infinity() const noexcept { return order_at_infinity_; }

 private:
  RecurrencePair pair_;
  RatPoly w_;
  std::vector<AlgebraicNumber> q1_roots_, q2_roots_, d_roots_;
  std::vector<CriticalPoint> critical_;
  int order_at_infinity_ = 0;
};

enum class SweepMode { kCertified, kNumeric };

ConditionReport check_a(const CriterionContext& ctx);
ConditionReport check_b(const CriterionContext& ctx, SweepMode mode = SweepMode::kCertified);
ConditionReport check_c(const CriterionContext& ctx);
ConditionReport check_d(const CriterionContext& ctx);
ConditionReport check_e(const CriterionContext& ctx);

/// Certified hyperbolicity sweep of Q1^2 - s Q2 over s in (0, 4): one exact
/// sample between consecutive cut points (real critical values and the value
/// where the degree drops). `unresolved` is set when two distinct critical
/// values could not be separated or complex seeding failed to converge.
struct SweepResult {
  std::vector<FiberSample> samples;
  std::vector<Rational> cut_points;
  bool unresolved = false;
  std::vector<std::string> notes;
};
SweepResult hyperbolicity_sweep(const CriterionContext& ctx);

/// Sturm census of one fiber.
FiberSample sample_fiber(const RecurrencePair& pair, const Rational& s);

Verdict full_verdict(const RecurrencePair& pair);

/// {x real : 0 <= f(x) <= 4} as maximal closed intervals. Throws
/// ContractViolation unless the pair's verdict passes.
std::vector<SupportInterval> support_intervals(const RecurrencePair& pair);

}  // namespace hrl
