#include "hrl/recurrence.hpp"

#include <algorithm>

#include "hrl/error.hpp"

namespace hrl {

RecurrenceSpec::RecurrenceSpec(std::vector<RatPoly> qs) : qs_(std::move(qs)) {
  if (qs_.empty()) throw ValidationError("a recurrence needs at least one coefficient polynomial");
  if (qs_.back().is_zero()) {
    throw ValidationError("the last coefficient Q_k is identically zero; the recurrence has lower order");
  }
}

RecurrencePair::RecurrencePair(RatPoly q1, RatPoly q2) : q1_(std::move(q1)), q2_(std::move(q2)) {
  if (q2_.is_zero()) throw ValidationError("Q2 is identically zero");
  if (q1_.degree() < 1) throw ValidationError("Q1 must have degree at least 1");
  if (gcd(q1_, q2_).degree() > 0) {
    throw ValidationError("Q1 and Q2 must be coprime: a common zero would be a zero of every P_i");
  }
  q1_sq_ = q1_ * q1_;
  d_ = q1_sq_ - Rational(4) * q2_;
  if (d_.is_zero()) throw ValidationError("Q1^2 = 4 Q2: the characteristic roots coincide everywhere");
}

RecurrencePair RecurrencePair::from_spec(const RecurrenceSpec& spec) {
  if (spec.order() != 2) {
    throw ValidationError("the reality criterion needs a three-term recurrence (k = 2), got k = " +
                          std::to_string(spec.order()));
  }
  return RecurrencePair(spec.qs()[0], spec.qs()[1]);
}

RatPoly RecurrencePair::fiber(const Rational& s) const { return q1_sq_ - s * q2_; }

RatPoly discriminant_char(const RecurrencePair& pair) { return discriminant_char(pair.q1(), pair.q2()); }

std::vector<RatPoly> generate_sequence(const RecurrenceSpec& spec, int n) {
  if (n < 0) throw InvalidInput("sequence length must be nonnegative");
  std::vector<RatPoly> ps;
  ps.reserve(static_cast<std::size_t>(n) + 1);
  ps.push_back(RatPoly::constant(Rational(1)));
  for (int i = 1; i <= n; ++i) {
    RatPoly acc;
    for (int j = 1; j <= spec.order() && j <= i; ++j) {
      acc += spec.qs()[static_cast<std::size_t>(j - 1)] * ps[static_cast<std::size_t>(i - j)];
    }
    ps.push_back(-acc);
  }
  return ps;
}

namespace {

using Series = std::vector<RatPoly>;

Series mul_trunc(const Series& a, const Series& b, std::size_t len) {
  Series out(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

std::vector<RatPoly> expand_generating_function(const RecurrenceSpec& spec, int n) {
  if (n < 0) throw InvalidInput("series order must be nonnegative");
  const std::size_t want = static_cast<std::size_t>(n) + 1;
  Series denom(1, RatPoly::constant(Rational(1)));
  for (const auto& q : spec.qs()) denom.push_back(q);

  // B <- B (2 - A B), doubling the number of correct terms each step.
  Series inv(1, RatPoly::constant(Rational(1)));
  std::size_t have = 1;
  while (have < want) {
    std::size_t len = std::min(2 * have, want);
    Series ab = mul_trunc(denom, inv, len);
    Series two_minus(len);
    for (std::size_t i = 0; i < len; ++i) two_minus[i] = -ab[i];
    two_minus[0] += RatPoly::constant(Rational(2));
    inv = mul_trunc(inv, two_minus, len);
    have = len;
  }
  inv.resize(want);
  return inv;
}

std::vector<std::vector<long double>> generate_sequence_numeric(const RecurrenceSpec& spec, int n) {
  if (n < 0) throw InvalidInput("sequence length must be nonnegative");
  std::vector<std::vector<long double>> qs;
  for (const auto& q : spec.qs()) qs.push_back(q.to_long_doubles());
  std::vector<std::vector<long double>> ps{{1.0L}};
  for (int i = 1; i <= n; ++i) {
    std::vector<long double> acc;
    for (int j = 1; j <= spec.order() && j <= i; ++j) {
      const auto& q = qs[static_cast<std::size_t>(j - 1)];
      const auto& p = ps[static_cast<std::size_t>(i - j)];
      if (q.empty() || p.empty()) continue;
      if (acc.size() < q.size() + p.size() - 1) acc.resize(q.size() + p.size() - 1, 0.0L);
      for (std::size_t a = 0; a < q.size(); ++a) {
        for (std::size_t b = 0; b < p.size(); ++b) acc[a + b] -= q[a] * p[b];
      }
    }
    while (!acc.empty() && acc.back() == 0.0L) acc.pop_back();
    ps.push_back(std::move(acc));
  }
  return ps;
}

}  // namespace hrl
