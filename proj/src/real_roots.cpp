#include "hrl/real_roots.hpp"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "hrl/error.hpp"
#include "hrl/numeric_roots.hpp"

namespace hrl {

bool operator<(const ExtRational& a, const ExtRational& b) {
  using K = ExtRational::Kind;
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  return a.kind_ == K::kFinite && a.value_ < b.value_;
}

int sign_at(const RatPoly& p, const ExtRational& x) {
  if (p.is_zero()) return 0;
  switch (x.kind()) {
    case ExtRational::Kind::kFinite:
      return sgn(p(x.value()));
    case ExtRational::Kind::kPosInf:
      return sgn(p.leading());
    case ExtRational::Kind::kNegInf:
      return (p.degree() % 2 == 0 ? 1 : -1) * sgn(p.leading());
  }
  return 0;
}

SturmSequence::SturmSequence(const RatPoly& p) {
  if (p.is_zero()) throw InvalidInput("Sturm sequence of the zero polynomial");
  if (!is_squarefree(p)) {
    throw ContractViolation("Sturm sequence needs a squarefree polynomial; apply squarefree_part first");
  }
  chain_.push_back(primitive_part(p));
  if (p.degree() == 0) return;
  chain_.push_back(primitive_part(p.derivative()));
  while (true) {
    RatPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(primitive_part(-r));
  }
}

int SturmSequence::variations(const ExtRational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain_) {
    int sg = sign_at(s, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

int SturmSequence::count(const ExtRational& lo, const ExtRational& hi) const {
  if (!(lo < hi)) throw InvalidInput("Sturm count needs lo < hi");
  return variations(lo) - variations(hi);
}

int sturm_count(const RatPoly& p, const ExtRational& lo, const ExtRational& hi) {
  return SturmSequence(p).count(lo, hi);
}

AlgebraicNumber::AlgebraicNumber(RatPoly defining, Rational lo, Rational hi)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw InvalidInput("algebraic number interval has lo > hi");
  if (lo_ == hi_) {
    if (sgn(defining_(lo_)) != 0) throw InvalidInput("point interval is not a root of its defining polynomial");
    return;
  }
  if (sgn(defining_(lo_)) == 0 || sgn(defining_(hi_)) == 0) {
    throw InvalidInput("isolating interval endpoint is a root");
  }
  if (sturm_count(defining_, lo_, hi_) != 1) {
    throw InvalidInput("interval does not isolate exactly one root");
  }
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& v) {
  return AlgebraicNumber(RatPoly(std::vector<Rational>{-v, Rational(1)}), v, v);
}

AlgebraicNumber AlgebraicNumber::refine() const {
  if (is_rational()) return *this;
  AlgebraicNumber out = *this;
  Rational mid = (lo_ + hi_) / 2;
  int sm = sgn(defining_(mid));
  if (sm == 0) {
    out.lo_ = mid;
    out.hi_ = mid;
  } else if (sm != sgn(defining_(lo_))) {
    out.hi_ = mid;
  } else {
    out.lo_ = mid;
  }
  return out;
}

AlgebraicNumber AlgebraicNumber::refine_to(const Rational& max_width) const {
  AlgebraicNumber a = *this;
  while (a.width() > max_width) a = a.refine();
  return a;
}

double AlgebraicNumber::approximate(double max_width) const {
  AlgebraicNumber a = refine_to(rational_from_double(max_width));
  return hrl::to_double((a.lo_ + a.hi_) / 2);
}

double AlgebraicNumber::to_double() const {
  // Correctly rounded once both endpoints round to the same double.
  AlgebraicNumber a = *this;
  for (int step = 0; step < 4096 && !a.is_rational(); ++step) {
    if (hrl::to_double(a.lo_) == hrl::to_double(a.hi_)) break;
    a = a.refine();
  }
  return hrl::to_double((a.lo_ + a.hi_) / 2);
}

std::string AlgebraicNumber::describe() const {
  if (is_rational()) return to_string(lo_);
  return "root of " + to_string(defining_) + " in (" + to_string(lo_) + ", " + to_string(hi_) + ")";
}

std::vector<AlgebraicNumber> isolate_real_roots(const RatPoly& p) {
  if (p.is_zero()) throw InvalidInput("isolate_real_roots of the zero polynomial");
  std::vector<AlgebraicNumber> out;
  if (p.degree() == 0) return out;
  const RatPoly q = primitive_part(squarefree_part(p));
  const SturmSequence seq(q);
  const Rational bound = cauchy_bound(q);

  auto emit = [&](Rational a, Rational b) {
    while (true) {
      if (sgn(q(b)) == 0) {
        out.emplace_back(AlgebraicNumber::from_rational(b));
        return;
      }
      if (sgn(q(a)) != 0) {
        out.push_back(AlgebraicNumber(q, a, b));
        return;
      }
      Rational m = (a + b) / 2;
      if (seq.count(a, m) == 1) {
        b = m;
      } else {
        a = m;
      }
    }
  };

  struct Task {
    Rational lo, hi;
    int roots;
  };
  std::vector<Task> stack{{-bound, bound, seq.count(Rational(-bound), Rational(bound))}};
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    if (t.roots == 0) continue;
    if (t.roots == 1) {
      emit(t.lo, t.hi);
      continue;
    }
    Rational mid = (t.lo + t.hi) / 2;
    int left = seq.count(t.lo, mid);
    // Right half pushed first so the left half is handled first.
    stack.push_back({mid, t.hi, t.roots - left});
    stack.push_back({t.lo, mid, left});
  }
  return out;
}

namespace {

RatPoly normalized(const RatPoly& p) {
  RatPoly q = primitive_part(p);
  return sgn(q.leading()) < 0 ? q * Rational(-1) : q;
}

// Exact factor of p built from the roots listed in `pick`, or nothing when
// the rounded product does not divide p.
std::optional<RatPoly> factor_from_roots(const RatPoly& p, const std::vector<std::complex<long double>>& roots,
                                         const std::vector<int>& pick) {
  std::vector<std::complex<long double>> prod{1.0L};
  for (int i : pick) {
    prod.push_back(0.0L);
    for (std::size_t j = prod.size() - 1; j > 0; --j) prod[j] = prod[j - 1] - roots[i] * prod[j];
    prod[0] = -roots[i] * prod[0];
  }
  // Denominators of a monic rational factor of an integer polynomial divide
  // its leading coefficient.
  const long double lc = std::fabs(to_long_double(p.leading()));
  std::vector<Rational> coeffs;
  for (int j = static_cast<int>(prod.size()) - 1; j >= 0; --j) {
    const long double v = prod[static_cast<std::size_t>(j)].real() * lc;
    if (!(std::fabs(v) < 1e18L)) return std::nullopt;
    const long double r = std::nearbyint(v);
    if (std::fabs(v - r) > 1e-6L * std::max(1.0L, std::fabs(v))) return std::nullopt;
    coeffs.push_back(Rational(rational_from_long_double(r)) / rational_from_long_double(lc));
  }
  std::vector<Rational> low_to_high(coeffs.rbegin(), coeffs.rend());
  RatPoly g(std::move(low_to_high));
  if (g.degree() < 1 || !divmod(p, g).second.is_zero()) return std::nullopt;
  return g;
}

}  // namespace

AlgebraicNumber reduce_defining(const AlgebraicNumber& a) {
  if (a.is_rational()) return a;
  const RatPoly p = normalized(a.defining());
  const int d = p.degree();
  auto finish = [&](const RatPoly& g) {
    if (g.degree() == 1) return AlgebraicNumber::from_rational(-g.coeff(0) / g.coeff(1));
    return AlgebraicNumber(normalized(g), a.lo(), a.hi());
  };
  if (d <= 1 || d > 16) return finish(p);
  const ComplexRootSet rs = all_complex_roots(p);
  if (!rs.converged || static_cast<int>(rs.roots.size()) != d) return finish(p);
  std::vector<std::complex<long double>> roots(rs.roots.begin(), rs.roots.end());
  const double x = a.approximate(1e-12);
  int home = 0;
  for (int i = 1; i < d; ++i) {
    if (std::abs(rs.roots[static_cast<std::size_t>(i)] - x) < std::abs(rs.roots[static_cast<std::size_t>(home)] - x)) home = i;
  }
  // Subsets containing the home root, by increasing size; capped so that
  // high degrees stay cheap.
  long budget = 20000;
  for (int k = 1; k < d; ++k) {
    std::vector<int> others;
    for (int i = 0; i < d; ++i) {
      if (i != home) others.push_back(i);
    }
    std::vector<int> sel(static_cast<std::size_t>(k - 1));
    for (int i = 0; i < k - 1; ++i) sel[static_cast<std::size_t>(i)] = i;
    while (true) {
      if (--budget < 0) return finish(p);
      std::vector<int> pick{home};
      for (int i : sel) pick.push_back(others[static_cast<std::size_t>(i)]);
      if (auto g = factor_from_roots(p, roots, pick)) return finish(*g);
      // Next combination of k-1 of the d-1 other roots.
      int i = k - 2;
      while (i >= 0 && sel[static_cast<std::size_t>(i)] == d - 1 - (k - 1) + i) --i;
      if (i < 0) break;
      ++sel[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k - 1; ++j) sel[static_cast<std::size_t>(j)] = sel[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return finish(p);
}

int sign_at(const RatPoly& p, const AlgebraicNumber& a) {
  if (p.is_zero()) return 0;
  if (a.is_rational()) return sgn(p(a.lo()));
  const RatPoly g = gcd(p, a.defining());
  if (g.degree() >= 1 && sturm_count(g, a.lo(), a.hi()) >= 1) return 0;
  const SturmSequence seq(squarefree_part(p));
  AlgebraicNumber cur = a;
  while (!cur.is_rational() && seq.count(cur.lo(), cur.hi()) != 0) cur = cur.refine();
  return sgn(p(cur.hi()));
}

int compare(const AlgebraicNumber& a, const Rational& r) {
  if (a.is_rational()) return cmp(a.lo(), r) < 0 ? -1 : (cmp(a.lo(), r) > 0 ? 1 : 0);
  if (r <= a.lo()) return 1;
  if (r >= a.hi()) return -1;
  if (sgn(a.defining()(r)) == 0) return 0;
  AlgebraicNumber cur = a;
  while (!cur.is_rational() && cur.lo() < r && r < cur.hi()) cur = cur.refine();
  return compare(cur, r);
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational()) return -compare(b, a.lo());
  if (b.is_rational()) return compare(a, b.lo());
  const RatPoly g = gcd(a.defining(), b.defining());
  if (g.degree() >= 1) {
    Rational lo = a.lo() > b.lo() ? a.lo() : b.lo();
    Rational hi = a.hi() < b.hi() ? a.hi() : b.hi();
    if (lo < hi && sturm_count(g, lo, hi) >= 1) return 0;
  }
  AlgebraicNumber x = a, y = b;
  while (true) {
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    if (x.is_rational() || y.is_rational()) {
      return x.is_rational() ? -compare(y, x.lo()) : compare(x, y.lo());
    }
    if (x.width() >= y.width()) {
      x = x.refine();
    } else {
      y = y.refine();
    }
  }
}

}  // namespace hrl
