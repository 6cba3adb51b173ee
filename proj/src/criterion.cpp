#include "hrl/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hrl/curve_tracer.hpp"
#include "hrl/error.hpp"
#include "hrl/numeric_roots.hpp"
#include "hrl/parallel.hpp"

namespace hrl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Interval {
  Rational lo, hi;
};

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Interval out{p[0], p[0]};
  for (const auto& v : p) {
    if (v < out.lo) out.lo = v;
    if (v > out.hi) out.hi = v;
  }
  return out;
}

Interval eval(const RatPoly& p, const Interval& x) {
  Interval acc{Rational(0), Rational(0)};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + Interval{*it, *it};
  return acc;
}

// Enclosure of f(x) = Q1(x)^2 / Q2(x) on the isolating interval of x, for a
// point where Q2 > 0. Returns nothing while Q2's enclosure still meets zero.
std::optional<Interval> value_enclosure(const RecurrencePair& pair, const AlgebraicNumber& x) {
  Interval xi{x.lo(), x.hi()};
  Interval num = eval(pair.q1_squared(), xi);
  Interval den = eval(pair.q2(), xi);
  if (sgn(den.lo) <= 0) return std::nullopt;
  if (sgn(num.lo) < 0) num.lo = 0;
  return Interval{num.lo / den.hi, num.hi / den.lo};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

bool simpler(const Rational& a, const Rational& b) {
  int c = cmp(a.get_den(), b.get_den());
  if (c != 0) return c < 0;
  return cmp(abs(a.get_num()), abs(b.get_num())) < 0;
}

Status combine(std::initializer_list<Status> all) {
  Status out = Status::kPass;
  for (Status s : all) {
    if (s == Status::kFail) return Status::kFail;
    if (s == Status::kNumericOnlyPass) out = Status::kNumericOnlyPass;
  }
  return out;
}

}  // namespace

char condition_letter(ConditionId id) {
  switch (id) {
    case ConditionId::kA: return 'A';
    case ConditionId::kB: return 'B';
    case ConditionId::kC: return 'C';
    case ConditionId::kD: return 'D';
    case ConditionId::kE: return 'E';
  }
  return '?';
}

std::string status_name(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kNumericOnlyPass: return "numeric-only-pass";
  }
  return "?";
}

const ConditionReport& Verdict::report(ConditionId id) const {
  for (const auto& r : reports) {
    if (r.id == id) return r;
  }
  throw InvalidInput(std::string("verdict has no report for condition ") + condition_letter(id));
}

CriterionContext::CriterionContext(RecurrencePair pair) : pair_(std::move(pair)) {
  const RatPoly& q1 = pair_.q1();
  const RatPoly& q2 = pair_.q2();
  const RatPoly& d = pair_.discriminant();
  w_ = hrl::wronskian(pair_.q1_squared(), q2);
  auto reduced_roots = [](const RatPoly& p) {
    std::vector<AlgebraicNumber> roots;
    if (p.degree() < 1) return roots;
    for (const auto& r : isolate_real_roots(p)) roots.push_back(reduce_defining(r));
    return roots;
  };
  q1_roots_ = reduced_roots(q1);
  q2_roots_ = reduced_roots(q2);
  d_roots_ = reduced_roots(d);

  if (w_.degree() >= 1) {
    const auto factors = squarefree_factorization(w_);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() < 1) continue;
      for (auto& x : isolate_real_roots(factors[i])) {
        CriticalPoint cp;
        cp.point = reduce_defining(x);
        cp.order = static_cast<int>(i) + 1;
        critical_.push_back(std::move(cp));
      }
    }
    std::sort(critical_.begin(), critical_.end(),
              [](const CriticalPoint& a, const CriticalPoint& b) { return compare(*a.point, *b.point) < 0; });
  }
  for (auto& cp : critical_) {
    const AlgebraicNumber& x = *cp.point;
    cp.q1_sign = sign_at(q1, x);
    cp.q2_sign = sign_at(q2, x);
    cp.d_sign = sign_at(d, x);
    // f(x) in (0, 4): f > 0 forces Q2 > 0 and Q1 != 0; then f < 4 iff D < 0.
    cp.value_in_open_0_4 = cp.q2_sign > 0 && cp.q1_sign != 0 && cp.d_sign < 0;
    cp.x_estimate = x.to_double();
    if (cp.q2_sign == 0) {
      cp.value_estimate = kInf;
      continue;
    }
    if (cp.q1_sign == 0) {
      cp.exact_value = Rational(0);
      cp.value_estimate = 0.0;
    } else if (x.is_rational()) {
      cp.exact_value = pair_.q1_squared()(x.lo()) / q2(x.lo());
      cp.value_estimate = to_double(*cp.exact_value);
    } else {
      AlgebraicNumber fine = x.refine_to(Rational(Integer(1), Integer(1) << 64));
      Rational mid = (fine.lo() + fine.hi()) / 2;
      cp.value_estimate = to_double(pair_.q1_squared()(mid) / q2(mid));
    }
  }

  const int d1 = q1.degree();
  const int d2 = q2.degree();
  const int deg_f = std::max(2 * d1, d2);
  order_at_infinity_ = 2 * deg_f - 2 - w_.degree();
  if (order_at_infinity_ > 0) {
    CriticalPoint cp;
    cp.order = order_at_infinity_;
    cp.x_estimate = kInf;
    cp.q1_sign = sgn(q1.leading());
    cp.q2_sign = sgn(q2.leading());
    cp.d_sign = sgn(d.leading());
    if (2 * d1 > d2) {
      cp.value_estimate = kInf;
    } else if (2 * d1 < d2) {
      cp.exact_value = Rational(0);
    } else {
      cp.exact_value = q1.leading() * q1.leading() / q2.leading();
    }
    if (cp.exact_value) {
      cp.value_estimate = to_double(*cp.exact_value);
      cp.value_in_open_0_4 = sgn(*cp.exact_value) > 0 && *cp.exact_value < 4;
    }
    critical_.push_back(std::move(cp));
  }
}

ConditionReport check_a(const CriterionContext& ctx) {
  ConditionReport r;
  r.id = ConditionId::kA;
  r.method = "sturm";
  const RatPoly& q1 = ctx.pair().q1();
  r.roots = ctx.q1_roots();
  const RatPoly g = gcd(q1, q1.derivative());
  if (g.degree() > 0) {
    r.status = Status::kFail;
    Witness w;
    w.kind = Witness::Kind::kRepeatedFactor;
    w.polynomial = g;
    w.text = "Q1 has the repeated factor " + to_string(g);
    r.witness = w;
    r.summary = "Q1 has a multiple zero";
    return r;
  }
  const int real = static_cast<int>(ctx.q1_roots().size());
  if (real < q1.degree()) {
    r.status = Status::kFail;
    Witness w;
    w.kind = Witness::Kind::kSturmDeficit;
    w.polynomial = q1;
    w.real_roots = real;
    w.expected_roots = q1.degree();
    w.text = "Q1 has " + std::to_string(real) + " real zeros of " + std::to_string(q1.degree());
    r.witness = w;
    r.summary = "Q1 has non-real zeros";
    return r;
  }
  r.status = Status::kPass;
  r.summary = "Q1 has " + std::to_string(real) + " real simple zeros";
  return r;
}

ConditionReport check_c(const CriterionContext& ctx) {
  ConditionReport r;
  r.id = ConditionId::kC;
  r.method = "sturm";
  r.roots = ctx.d_roots();
  const RatPoly& d = ctx.pair().discriminant();
  const int expected = squarefree_part(d).degree();
  const int real = static_cast<int>(ctx.d_roots().size());
  if (real < expected) {
    r.status = Status::kFail;
    Witness w;
    w.kind = Witness::Kind::kSturmDeficit;
    w.polynomial = d;
    w.real_roots = real;
    w.expected_roots = expected;
    w.text = "D = " + to_string(d) + " has " + std::to_string(real) + " real zeros of " +
             std::to_string(expected) + " distinct";
    r.witness = w;
    r.summary = "the discriminant has non-real zeros";
    return r;
  }
  r.status = Status::kPass;
  r.summary = "all " + std::to_string(real) + " distinct zeros of D are real";
  return r;
}

ConditionReport check_d(const CriterionContext& ctx) {
  ConditionReport r;
  r.id = ConditionId::kD;
  r.method = "wronskian-signs";
  r.critical_points = ctx.critical_points();
  r.status = Status::kPass;
  for (const auto& cp : ctx.critical_points()) {
    if (!cp.value_in_open_0_4) continue;
    r.status = Status::kFail;
    Witness w;
    w.kind = Witness::Kind::kAlgebraicPoint;
    w.point = cp.point;
    w.exact_value = cp.exact_value;
    w.point_estimate = cp.x_estimate;
    w.value_estimate = cp.value_estimate;
    if (cp.point) {
      w.text = "critical point x ~ " + fmt(cp.x_estimate) + " (" + cp.point->describe() + ") has f(x) ~ " +
               fmt(cp.value_estimate) + " in (0,4)";
    } else {
      w.text = "infinity is a critical point with f = " + to_string(*cp.exact_value) + " in (0,4)";
    }
    r.witness = w;
    r.summary = "f has a real critical value in (0,4)";
    return r;
  }
  r.summary = "no real critical value of f lies in (0,4)";
  return r;
}

ConditionReport check_e(const CriterionContext& ctx) {
  ConditionReport r;
  r.id = ConditionId::kE;
  r.method = "exact-sign";
  r.roots = ctx.q1_roots();
  r.status = Status::kPass;
  const RatPoly& q2 = ctx.pair().q2();
  for (const auto& alpha : ctx.q1_roots()) {
    const int s = sign_at(q2, alpha);
    if (s > 0) continue;
    std::optional<Rational> value;
    if (alpha.is_rational()) value = q2(alpha.lo());
    std::string shown = value ? to_string(*value) : (s == 0 ? "0" : "negative");
    if (r.status == Status::kPass) {
      Witness w;
      w.kind = Witness::Kind::kAlgebraicPoint;
      w.point = alpha;
      w.sign = s;
      w.exact_value = value;
      w.point_estimate = alpha.to_double();
      w.text = "Q1(" + alpha.describe() + ") = 0 but Q2 there is " + shown;
      r.witness = w;
    } else {
      r.notes.push_back("also Q2(" + alpha.describe() + ") = " + shown);
    }
    r.status = Status::kFail;
  }
  r.summary = r.status == Status::kPass ? "Q2 is positive at every real zero of Q1"
                                        : "Q2 is not positive at a zero of Q1";
  if (r.status == Status::kPass) {
    r.notes.push_back("tested as Q2 > 0: coprimality rules out Q2 = 0 at a zero of Q1");
  }
  return r;
}

FiberSample sample_fiber(const RecurrencePair& pair, const Rational& s) {
  FiberSample out;
  out.s = s;
  const RatPoly fib = pair.fiber(s);
  out.degree = fib.degree();
  if (fib.degree() < 1) return out;
  const RatPoly sqf = squarefree_part(fib);
  out.squarefree_degree = sqf.degree();
  out.real_roots = SturmSequence(sqf).count_all();
  return out;
}

SweepResult hyperbolicity_sweep(const CriterionContext& ctx) {
  const RecurrencePair& pair = ctx.pair();
  SweepResult out;

  struct Cut {
    std::optional<AlgebraicNumber> x;
    Interval iv;
  };
  std::vector<Cut> cuts;
  const Rational zero(0), four(4);
  auto inside = [&](const Interval& iv) { return iv.lo > zero && iv.hi < four; };

  for (const auto& cp : ctx.critical_points()) {
    if (!cp.value_in_open_0_4) continue;
    if (cp.exact_value) {
      cuts.push_back({std::nullopt, {*cp.exact_value, *cp.exact_value}});
      continue;
    }
    AlgebraicNumber x = *cp.point;
    const Rational target(Integer(1), Integer(1) << 24);
    std::optional<Interval> iv = value_enclosure(pair, x);
    while (!iv || !inside(*iv) || iv->hi - iv->lo > target) {
      x = x.refine();
      iv = value_enclosure(pair, x);
    }
    cuts.push_back({x, *iv});
  }
  if (pair.q2().degree() == 2 * pair.q1().degree()) {
    Rational s = pair.q1().leading() * pair.q1().leading() / pair.q2().leading();
    if (s > zero && s < four) cuts.push_back({std::nullopt, {s, s}});
  }

  // Separate enclosures that overlap by refining their critical points.
  auto overlaps = [](const Interval& a, const Interval& b) { return !(a.hi < b.lo || b.hi < a.lo); };
  const Rational finest(Integer(1), Integer(1) << 128);
  for (int round = 0; round < 64; ++round) {
    bool any = false;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      for (std::size_t j = i + 1; j < cuts.size(); ++j) {
        if (!overlaps(cuts[i].iv, cuts[j].iv)) continue;
        for (std::size_t k : {i, j}) {
          if (!cuts[k].x || cuts[k].iv.hi - cuts[k].iv.lo <= finest) continue;
          for (int step = 0; step < 4; ++step) cuts[k].x = cuts[k].x->refine();
          if (auto iv = value_enclosure(pair, *cuts[k].x)) cuts[k].iv = *iv;
          any = true;
        }
      }
    }
    if (!any) break;
  }
  std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) { return a.iv.lo < b.iv.lo; });
  std::vector<Interval> merged;
  for (const auto& c : cuts) {
    if (!merged.empty() && !(merged.back().hi < c.iv.lo)) {
      const bool both_points = merged.back().lo == merged.back().hi && c.iv.lo == c.iv.hi;
      if (!both_points) {
        out.unresolved = true;
        out.notes.push_back("two real critical values could not be separated below width 2^-128");
      }
      if (c.iv.hi > merged.back().hi) merged.back().hi = c.iv.hi;
    } else {
      merged.push_back(c.iv);
    }
  }

  // Extra cut points at real values taken by f at non-real critical points.
  if (ctx.wronskian().degree() >= 1) {
    const ComplexRootSet crit = all_complex_roots(ctx.wronskian());
    if (!crit.converged) {
      out.unresolved = true;
      out.notes.push_back("complex critical points did not converge; sweep cut points may be incomplete");
    }
    for (const auto& z : crit.roots) {
      if (std::fabs(z.imag()) < 1e-8) continue;
      const std::complex<long double> zl(z.real(), z.imag());
      const std::complex<long double> v = pair.q1_squared().eval(zl) / pair.q2().eval(zl);
      if (!(std::fabs(v.imag()) <= 1e-9L * std::max(1.0L, std::abs(v)))) continue;
      if (!(v.real() > 0.0L && v.real() < 4.0L)) continue;
      const Rational seed = rational_from_double(static_cast<double>(v.real()));
      bool covered = false;
      for (const auto& m : merged) covered = covered || (m.lo <= seed && seed <= m.hi);
      if (!covered) {
        merged.push_back({seed, seed});
        std::sort(merged.begin(), merged.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
      }
    }
  }

  Rational left = zero;
  for (const auto& m : merged) {
    out.cut_points.push_back((m.lo + m.hi) / 2);
    out.samples.push_back(sample_fiber(pair, simplest_between(left, m.lo)));
    left = m.hi;
  }
  out.samples.push_back(sample_fiber(pair, simplest_between(left, four)));
  return out;
}

namespace {

// A value s whose entire preimage under f is real: any oval of the curve
// Im f = 0 that avoids the real line maps onto all of RP^1, so it would
// carry a non-real preimage of s.
std::optional<Witness> find_real_fiber(const CriterionContext& ctx, const SweepResult& sweep) {
  const RecurrencePair& pair = ctx.pair();
  std::vector<Rational> candidates{Rational(4), Rational(0)};
  for (const auto& s : sweep.samples) candidates.push_back(s.s);
  std::vector<double> outside;
  for (const auto& cp : ctx.critical_points()) {
    if (std::isfinite(cp.value_estimate) && (cp.value_estimate < 0.0 || cp.value_estimate > 4.0)) {
      outside.push_back(cp.value_estimate);
    }
  }
  outside.push_back(0.0);
  outside.push_back(4.0);
  std::sort(outside.begin(), outside.end());
  outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
  candidates.push_back(simplest_between(rational_from_double(outside.back()), std::nullopt));
  candidates.push_back(-simplest_between(-rational_from_double(outside.front()), std::nullopt));
  for (std::size_t i = 0; i + 1 < outside.size(); ++i) {
    if (outside[i] >= 0.0 && outside[i + 1] <= 4.0) continue;
    candidates.push_back(simplest_between(rational_from_double(outside[i]), rational_from_double(outside[i + 1])));
  }
  for (const auto& s : candidates) {
    FiberSample fs = sample_fiber(pair, s);
    if (fs.degree >= 1 && !fs.all_real()) continue;
    Witness w;
    w.kind = Witness::Kind::kRealFiber;
    w.sample = s;
    w.polynomial = pair.fiber(s);
    w.real_roots = fs.real_roots;
    w.expected_roots = fs.squarefree_degree;
    w.text = "every preimage of s = " + to_string(s) + " is real, so no oval avoids the real line";
    return w;
  }
  const RatPoly& q2 = pair.q2();
  if (q2.degree() < 1 || SturmSequence(squarefree_part(q2)).count_all() == squarefree_part(q2).degree()) {
    Witness w;
    w.kind = Witness::Kind::kRealFiber;
    w.sample_is_infinity = true;
    w.polynomial = q2;
    w.text = "every pole of f is real, so no oval avoids the real line";
    return w;
  }
  return std::nullopt;
}

ConditionReport check_b_numeric(const CriterionContext& ctx) {
  ConditionReport r;
  r.id = ConditionId::kB;
  r.method = "curve-trace";
  CurveTrace trace = trace_gamma_tilde(ctx.pair(), default_window(ctx.pair()));
  std::vector<double> crit;
  for (const auto& cp : ctx.critical_points()) {
    if (cp.point) crit.push_back(cp.x_estimate);
  }
  classify(trace, crit);
  r.notes = trace.warnings;
  for (const auto& comp : trace.components) {
    if (comp.classification != Classification::kDisjointOval) continue;
    r.status = Status::kFail;
    auto top = std::max_element(comp.points.begin(), comp.points.end(),
                                [](const auto& a, const auto& b) { return std::fabs(a.imag()) < std::fabs(b.imag()); });
    Witness w;
    w.kind = Witness::Kind::kCurvePoint;
    w.curve_point = *top;
    w.text = "traced oval through " + fmt(top->real()) + (top->imag() < 0 ? " - " : " + ") +
             fmt(std::fabs(top->imag())) + "i never meets the real axis";
    r.witness = w;
    r.summary = "a traced oval of Im f = 0 is disjoint from the real line";
    return r;
  }
  r.status = Status::kPass;
  r.summary = "no traced oval of Im f = 0 avoids the real line";
  return r;
}

}  // namespace

ConditionReport check_b(const CriterionContext& ctx, SweepMode mode) {
  if (mode == SweepMode::kNumeric) return check_b_numeric(ctx);
  ConditionReport r;
  r.id = ConditionId::kB;
  r.method = "sweep";
  SweepResult sweep = hyperbolicity_sweep(ctx);
  r.samples = sweep.samples;
  r.notes = sweep.notes;

  std::optional<Rational> worst;
  const FiberSample* worst_sample = nullptr;
  for (const auto& s : sweep.samples) {
    if (s.all_real()) continue;
    if (!worst || simpler(s.s, *worst)) {
      worst = s.s;
      worst_sample = &s;
    }
  }
  if (!worst) {
    r.status = sweep.unresolved ? Status::kNumericOnlyPass : Status::kPass;
    r.summary = "Q1^2 - s Q2 is real-rooted at every sample s in (0,4)";
    return r;
  }

  for (const auto& other : {check_a(ctx), check_c(ctx), check_d(ctx), check_e(ctx)}) {
    if (other.status == Status::kFail) r.cross_links.push_back(other.id);
  }
  Witness deficit;
  deficit.kind = Witness::Kind::kRationalSample;
  deficit.sample = *worst;
  deficit.polynomial = ctx.pair().fiber(*worst);
  deficit.real_roots = worst_sample->real_roots;
  deficit.expected_roots = worst_sample->squarefree_degree;
  deficit.text = "Q1^2 - (" + to_string(*worst) + ") Q2 has " + std::to_string(worst_sample->real_roots) +
                 " real zeros of " + std::to_string(worst_sample->squarefree_degree) + " distinct";
  std::string links;
  for (ConditionId id : r.cross_links) links += condition_letter(id);
  r.notes.push_back("sweep deficit: " + deficit.text +
                    (links.empty() ? std::string() : "; failing conditions " + links + " also produce non-real points"));

  if (auto fiber = find_real_fiber(ctx, sweep)) {
    r.status = Status::kPass;
    r.method = "sweep+real-fiber";
    r.witness = fiber;
    r.summary = "no oval disjoint from the real line: " + fiber->text;
    return r;
  }
  if (!r.cross_links.empty()) {
    ConditionReport traced = check_b_numeric(ctx);
    r.method = "sweep+curve-trace";
    r.notes.insert(r.notes.end(), traced.notes.begin(), traced.notes.end());
    if (traced.status == Status::kPass) {
      r.status = Status::kNumericOnlyPass;
      r.summary = "sweep deficits are explained by conditions " + links +
                  "; curve tracing found no oval disjoint from the real line";
      r.witness = deficit;
      return r;
    }
    r.notes.push_back(traced.witness->text);
  }
  r.status = Status::kFail;
  r.witness = deficit;
  r.summary = "the fiber family leaves the real line and no real fiber exists";
  return r;
}

namespace {

std::vector<SupportInterval> compute_support(const CriterionContext& ctx) {
  const RecurrencePair& pair = ctx.pair();
  std::vector<AlgebraicNumber> pts;
  for (const auto* list : {&ctx.q1_roots(), &ctx.q2_roots(), &ctx.d_roots()}) {
    pts.insert(pts.end(), list->begin(), list->end());
  }
  // The three zero sets are pairwise disjoint for a coprime pair.
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return compare(a, b) < 0; });

  auto member_at = [&](auto&& sign_of) {
    const int s1 = sign_of(pair.q1());
    if (s1 == 0) return true;
    return sign_of(pair.q2()) > 0 && sign_of(pair.discriminant()) <= 0;
  };
  auto gap_sample = [&](std::size_t i) -> Rational {
    // Rational strictly between pts[i-1] and pts[i] (i may be 0 or size()).
    if (pts.empty()) return Rational(0);
    if (i == 0) return pts.front().lo() - 1;
    if (i == pts.size()) return pts.back().hi() + 1;
    AlgebraicNumber a = pts[i - 1], b = pts[i];
    while (!(a.hi() < b.lo())) {
      if (a.width() >= b.width()) {
        a = a.refine();
      } else {
        b = b.refine();
      }
    }
    // a < a.hi <= mid <= b.lo < b with strictness coming from open intervals
    // or exact endpoints being distinct.
    return (a.hi() + b.lo()) / 2;
  };

  // Elements alternate gap_0, pt_0, gap_1, ..., pt_{m-1}, gap_m.
  const std::size_t m = pts.size();
  std::vector<bool> in(2 * m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    const Rational s = gap_sample(i);
    in[2 * i] = member_at([&](const RatPoly& p) { return sgn(p(s)); });
  }
  for (std::size_t i = 0; i < m; ++i) {
    in[2 * i + 1] = member_at([&](const RatPoly& p) { return sign_at(p, pts[i]); });
  }

  std::vector<SupportInterval> out;
  std::size_t e = 0;
  while (e < in.size()) {
    if (!in[e]) {
      ++e;
      continue;
    }
    std::size_t f = e;
    while (f + 1 < in.size() && in[f + 1]) ++f;
    SupportInterval iv;
    // Gap element 2i is bounded by pts[i-1] and pts[i]; point element 2i+1 is pts[i].
    if (e % 2 == 1) {
      iv.lo = pts[e / 2];
    } else if (e > 0) {
      iv.lo = pts[e / 2 - 1];
    }
    if (f % 2 == 1) {
      iv.hi = pts[f / 2];
    } else if (f / 2 < m) {
      iv.hi = pts[f / 2];
    }
    out.push_back(std::move(iv));
    e = f + 1;
  }
  return out;
}

}  // namespace

Verdict full_verdict(const RecurrencePair& pair) {
  const CriterionContext ctx(pair);
  Verdict v;
  v.reports.resize(5);
  parallel_for(5, [&](std::size_t i) {
    switch (i) {
      case 0: v.reports[0] = check_a(ctx); break;
      case 1: v.reports[1] = check_b(ctx); break;
      case 2: v.reports[2] = check_c(ctx); break;
      case 3: v.reports[3] = check_d(ctx); break;
      default: v.reports[4] = check_e(ctx); break;
    }
  });
  v.overall = combine({v.reports[0].status, v.reports[1].status, v.reports[2].status, v.reports[3].status,
                       v.reports[4].status});
  if (is_passing(v.overall)) v.support = compute_support(ctx);
  return v;
}

std::vector<SupportInterval> support_intervals(const RecurrencePair& pair) {
  Verdict v = full_verdict(pair);
  if (!is_passing(v.overall)) {
    throw ContractViolation("support intervals are defined only for pairs that pass all five conditions");
  }
  return v.support;
}

}  // namespace hrl
