#include "hrl/numeric_roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "hrl/error.hpp"

namespace hrl {

namespace {

using cld = std::complex<long double>;

struct Horner {
  cld value;
  cld deriv;
};

Horner horner(const std::vector<long double>& c, cld z) {
  cld v = c.back();
  cld d = 0.0L;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    d = d * z + v;
    v = v * z + c[i];
  }
  return {v, d};
}

long double backward_error(const std::vector<long double>& c, cld z) {
  long double scale = 0.0L;
  long double az = std::abs(z);
  for (std::size_t i = c.size(); i-- > 0;) scale = scale * az + std::fabs(c[i]);
  if (scale == 0.0L) return 0.0L;
  return std::abs(horner(c, z).value) / scale;
}

// Coefficients of p(2^e y) as long doubles, choosing e so the coefficient
// magnitudes stay inside the long double range.
std::vector<long double> scaled_coefficients(const RatPoly& p, int& exponent) {
  double lo = 1e300, hi = -1e300;
  std::vector<double> logs(p.coeffs().size(), 0.0);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (sgn(p.coeffs()[i]) == 0) continue;
    logs[i] = log2_abs(p.coeffs()[i]);
    lo = std::min(lo, logs[i]);
    hi = std::max(hi, logs[i]);
  }
  exponent = 0;
  if (hi - lo > 996.0) {
    // Geometric-mean root modulus of the end coefficients.
    exponent = static_cast<int>(std::lround((logs.front() - logs.back()) / p.degree()));
  }
  std::vector<long double> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Rational c = p.coeffs()[i];
    if (exponent > 0) {
      c *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(exponent * static_cast<int>(i)));
    } else if (exponent < 0) {
      c /= Rational(Integer(1) << static_cast<mp_bitcnt_t>(-exponent * static_cast<int>(i)));
    }
    out[i] = to_long_double(c);
  }
  // Normalize by the leading coefficient.
  const long double lead = out.back();
  for (auto& v : out) v /= lead;
  return out;
}

std::vector<RootCluster> cluster_roots(const std::vector<std::complex<double>>& roots, double radius) {
  std::vector<RootCluster> clusters;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> members{i};
    used[i] = true;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (!used[j] && std::abs(roots[j] - roots[members[k]]) < radius) {
          used[j] = true;
          members.push_back(j);
        }
      }
    }
    std::complex<double> c = 0.0;
    for (auto m : members) c += roots[m];
    clusters.push_back({c / static_cast<double>(members.size()), static_cast<int>(members.size())});
  }
  return clusters;
}

// Exact evaluation of an integer polynomial at a dyadic point z = (A + iB) / 2^E
// for the refinement stage; only the final ratio p / p' is rounded.
class ExactEvaluator {
 public:
  explicit ExactEvaluator(const RatPoly& p) {
    const RatPoly q = primitive_part(p);
    for (const auto& c : q.coeffs()) c_.push_back(c.get_num());
  }

  // Newton ratio p(z) / p'(z); nothing when p'(z) = 0.
  std::optional<cld> newton_ratio(cld z) const {
    const Point pt = fixed_point(z);
    const Eval ev = eval(pt);
    if (sgn(ev.dr) == 0 && sgn(ev.di) == 0) return std::nullopt;
    if (sgn(ev.vr) == 0 && sgn(ev.vi) == 0) return cld(0.0L);
    long ev_exp = 0, ew_exp = 0;
    const cld v = scaled(ev.vr, ev.vi, ev_exp);
    const cld w = scaled(ev.dr, ev.di, ew_exp);
    const cld r = v / w;
    return r * std::ldexp(1.0L, static_cast<int>(std::clamp(ev_exp - ew_exp - pt.e, -20000L, 20000L)));
  }

  // log2 |p(z)|, -inf at an exact root.
  long double log2_abs_value(cld z) const {
    const Eval ev = eval(fixed_point(z));
    if (sgn(ev.vr) == 0 && sgn(ev.vi) == 0) return -std::numeric_limits<long double>::infinity();
    long e = 0;
    const cld v = scaled(ev.vr, ev.vi, e);
    return std::log2(std::abs(v)) + static_cast<long double>(e) - static_cast<long double>(fixed_point(z).e) * degree();
  }

 private:
  struct Point {
    Integer a, b;
    long e;
  };
  struct Eval {
    Integer vr, vi, dr, di;
  };

  long degree() const { return static_cast<long>(c_.size()) - 1; }

  static Point fixed_point(cld z) {
    const long double m = std::max(std::fabs(z.real()), std::fabs(z.imag()));
    long e = 0;
    if (m > 0.0L) e = std::max(0L, 63L - static_cast<long>(std::ilogb(m)));
    auto to_int = [&](long double v) {
      Rational q = rational_from_long_double(v);
      q *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(e));
      return floor(q);
    };
    return {to_int(z.real()), to_int(z.imag()), e};
  }

  Eval eval(const Point& pt) const {
    const long d = degree();
    Eval out{c_.back(), Integer(0), Integer(0), Integer(0)};
    for (long i = d - 1; i >= 0; --i) {
      // D <- D z + V, then V <- V z + c_i, all scaled by powers of 2^E.
      Integer ndr = out.dr * pt.a - out.di * pt.b + out.vr;
      Integer ndi = out.dr * pt.b + out.di * pt.a + out.vi;
      Integer nvr = out.vr * pt.a - out.vi * pt.b + (c_[static_cast<std::size_t>(i)] << static_cast<mp_bitcnt_t>(pt.e * (d - i)));
      Integer nvi = out.vr * pt.b + out.vi * pt.a;
      out = {std::move(nvr), std::move(nvi), std::move(ndr), std::move(ndi)};
    }
    return out;
  }

  // (re + i im) as a long double complex times 2^exp.
  static cld scaled(const Integer& re, const Integer& im, long& exp) {
    long er = 0, ei = 0;
    const double mr = sgn(re) == 0 ? 0.0 : mpz_get_d_2exp(&er, re.get_mpz_t());
    const double mi = sgn(im) == 0 ? 0.0 : mpz_get_d_2exp(&ei, im.get_mpz_t());
    exp = std::max(sgn(re) == 0 ? ei : er, sgn(im) == 0 ? er : ei);
    return {std::ldexp(static_cast<long double>(mr), static_cast<int>(std::max(er - exp, -20000L))),
            std::ldexp(static_cast<long double>(mi), static_cast<int>(std::max(ei - exp, -20000L)))};
  }

  std::vector<Integer> c_;
};

}  // namespace

void sort_roots(std::vector<std::complex<double>>& roots) {
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

ComplexRootSet all_complex_roots(const RatPoly& p, const RootFinderConfig& config) {
  if (p.degree() < 1) throw InvalidInput("all_complex_roots needs degree >= 1");
  ComplexRootSet out;

  // Exact zero roots first.
  int zeros = 0;
  while (sgn(p.coeff(zeros)) == 0) ++zeros;
  std::vector<Rational> shifted(p.coeffs().begin() + zeros, p.coeffs().end());
  const RatPoly q(std::move(shifted));
  std::vector<cld> z;

  if (q.degree() >= 1) {
    int e = 0;
    const std::vector<long double> c = scaled_coefficients(q, e);
    out.rescale_exponent = e;
    const std::size_t n = static_cast<std::size_t>(q.degree());

    // Initial guesses on a circle whose radius bounds the root moduli
    // (Fujiwara-style bound on the normalized coefficients).
    long double radius = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      radius = std::max(radius, 2.0L * std::pow(std::fabs(c[i]), 1.0L / static_cast<long double>(n - i)));
    }
    if (radius == 0.0L) radius = 1.0L;
    z.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      long double theta = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                              static_cast<long double>(n) + 0.4L;
      z[k] = std::polar(radius, theta);
    }

    // A root also stops once its backward error is at rounding level, where
    // corrections of ill-conditioned roots only stir noise.
    const long double noise = 8.0L * static_cast<long double>(n) * std::numeric_limits<long double>::epsilon();
    std::vector<bool> done(n, false);
    bool all_done = false;
    int it = 0;
    for (; it < config.max_iterations && !all_done; ++it) {
      all_done = true;
      // Gauss-Seidel sweep: each update sees the newest neighbours; the
      // ordering is fixed so the output is deterministic.
      for (std::size_t k = 0; k < n; ++k) {
        if (done[k]) continue;
        Horner h = horner(c, z[k]);
        if (h.value == cld(0.0L) || (it > 0 && backward_error(c, z[k]) <= noise)) {
          done[k] = true;
          continue;
        }
        cld ratio = h.value / h.deriv;
        cld sum = 0.0L;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != k) sum += 1.0L / (z[k] - z[j]);
        }
        cld corr = ratio / (1.0L - ratio * sum);
        if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) corr = ratio;
        z[k] -= corr;
        if (std::abs(corr) <= static_cast<long double>(config.tolerance) * std::max(1.0L, std::abs(z[k]))) {
          done[k] = true;
        } else {
          all_done = false;
        }
      }
    }
    out.iterations = it;
    if (!all_done) out.converged = false;

    if (config.exact_refinement) {
      // Aberth sweeps with exactly evaluated Newton ratios of q(2^e y).
      RatPoly scaled_q = q;
      for (int i = 0; i <= q.degree(); ++i) {
        Rational ci = q.coeff(i);
        const long shift = static_cast<long>(e) * (e >= 0 ? i : i - q.degree());
        if (shift >= 0) {
          ci *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(shift));
        } else {
          ci /= Rational(Integer(1) << static_cast<mp_bitcnt_t>(-shift));
        }
        scaled_q = scaled_q + RatPoly::monomial(ci - scaled_q.coeff(i), i);
      }
      const ExactEvaluator exact(scaled_q);
      const long double stop = std::ldexp(1.0L, -60);
      for (int sweep = 0; sweep < 40; ++sweep) {
        bool moved = false;
        for (std::size_t k = 0; k < n; ++k) {
          const auto ratio = exact.newton_ratio(z[k]);
          if (!ratio) continue;
          cld sum = 0.0L;
          for (std::size_t j = 0; j < n; ++j) {
            if (j != k) sum += 1.0L / (z[k] - z[j]);
          }
          cld corr = *ratio / (1.0L - *ratio * sum);
          if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) corr = *ratio;
          z[k] -= corr;
          if (std::abs(corr) > stop * std::abs(z[k])) moved = true;
        }
        if (!moved) break;
      }
      for (auto& root : z) {
        if (root.imag() != 0.0L && std::fabs(root.imag()) < config.pairing_threshold * std::max(1.0L, std::abs(root))) {
          const cld snapped(root.real(), 0.0L);
          if (exact.log2_abs_value(snapped) <= exact.log2_abs_value(root)) root = snapped;
        }
      }
    } else {
      // Newton polish; keep a step only if it lowers the backward error.
      for (auto& root : z) {
        long double err = backward_error(c, root);
        for (int pass = 0; pass < 8 && err > 0.0L; ++pass) {
          Horner h = horner(c, root);
          if (h.deriv == cld(0.0L)) break;
          cld next = root - h.value / h.deriv;
          long double next_err = backward_error(c, next);
          if (!(next_err < err)) break;
          root = next;
          err = next_err;
        }
      }

      // Snap near-real roots when the residual on the axis is no worse.
      for (auto& root : z) {
        if (root.imag() != 0.0L && std::fabs(root.imag()) < config.pairing_threshold * std::max(1.0L, std::abs(root))) {
          cld snapped(root.real(), 0.0L);
          if (backward_error(c, snapped) <= backward_error(c, root)) root = snapped;
        }
      }
    }

    long double worst = 0.0L;
    for (const auto& root : z) worst = std::max(worst, backward_error(c, root));
    out.residual = static_cast<double>(worst);
    if (worst > config.polish_threshold) out.converged = false;

    const long double factor = std::ldexp(1.0L, e);
    for (auto& root : z) root *= factor;
  }

  out.roots.reserve(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < zeros; ++i) out.roots.emplace_back(0.0, 0.0);
  for (const auto& root : z) {
    out.roots.emplace_back(static_cast<double>(root.real()), static_cast<double>(root.imag()));
  }

  // Enforce conjugate symmetry for the non-real roots: pair each upper root
  // with its nearest lower partner and average.
  {
    std::vector<std::complex<double>> upper, lower, real;
    for (const auto& r : out.roots) {
      if (r.imag() > 0) {
        upper.push_back(r);
      } else if (r.imag() < 0) {
        lower.push_back(r);
      } else {
        real.push_back(r);
      }
    }
    if (upper.size() == lower.size()) {
      sort_roots(upper);
      std::vector<bool> taken(lower.size(), false);
      std::vector<std::complex<double>> paired;
      for (const auto& u : upper) {
        std::size_t best = lower.size();
        double best_d = 0.0;
        for (std::size_t j = 0; j < lower.size(); ++j) {
          if (taken[j]) continue;
          double d = std::abs(std::conj(lower[j]) - u);
          if (best == lower.size() || d < best_d) {
            best = j;
            best_d = d;
          }
        }
        taken[best] = true;
        std::complex<double> avg = 0.5 * (u + std::conj(lower[best]));
        paired.push_back(avg);
        paired.push_back(std::conj(avg));
      }
      paired.insert(paired.end(), real.begin(), real.end());
      out.roots = std::move(paired);
    }
  }

  sort_roots(out.roots);
  out.clusters = cluster_roots(out.roots, config.cluster_radius);
  return out;
}

ComplexRootSet all_complex_roots_by_multiplicity(const RatPoly& p, const RootFinderConfig& config) {
  if (p.degree() < 1) throw InvalidInput("all_complex_roots needs degree >= 1");
  ComplexRootSet out;
  const auto factors = squarefree_factorization(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    ComplexRootSet part = all_complex_roots(factors[i], config);
    out.converged = out.converged && part.converged;
    out.residual = std::max(out.residual, part.residual);
    out.iterations = std::max(out.iterations, part.iterations);
    out.rescale_exponent = part.rescale_exponent != 0 ? part.rescale_exponent : out.rescale_exponent;
    for (const auto& r : part.roots) {
      for (std::size_t m = 0; m <= i; ++m) out.roots.push_back(r);
    }
  }
  sort_roots(out.roots);
  out.clusters = cluster_roots(out.roots, config.cluster_radius);
  return out;
}

double max_imag_deviation(const ComplexRootSet& rs) {
  double m = 0.0;
  for (const auto& r : rs.roots) m = std::max(m, std::fabs(r.imag()));
  return m;
}

}  // namespace hrl
