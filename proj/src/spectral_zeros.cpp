#include "hrl/spectral_zeros.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "hrl/error.hpp"
#include "hrl/parallel.hpp"

namespace hrl {

LevelSet levels(int n) {
  if (n < 1) throw InvalidInput("levels need n >= 1");
  LevelSet set;
  set.n = n;
  const int m = n + 1;
  for (int k = 1; k <= n / 2; ++k) {
    Level lv;
    lv.k = k;
    const long double c = std::cos(std::numbers::pi_v<long double> * k / m);
    lv.value = static_cast<double>(4.0L * c * c);
    // 2 + 2 cos(2 pi k / m) is rational only when the reduced denominator of
    // k / m is 3, 4 or 6.
    switch (m / std::gcd(k, m)) {
      case 3: lv.exact = Rational(1); break;
      case 4: lv.exact = Rational(2); break;
      case 6: lv.exact = Rational(3); break;
      default: break;
    }
    if (lv.exact) lv.value = to_double(*lv.exact);
    set.levels.push_back(lv);
  }
  if (n % 2 == 1) {
    Level lv;
    lv.k = m / 2;
    lv.value = 0.0;
    lv.exact = Rational(0);
    lv.self_paired = true;
    set.levels.push_back(lv);
  }
  return set;
}

SpectralZeros zeros_via_levels(const RecurrencePair& pair, int n, const RootFinderConfig& config) {
  const LevelSet set = levels(n);
  const int full_degree = std::max(2 * pair.q1().degree(), pair.q2().degree());
  SpectralZeros out;
  out.n = n;
  out.per_level.resize(set.levels.size());
  parallel_for(set.levels.size(), [&](std::size_t i) {
    const Level& lv = set.levels[i];
    LevelRoots lr;
    lr.level = lv;
    if (lv.self_paired) {
      lr.roots = all_complex_roots_by_multiplicity(pair.q1(), config);
    } else {
      Rational c;
      if (lv.exact) {
        c = *lv.exact;
      } else {
        const long double cc = std::cos(std::numbers::pi_v<long double> * lv.k / (n + 1));
        c = rational_from_long_double(4.0L * cc * cc);
      }
      const RatPoly fiber = pair.fiber(c);
      lr.roots_at_infinity = full_degree - fiber.degree();
      if (fiber.degree() >= 1) lr.roots = all_complex_roots_by_multiplicity(fiber, config);
    }
    out.per_level[i] = std::move(lr);
  });
  for (const auto& lr : out.per_level) {
    out.roots.insert(out.roots.end(), lr.roots.roots.begin(), lr.roots.roots.end());
    out.roots_at_infinity += lr.roots_at_infinity;
    out.converged = out.converged && lr.roots.converged;
  }
  sort_roots(out.roots);
  return out;
}

ComplexRootSet zeros_via_expansion(const RecurrencePair& pair, int n, const RootFinderConfig& config) {
  const auto seq = generate_sequence(pair.spec(), n);
  if (seq.back().degree() < 1) return {};
  RootFinderConfig exact = config;
  exact.exact_refinement = true;
  return all_complex_roots_by_multiplicity(seq.back(), exact);
}

}  // namespace hrl
