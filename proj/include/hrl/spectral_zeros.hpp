#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hrl/numeric_roots.hpp"
#include "hrl/recurrence.hpp"

namespace hrl {

/// One value c of f = Q1^2 / Q2 at which zeros of P_n sit.
struct Level {
  /// c = 4 cos^2(pi k / (n+1)).
  int k = 0;
  double value = 0.0;
  /// Set when c is rational (c in {0, 1, 2, 3}).
  std::optional<Rational> exact;
  /// k = (n+1)/2: the level c = 0 that contributes the zeros of Q1 once
  /// instead of the doubled zeros of Q1^2.
  bool self_paired = false;
};

struct LevelSet {
  int n = 0;
  std::vector<Level> levels;
};

/// Distinct levels for P_n, n >= 1: k = 1 .. floor(n/2) paired with n+1-k,
/// plus the self-paired level c = 0 when n is odd.
LevelSet levels(int n);

struct LevelRoots {
  Level level;
  ComplexRootSet roots;
  /// Degree lost to leading-coefficient cancellation of Q1^2 - c Q2; these
  /// zeros sit at infinity.
  int roots_at_infinity = 0;
};

struct SpectralZeros {
  int n = 0;
  /// Union over levels, sorted by real then imaginary part.
  std::vector<std::complex<double>> roots;
  std::vector<LevelRoots> per_level;
  int roots_at_infinity = 0;
  bool converged = true;
};

/// Zeros of P_n computed level by level from
///   P_n = (-1)^n Q1^(n mod 2) prod_k (Q1^2 - c_k Q2),
/// never expanding P_n itself.
SpectralZeros zeros_via_levels(const RecurrencePair& pair, int n, const RootFinderConfig& config = {});

/// Zeros of P_n from the expanded polynomial; the brute-force route.
ComplexRootSet zeros_via_expansion(const RecurrencePair& pair, int n, const RootFinderConfig& config = {});

}  // namespace hrl
