#pragma once

#include <complex>
#include <vector>

#include "hrl/ratpoly.hpp"

namespace hrl {

struct RootFinderConfig {
  /// Stop once every Aberth correction is below tolerance * max(1, |z|).
  double tolerance = 1e-12;
  int max_iterations = 2000;
  /// Roots with |Im| below this are candidates for snapping to the real axis.
  double pairing_threshold = 1e-8;
  /// Converged outputs have a relative backward error at most this.
  double polish_threshold = 1e-9;
  /// Roots closer than this are reported as one cluster.
  double cluster_radius = 1e-6;
  /// Finish with Aberth sweeps whose Newton ratios come from exact integer
  /// evaluation, so ill-conditioned input is resolved to long double
  /// accuracy. Costly for high degrees.
  bool exact_refinement = false;
};

struct RootCluster {
  std::complex<double> center;
  int size = 0;
};

struct ComplexRootSet {
  /// Sorted by real part, then imaginary part; multiple roots repeat.
  std::vector<std::complex<double>> roots;
  std::vector<RootCluster> clusters;
  /// max over roots of |p(z)| / sum |c_i| |z|^i.
  double residual = 0.0;
  bool converged = true;
  int iterations = 0;
  /// The variable was rescaled as x = 2^rescale_exponent * y before the
  /// conversion to floating point; 0 when no rescale was needed.
  int rescale_exponent = 0;
};

/// All complex roots of p (deg p >= 1) by Aberth-Ehrlich simultaneous
/// iteration in extended precision followed by a Newton polish. Real-coefficient
/// input gets conjugate pairing. Never throws on non-convergence; the result
/// carries converged = false and the best iterate instead.
ComplexRootSet all_complex_roots(const RatPoly& p, const RootFinderConfig& config = {});

/// Same roots, but splits p into exact squarefree factors first so repeated
/// roots are found as simple roots of a factor and replicated.
ComplexRootSet all_complex_roots_by_multiplicity(const RatPoly& p, const RootFinderConfig& config = {});

/// Largest |Im z| over the set; 0 when empty.
double max_imag_deviation(const ComplexRootSet& rs);

/// Canonical order for complex root lists (real part, then imaginary part).
void sort_roots(std::vector<std::complex<double>>& roots);

}  // namespace hrl
