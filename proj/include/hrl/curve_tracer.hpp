#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hrl/numeric_roots.hpp"
#include "hrl/recurrence.hpp"

namespace hrl {

/// Plot rectangle and grid resolution (cells per axis).
struct Window {
  double x_min = -1.0, x_max = 1.0, y_min = -1.0, y_max = 1.0;
  int resolution = 512;

  /// Throws InvalidInput unless x_min < x_max, y_min < y_max, resolution >= 16.
  void validate() const;
  double cell_width() const { return (x_max - x_min) / resolution; }
  double cell_height() const { return (y_max - y_min) / resolution; }
  double cell_size() const;
};

/// Square window centred at 0 with half-width 1.5 x the largest root modulus
/// of Q1, Q2, D and W (at least 1).
Window default_window(const RecurrencePair& pair, int resolution = 512);

/// Bivariate polynomial with exact coefficients; coeff(i, j) multiplies x^i y^j.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(int deg_x, int deg_y);

  int deg_x() const noexcept { return deg_x_; }
  int deg_y() const noexcept { return deg_y_; }
  const Rational& coeff(int i, int j) const { return c_[index(i, j)]; }
  Rational& coeff(int i, int j) { return c_[index(i, j)]; }
  bool is_zero() const;

  Rational operator()(const Rational& x, const Rational& y) const;
  /// Row-major double copy of the coefficients for evaluate().
  std::vector<double> double_coeffs() const;
  double evaluate(const std::vector<double>& dc, double x, double y) const;

  /// Divides by y; throws ContractViolation if some term has no y factor.
  BiPoly divided_by_y() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(deg_y_ + 1) + static_cast<std::size_t>(j);
  }
  int deg_x_ = -1, deg_y_ = -1;
  std::vector<Rational> c_;
};

/// Real and imaginary parts of p(x + iy) as bivariate polynomials.
std::pair<BiPoly, BiPoly> complexify(const RatPoly& p);

/// N(x, y) / y with N = Im(Q1(z)^2 conj(Q2(z))), z = x + iy. Its zero set is
/// the part of Im f = 0 off the real axis (plus the real zeros of N/y).
BiPoly gamma_tilde_numerator(const RecurrencePair& pair);

enum class Classification { kRealAxis, kCrossingOval, kDisjointOval, kUnresolved };
std::string classification_name(Classification c);

struct CurveComponent {
  std::vector<std::complex<double>> points;
  bool closed = false;
  Classification classification = Classification::kUnresolved;
  /// Abscissas where the component meets y = 0.
  std::vector<double> crossing_points;
};

struct TraceOptions {
  /// Evaluate grid signs in exact rational arithmetic.
  bool certified_grid = false;
  /// Polylines with fewer points are dropped as grid noise.
  std::size_t min_points = 8;
};

struct CurveTrace {
  Window window;
  /// The first component is always the real axis across the window.
  std::vector<CurveComponent> components;
  std::vector<std::string> warnings;
};

/// Marching squares on N/y over the window.
CurveTrace trace_gamma_tilde(const RecurrencePair& pair, const Window& window, const TraceOptions& options = {});

/// Fills classification and crossing points. A crossing that is not within
/// three cell widths of a listed real critical point marks the component
/// unresolved and adds a warning.
void classify(CurveTrace& trace, const std::vector<double>& real_critical_points);

/// Real zeros of W(Q1^2, Q2) as doubles (the real critical points of f).
std::vector<double> real_critical_abscissas(const RecurrencePair& pair);

struct GammaPoint {
  double s = 0.0;
  std::complex<double> z;
};

struct GammaCloud {
  std::vector<GammaPoint> points;
  bool converged = true;
};

/// Roots of Q1^2 - s Q2 for s = 4j / (s_count - 1), j = 0 .. s_count - 1.
GammaCloud gamma_point_cloud(const RecurrencePair& pair, int s_count, const RootFinderConfig& config = {});

struct PlotMarkers {
  std::vector<double> critical_points;      // drawn green
  std::vector<double> discriminant_roots;   // drawn red
};

std::string render_svg(const CurveTrace& trace, const GammaCloud* cloud, const PlotMarkers& markers);
/// Rows x,y,component_id,classification; the Gamma_Q cloud follows with
/// component_id "cloud" and classification set to the level s.
std::string render_csv(const CurveTrace& trace, const GammaCloud* cloud);

}  // namespace hrl
