#include "hrl/curve_tracer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <array>
#include <optional>

#include "hrl/error.hpp"
#include "hrl/format.hpp"
#include "hrl/parallel.hpp"
#include "hrl/real_roots.hpp"

namespace hrl {

void Window::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max)) throw InvalidInput("window needs x_min < x_max and y_min < y_max");
  if (resolution < 16) throw InvalidInput("window resolution must be at least 16");
}

double Window::cell_size() const { return std::max(cell_width(), cell_height()); }

Window default_window(const RecurrencePair& pair, int resolution) {
  // Half-width 1.5 x the largest root modulus among Q1, Q2, D and W, so every
  // zero, pole and critical point of f sits well inside.
  double r = 0.0;
  const RatPoly w = wronskian(pair.q1_squared(), pair.q2());
  for (const RatPoly* p : {&pair.q1(), &pair.q2(), &pair.discriminant(), &w}) {
    if (p->degree() < 1) continue;
    const ComplexRootSet rs = all_complex_roots_by_multiplicity(*p);
    double m = 0.0;
    for (const auto& z : rs.roots) m = std::max(m, std::abs(z));
    if (!rs.converged) m = to_double(cauchy_bound(*p));
    r = std::max(r, m);
  }
  r = std::max(1.0, 1.5 * r);
  Window win{-r, r, -r, r, resolution};
  win.validate();
  return win;
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(int deg_x, int deg_y)
    : deg_x_(deg_x), deg_y_(deg_y), c_(static_cast<std::size_t>(deg_x + 1) * static_cast<std::size_t>(deg_y + 1)) {}

bool BiPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational BiPoly::operator()(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (int i = deg_x_; i >= 0; --i) {
    Rational row(0);
    for (int j = deg_y_; j >= 0; --j) row = row * y + coeff(i, j);
    acc = acc * x + row;
  }
  return acc;
}

std::vector<double> BiPoly::double_coeffs() const {
  std::vector<double> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] = c_[k].get_d();
  return out;
}

double BiPoly::evaluate(const std::vector<double>& dc, double x, double y) const {
  double acc = 0.0;
  for (int i = deg_x_; i >= 0; --i) {
    double row = 0.0;
    for (int j = deg_y_; j >= 0; --j) row = row * y + dc[index(i, j)];
    acc = acc * x + row;
  }
  return acc;
}

BiPoly BiPoly::divided_by_y() const {
  if (deg_y_ < 1) {
    if (is_zero()) return {};
    throw ContractViolation("bivariate polynomial is not divisible by y");
  }
  BiPoly out(deg_x_, deg_y_ - 1);
  for (int i = 0; i <= deg_x_; ++i) {
    if (sgn(coeff(i, 0)) != 0) throw ContractViolation("bivariate polynomial is not divisible by y");
    for (int j = 1; j <= deg_y_; ++j) out.coeff(i, j - 1) = coeff(i, j);
  }
  return out;
}

namespace {

BiPoly mul(const BiPoly& a, const BiPoly& b) {
  BiPoly out(a.deg_x() + b.deg_x(), a.deg_y() + b.deg_y());
  for (int i = 0; i <= a.deg_x(); ++i) {
    for (int j = 0; j <= a.deg_y(); ++j) {
      const Rational& ca = a.coeff(i, j);
      if (sgn(ca) == 0) continue;
      for (int k = 0; k <= b.deg_x(); ++k) {
        for (int l = 0; l <= b.deg_y(); ++l) out.coeff(i + k, j + l) += ca * b.coeff(k, l);
      }
    }
  }
  return out;
}

BiPoly sub(const BiPoly& a, const BiPoly& b) {
  BiPoly out(std::max(a.deg_x(), b.deg_x()), std::max(a.deg_y(), b.deg_y()));
  for (int i = 0; i <= a.deg_x(); ++i) {
    for (int j = 0; j <= a.deg_y(); ++j) out.coeff(i, j) += a.coeff(i, j);
  }
  for (int i = 0; i <= b.deg_x(); ++i) {
    for (int j = 0; j <= b.deg_y(); ++j) out.coeff(i, j) -= b.coeff(i, j);
  }
  return out;
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

std::pair<BiPoly, BiPoly> complexify(const RatPoly& p) {
  const int d = std::max(p.degree(), 0);
  BiPoly re(d, d), im(d, d);
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    // (x + iy)^k = sum_j C(k, j) x^(k-j) i^j y^j
    for (int j = 0; j <= k; ++j) {
      Rational term = c * Rational(binomial(k, j));
      switch (j % 4) {
        case 0: re.coeff(k - j, j) += term; break;
        case 1: im.coeff(k - j, j) += term; break;
        case 2: re.coeff(k - j, j) -= term; break;
        default: im.coeff(k - j, j) -= term; break;
      }
    }
  }
  return {re, im};
}

BiPoly gamma_tilde_numerator(const RecurrencePair& pair) {
  auto [a1, b1] = complexify(pair.q1_squared());
  auto [a2, b2] = complexify(pair.q2());
  // Im((a1 + i b1)(a2 - i b2)) = b1 a2 - a1 b2
  return sub(mul(b1, a2), mul(a1, b2)).divided_by_y();
}

std::string classification_name(Classification c) {
  switch (c) {
    case Classification::kRealAxis: return "real-axis";
    case Classification::kCrossingOval: return "crossing-oval";
    case Classification::kDisjointOval: return "disjoint-oval";
    case Classification::kUnresolved: return "unresolved";
  }
  return "?";
}

// ---------------------------------------------------------------- tracing

CurveTrace trace_gamma_tilde(const RecurrencePair& pair, const Window& window, const TraceOptions& options) {
  window.validate();
  CurveTrace trace;
  trace.window = window;
  const BiPoly n = gamma_tilde_numerator(pair);
  const std::vector<double> dc = n.double_coeffs();
  const int res = window.resolution;
  const std::size_t side = static_cast<std::size_t>(res) + 1;
  const double dx = window.cell_width();
  const double dy = window.cell_height();
  auto node_x = [&](int i) { return i == res ? window.x_max : window.x_min + i * dx; };
  auto node_y = [&](int j) { return j == res ? window.y_max : window.y_min + j * dy; };

  // Real axis: always part of the curve.
  if (window.y_min < 0.0 && window.y_max > 0.0) {
    CurveComponent axis;
    axis.classification = Classification::kRealAxis;
    for (int i = 0; i <= res; ++i) axis.points.emplace_back(node_x(i), 0.0);
    trace.components.push_back(std::move(axis));
  } else {
    trace.warnings.push_back("window does not contain the real axis");
  }

  std::vector<double> value(side * side);
  parallel_for(side, [&](std::size_t j) {
    const double y = node_y(static_cast<int>(j));
    const Rational yq = rational_from_double(y);
    for (std::size_t i = 0; i < side; ++i) {
      const double x = node_x(static_cast<int>(i));
      double v = n.evaluate(dc, x, y);
      if (options.certified_grid) {
        const int s = sgn(n(rational_from_double(x), yq));
        if (s == 0) {
          v = 0.0;
        } else if ((s > 0) != (v > 0)) {
          v = s > 0 ? std::numeric_limits<double>::min() : -std::numeric_limits<double>::min();
        }
      }
      value[j * side + i] = v;
    }
  });
  auto val = [&](int i, int j) { return value[static_cast<std::size_t>(j) * side + static_cast<std::size_t>(i)]; };
  auto positive = [](double v) { return v >= 0.0; };

  // Edge ids: horizontal edge (i, j) joins nodes (i, j)-(i+1, j); vertical
  // edge (i, j) joins (i, j)-(i, j+1).
  const std::size_t h_count = static_cast<std::size_t>(res) * side;
  auto h_id = [&](int i, int j) { return static_cast<std::size_t>(j) * static_cast<std::size_t>(res) + static_cast<std::size_t>(i); };
  auto v_id = [&](int i, int j) { return h_count + static_cast<std::size_t>(i) * static_cast<std::size_t>(res) + static_cast<std::size_t>(j); };
  auto edge_point = [&](std::size_t id) {
    if (id < h_count) {
      const int j = static_cast<int>(id / static_cast<std::size_t>(res));
      const int i = static_cast<int>(id % static_cast<std::size_t>(res));
      const double a = val(i, j), b = val(i + 1, j);
      const double t = a / (a - b);
      return std::complex<double>(node_x(i) + t * (node_x(i + 1) - node_x(i)), node_y(j));
    }
    const std::size_t k = id - h_count;
    const int i = static_cast<int>(k / static_cast<std::size_t>(res));
    const int j = static_cast<int>(k % static_cast<std::size_t>(res));
    const double a = val(i, j), b = val(i, j + 1);
    const double t = a / (a - b);
    return std::complex<double>(node_x(i), node_y(j) + t * (node_y(j + 1) - node_y(j)));
  };

  struct Segment {
    std::size_t a, b;
  };
  std::vector<Segment> segments;
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      const bool p00 = positive(val(i, j)), p10 = positive(val(i + 1, j));
      const bool p11 = positive(val(i + 1, j + 1)), p01 = positive(val(i, j + 1));
      const std::size_t bottom = h_id(i, j), top = h_id(i, j + 1);
      const std::size_t left = v_id(i, j), right = v_id(i + 1, j);
      std::vector<std::size_t> crossing;
      if (p00 != p10) crossing.push_back(bottom);
      if (p10 != p11) crossing.push_back(right);
      if (p01 != p11) crossing.push_back(top);
      if (p00 != p01) crossing.push_back(left);
      if (crossing.size() == 2) {
        segments.push_back({crossing[0], crossing[1]});
      } else if (crossing.size() == 4) {
        const double cx = 0.5 * (node_x(i) + node_x(i + 1));
        const double cy = 0.5 * (node_y(j) + node_y(j + 1));
        const bool center = positive(n.evaluate(dc, cx, cy));
        if (center == p00) {
          // p00 and p11 connect through the center; cut off corners 10 and 01.
          segments.push_back({bottom, right});
          segments.push_back({left, top});
        } else {
          segments.push_back({bottom, left});
          segments.push_back({right, top});
        }
      }
    }
  }

  // Assemble polylines by walking shared edges.
  // Each edge borders at most two cells, so at most two segments share it.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::array<std::size_t, 2>> by_edge(h_count * 2, {kNone, kNone});
  auto attach = [&](std::size_t edge, std::size_t s) {
    auto& slot = by_edge[edge];
    (slot[0] == kNone ? slot[0] : slot[1]) = s;
  };
  for (std::size_t s = 0; s < segments.size(); ++s) {
    attach(segments[s].a, s);
    attach(segments[s].b, s);
  }
  std::vector<bool> used(segments.size(), false);
  auto next_segment = [&](std::size_t edge, std::size_t from) -> std::optional<std::size_t> {
    for (std::size_t s : by_edge[edge]) {
      if (s != kNone && s != from && !used[s]) return s;
    }
    return std::nullopt;
  };
  for (std::size_t s0 = 0; s0 < segments.size(); ++s0) {
    if (used[s0]) continue;
    used[s0] = true;
    std::vector<std::size_t> edges{segments[s0].a, segments[s0].b};
    bool closed = false;
    // Forward from b.
    std::size_t cur = s0;
    while (true) {
      auto nxt = next_segment(edges.back(), cur);
      if (!nxt) break;
      used[*nxt] = true;
      const std::size_t other = segments[*nxt].a == edges.back() ? segments[*nxt].b : segments[*nxt].a;
      cur = *nxt;
      if (other == edges.front()) {
        closed = true;
        break;
      }
      edges.push_back(other);
    }
    if (!closed) {
      // Backward from a.
      std::vector<std::size_t> back;
      std::size_t edge = edges.front();
      cur = s0;
      while (true) {
        auto nxt = next_segment(edge, cur);
        if (!nxt) break;
        used[*nxt] = true;
        const std::size_t other = segments[*nxt].a == edge ? segments[*nxt].b : segments[*nxt].a;
        cur = *nxt;
        back.push_back(other);
        edge = other;
      }
      std::reverse(back.begin(), back.end());
      back.insert(back.end(), edges.begin(), edges.end());
      edges = std::move(back);
    }
    if (edges.size() < options.min_points) continue;
    CurveComponent comp;
    comp.closed = closed;
    comp.points.reserve(edges.size() + (closed ? 1 : 0));
    for (std::size_t e : edges) comp.points.push_back(edge_point(e));
    if (closed) comp.points.push_back(comp.points.front());
    trace.components.push_back(std::move(comp));
  }
  return trace;
}

void classify(CurveTrace& trace, const std::vector<double>& real_critical_points) {
  const double cell = trace.window.cell_size();
  const double cw = trace.window.cell_width();
  for (std::size_t c = 0; c < trace.components.size(); ++c) {
    CurveComponent& comp = trace.components[c];
    if (comp.classification == Classification::kRealAxis && c == 0) continue;
    comp.crossing_points.clear();
    double min_abs_y = std::numeric_limits<double>::infinity();
    double max_abs_y = 0.0;
    for (std::size_t k = 0; k < comp.points.size(); ++k) {
      const auto& p = comp.points[k];
      min_abs_y = std::min(min_abs_y, std::fabs(p.imag()));
      max_abs_y = std::max(max_abs_y, std::fabs(p.imag()));
      if (k + 1 < comp.points.size()) {
        const auto& q = comp.points[k + 1];
        if ((p.imag() < 0.0 && q.imag() > 0.0) || (p.imag() > 0.0 && q.imag() < 0.0)) {
          const double t = p.imag() / (p.imag() - q.imag());
          comp.crossing_points.push_back(p.real() + t * (q.real() - p.real()));
        }
      }
      if (p.imag() == 0.0) comp.crossing_points.push_back(p.real());
    }
    std::sort(comp.crossing_points.begin(), comp.crossing_points.end());
    // One crossing can register twice (a node on the axis plus a sign change).
    std::vector<double> dedup;
    for (double x : comp.crossing_points) {
      if (dedup.empty() || x - dedup.back() > cw) dedup.push_back(x);
    }
    comp.crossing_points = std::move(dedup);

    if (max_abs_y < cell) {
      comp.classification = Classification::kRealAxis;
    } else if (!comp.crossing_points.empty()) {
      comp.classification = Classification::kCrossingOval;
      for (double x : comp.crossing_points) {
        const bool near = std::any_of(real_critical_points.begin(), real_critical_points.end(),
                                      [&](double cp) { return std::fabs(cp - x) <= 3.0 * cw; });
        if (!near) {
          comp.classification = Classification::kUnresolved;
          trace.warnings.push_back("component " + std::to_string(c) + " crosses the real axis at x ~ " +
                                   format_double(x) + " with no real critical point nearby (grid too coarse?)");
        }
      }
    } else if (min_abs_y > 2.0 * cell && comp.closed) {
      comp.classification = Classification::kDisjointOval;
    } else {
      comp.classification = Classification::kUnresolved;
      if (!comp.closed) {
        trace.warnings.push_back("component " + std::to_string(c) +
                                 " leaves the window without meeting the real axis");
      }
    }
  }
}

std::vector<double> real_critical_abscissas(const RecurrencePair& pair) {
  const RatPoly w = wronskian(pair.q1_squared(), pair.q2());
  std::vector<double> out;
  if (w.degree() < 1) return out;
  for (const auto& r : isolate_real_roots(w)) out.push_back(r.to_double());
  return out;
}

GammaCloud gamma_point_cloud(const RecurrencePair& pair, int s_count, const RootFinderConfig& config) {
  if (s_count < 2) throw InvalidInput("gamma_point_cloud needs s_count >= 2");
  GammaCloud cloud;
  std::vector<std::vector<GammaPoint>> per(static_cast<std::size_t>(s_count));
  std::vector<char> ok(static_cast<std::size_t>(s_count), 1);
  parallel_for(per.size(), [&](std::size_t j) {
    const Rational s = make_rational(4 * static_cast<long>(j), s_count - 1);
    const RatPoly fib = pair.fiber(s);
    if (fib.degree() < 1) return;
    const ComplexRootSet roots = all_complex_roots_by_multiplicity(fib, config);
    ok[j] = roots.converged ? 1 : 0;
    for (const auto& z : roots.roots) per[j].push_back({to_double(s), z});
  });
  for (std::size_t j = 0; j < per.size(); ++j) {
    cloud.points.insert(cloud.points.end(), per[j].begin(), per[j].end());
    cloud.converged = cloud.converged && ok[j] != 0;
  }
  return cloud;
}

// ---------------------------------------------------------------- output

namespace {

const char* stroke_for(Classification c) {
  switch (c) {
    case Classification::kRealAxis: return "#000000";
    case Classification::kCrossingOval: return "#1f4fbf";
    case Classification::kDisjointOval: return "#b0179e";
    case Classification::kUnresolved: return "#e08a00";
  }
  return "#000000";
}

}  // namespace

std::string render_svg(const CurveTrace& trace, const GammaCloud* cloud, const PlotMarkers& markers) {
  const Window& w = trace.window;
  const double size = 640.0;
  auto px = [&](double x) { return format_fixed((x - w.x_min) / (w.x_max - w.x_min) * size, 3); };
  auto py = [&](double y) { return format_fixed((w.y_max - y) / (w.y_max - w.y_min) * size, 3); };
  auto visible = [&](double x, double y) { return x >= w.x_min && x <= w.x_max && y >= w.y_min && y <= w.y_max; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"0 0 640 640\">\n";
  out += "<rect width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n";
  if (w.x_min < 0.0 && w.x_max > 0.0) {
    out += "<line x1=\"" + px(0.0) + "\" y1=\"0\" x2=\"" + px(0.0) + "\" y2=\"640\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
  }
  for (const auto& comp : trace.components) {
    out += "<polyline fill=\"none\" stroke=\"";
    out += stroke_for(comp.classification);
    out += "\" stroke-width=\"1\" data-class=\"" + classification_name(comp.classification) + "\" points=\"";
    bool first = true;
    for (const auto& p : comp.points) {
      if (!first) out += ' ';
      first = false;
      out += px(p.real()) + "," + py(p.imag());
    }
    out += "\"/>\n";
  }
  if (cloud != nullptr) {
    for (const auto& g : cloud->points) {
      if (!visible(g.z.real(), g.z.imag())) continue;
      out += "<circle cx=\"" + px(g.z.real()) + "\" cy=\"" + py(g.z.imag()) + "\" r=\"1.2\" fill=\"#444444\"/>\n";
    }
  }
  for (double x : markers.critical_points) {
    if (!visible(x, 0.0)) continue;
    out += "<circle cx=\"" + px(x) + "\" cy=\"" + py(0.0) + "\" r=\"4\" fill=\"#1a9c2a\"/>\n";
  }
  for (double x : markers.discriminant_roots) {
    if (!visible(x, 0.0)) continue;
    out += "<circle cx=\"" + px(x) + "\" cy=\"" + py(0.0) + "\" r=\"4\" fill=\"#d11f1f\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_csv(const CurveTrace& trace, const GammaCloud* cloud) {
  std::string out = "x,y,component_id,classification\n";
  for (std::size_t c = 0; c < trace.components.size(); ++c) {
    const auto& comp = trace.components[c];
    const std::string tail = "," + std::to_string(c) + "," + classification_name(comp.classification) + "\n";
    for (const auto& p : comp.points) out += format_double(p.real()) + "," + format_double(p.imag()) + tail;
  }
  if (cloud != nullptr) {
    for (const auto& g : cloud->points) {
      out += format_double(g.z.real()) + "," + format_double(g.z.imag()) + ",cloud,gamma-q\n";
    }
  }
  return out;
}

}  // namespace hrl
