#include "yfp/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace yfp {

Rational ExactMeasure::total_mass() const { return moment(0); }

Rational ExactMeasure::moment(int k) const {
  Rational s = 0;
  for (const Atom& a : atoms) {
    Rational p = 1;
    for (int i = 0; i < k; ++i) p *= a.x;
    s += a.w * p;
  }
  return s;
}

double AnalyticDensity::eval(double x) const {
  if (x <= a || x >= b) return 0;
  double m = (x - a) * (b - x);
  double s = smooth(x);
  return kind == EdgeKind::InverseSqrt ? s / std::sqrt(m) : s * std::sqrt(m);
}

double Measure::atom_mass() const {
  double s = 0;
  for (const auto& [x, w] : atoms) s += w;
  return s;
}

namespace {

// 48-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirror for
// the negative half). Generated by Newton iteration on Legendre polynomials.
struct GLRule {
  std::vector<double> x, w;
};

GLRule make_rule(int n) {
  GLRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    // Initial guess: Chebyshev-like
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    double p0 = 1, p1 = t;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (t * p1 - p0) / (t * t - 1);
    r.x[i] = t;
    r.w[i] = 2.0 / ((1 - t * t) * dp * dp);
  }
  return r;
}

const GLRule& rule_for(int n) {
  static const GLRule r32 = make_rule(32);
  static const GLRule r64 = make_rule(64);
  static const GLRule r96 = make_rule(96);
  static const GLRule r128 = make_rule(128);
  if (n <= 32) return r32;
  if (n <= 64) return r64;
  if (n <= 96) return r96;
  return r128;
}

double gl_panel(const std::function<double(double)>& f, double a, double b, const GLRule& r) {
  double mid = (a + b) / 2, half = (b - a) / 2;
  double s = 0;
  for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(mid + half * r.x[i]);
  return s * half;
}

std::vector<double> panel_edges(double a, double b, std::vector<double> kinks) {
  std::vector<double> edges{a, b};
  for (double k : kinks)
    if (k > a && k < b) edges.push_back(k);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

} // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      std::vector<double> kinks, int nodes_per_panel) {
  const GLRule& r = rule_for(nodes_per_panel);
  auto edges = panel_edges(a, b, std::move(kinks));
  double s = 0;
  for (std::size_t i = 1; i < edges.size(); ++i) s += gl_panel(f, edges[i - 1], edges[i], r);
  return s;
}

double edge_weighted_integral(const std::function<double(double)>& f, double a, double b,
                              EdgeKind kind, std::vector<double> kinks, int nodes_per_panel) {
  // x = mid + half*sin(theta): sqrt((x-a)(b-x)) = half*cos(theta), and
  // dx = half*cos(theta) dtheta, so both edge weights become polynomial in
  // cos(theta) and the integrand is smooth on each panel.
  const double mid = (a + b) / 2, half = (b - a) / 2;
  auto to_theta = [&](double x) {
    double s = std::clamp((x - mid) / half, -1.0, 1.0);
    return std::asin(s);
  };
  std::vector<double> theta_kinks;
  for (double k : kinks)
    if (k > a && k < b) theta_kinks.push_back(to_theta(k));
  auto g = [&](double th) {
    double c = std::cos(th);
    double x = mid + half * std::sin(th);
    double fx = f(x);
    return kind == EdgeKind::InverseSqrt ? fx : fx * half * c * half * c;
  };
  return gauss_legendre(g, -M_PI / 2, M_PI / 2, theta_kinks, nodes_per_panel);
}

double Measure::integrate(const std::function<double(double)>& f,
                          const std::vector<double>& kinks) const {
  double s = 0;
  for (const auto& [x, w] : atoms) s += w * f(x);
  if (analytic) {
    const AnalyticDensity& d = *analytic;
    auto g = [&](double x) { return f(x) * d.smooth(x); };
    s += edge_weighted_integral(g, d.a, d.b, d.kind, kinks);
  } else if (density) {
    // Trapezoid on the sample grid; cell-exact against the piecewise linear
    // interpolant when f is smooth relative to the grid step.
    const DensityGrid& g = *density;
    std::vector<double> nodes;
    nodes.reserve(g.values.size());
    for (int i = 0; i < g.n(); ++i) nodes.push_back(f(g.node(i)) * g.values[i]);
    for (int i = 1; i < g.n(); ++i) s += (nodes[i - 1] + nodes[i]) * g.du / 2;
  }
  return s;
}

double Measure::total_mass() const {
  return integrate([](double) { return 1.0; });
}

double Measure::moment(int k) const {
  return integrate([k](double x) {
    double p = 1;
    for (int i = 0; i < k; ++i) p *= x;
    return p;
  });
}

Measure to_numeric(const ExactMeasure& m) {
  Measure out;
  out.atoms.reserve(m.atoms.size());
  for (const auto& a : m.atoms) out.atoms.emplace_back(to_double(a.x), to_double(a.w));
  return out;
}

DensityGrid sample_density(const AnalyticDensity& d, int n) {
  DensityGrid g;
  g.u0 = d.a;
  g.du = (d.b - d.a) / (n - 1);
  g.values.resize(n);
  for (int i = 0; i < n; ++i) g.values[i] = d.eval(g.node(i));
  return g;
}

} // namespace yfp
