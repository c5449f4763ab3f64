#include "yfp/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace yfp {

double GridFunction::interpolate(double u) const {
  if (values.empty()) return std::abs(u);
  double t = (u - u0) / du;
  if (t <= 0) return values.front();
  if (t >= n() - 1) return values.back();
  int i = static_cast<int>(t);
  double frac = t - i;
  return values[i] * (1 - frac) + values[i + 1] * frac;
}

ContinuousDiagram ContinuousDiagram::from_breakpoints(std::vector<std::pair<double, double>> pts) {
  if (pts.empty()) throw std::invalid_argument("breakpoint profile needs at least one point");
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i].first > pts[i - 1].first))
      throw std::invalid_argument("breakpoints must have strictly increasing u");
    double dv = pts[i].second - pts[i - 1].second;
    double du = pts[i].first - pts[i - 1].first;
    if (std::abs(dv) > du * (1 + 1e-12) + 1e-12)
      throw std::invalid_argument("breakpoint profile violates the Lipschitz-1 bound");
  }
  const double tol = 1e-9;
  if (std::abs(pts.front().second - std::abs(pts.front().first)) > tol ||
      std::abs(pts.back().second - std::abs(pts.back().first)) > tol)
    throw std::invalid_argument("profile must equal |u| at its extreme breakpoints");
  ContinuousDiagram d;
  d.pts_ = std::move(pts);
  return d;
}

ContinuousDiagram ContinuousDiagram::from_grid(GridFunction g) {
  if (g.values.empty() || g.du <= 0) throw std::invalid_argument("empty grid profile");
  ContinuousDiagram d;
  d.grid_ = std::move(g);
  return d;
}

ContinuousDiagram ContinuousDiagram::abs_profile() {
  return from_breakpoints({{0.0, 0.0}});
}

double ContinuousDiagram::omega(double u) const {
  if (!pts_.empty()) {
    if (u <= pts_.front().first || u >= pts_.back().first) return std::abs(u);
    auto it = std::upper_bound(pts_.begin(), pts_.end(), u,
                               [](double x, const auto& p) { return x < p.first; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    double t = (u - lo.first) / (hi.first - lo.first);
    return lo.second * (1 - t) + hi.second * t;
  }
  const GridFunction& g = *grid_;
  if (u <= g.u0 || u >= g.u_back()) return std::abs(u);
  return g.interpolate(u);
}

double ContinuousDiagram::support_bound() const {
  if (!pts_.empty())
    return std::max(std::abs(pts_.front().first), std::abs(pts_.back().first));
  return std::max(std::abs(grid_->u0), std::abs(grid_->u_back()));
}

ContinuousDiagram ContinuousDiagram::to_grid(int n_points) const {
  if (n_points < 2) throw std::invalid_argument("grid needs at least 2 points");
  double b = support_bound() + 1.0;
  GridFunction g;
  g.u0 = -b;
  g.du = 2 * b / (n_points - 1);
  g.values.resize(n_points);
  for (int i = 0; i < n_points; ++i) g.values[i] = omega(g.u0 + i * g.du);
  return from_grid(std::move(g));
}

ContinuousDiagram coords_to_profile(const InterlacingCoords& c) {
  if (!is_valid_interlacing(c))
    throw std::invalid_argument("coordinates are not interlacing or not centered");
  std::vector<std::pair<double, double>> pts;
  double u = static_cast<double>(c.minima.front());
  double v = std::abs(u);
  pts.emplace_back(u, v);
  for (std::size_t i = 0; i < c.maxima.size(); ++i) {
    double y = static_cast<double>(c.maxima[i]);
    v += y - u; // slope +1 up to the peak
    pts.emplace_back(y, v);
    u = static_cast<double>(c.minima[i + 1]);
    v -= u - y; // slope -1 down to the valley
    pts.emplace_back(u, v);
  }
  return ContinuousDiagram::from_breakpoints(std::move(pts));
}

ContinuousDiagram rescale(const ContinuousDiagram& w, long long q) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  const double s = std::sqrt(static_cast<double>(q));
  if (w.has_breakpoints()) {
    auto pts = w.breakpoints();
    for (auto& p : pts) {
      p.first /= s;
      p.second /= s;
    }
    return ContinuousDiagram::from_breakpoints(std::move(pts));
  }
  GridFunction g = w.grid();
  g.u0 /= s;
  g.du /= s;
  for (double& v : g.values) v /= s;
  return ContinuousDiagram::from_grid(std::move(g));
}

double sup_distance(const ContinuousDiagram& a, const ContinuousDiagram& b) {
  // Candidate abscissae: all breakpoints and grid nodes of both profiles.
  // Between candidates both functions are linear, so the sup over candidates
  // is exact; pure-grid inputs are still resolved to their own nodes.
  std::vector<double> us;
  auto add = [&us](const ContinuousDiagram& d) {
    if (d.has_breakpoints())
      for (const auto& p : d.breakpoints()) us.push_back(p.first);
    if (d.has_grid()) {
      const GridFunction& g = d.grid();
      us.reserve(us.size() + g.values.size());
      for (int i = 0; i < g.n(); ++i) us.push_back(g.u0 + i * g.du);
    }
  };
  add(a);
  add(b);
  us.push_back(0.0);
  std::sort(us.begin(), us.end());
  double m = 0;
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::size_t i = 0; i < us.size(); ++i) {
    double d = std::abs(a.omega(us[i]) - b.omega(us[i]));
    if (d > m) m = d;
  }
  return m;
}

namespace {

Rational exact_from_double(double x) { return Rational(x); }

Rational breakpoint_sigma_area(const std::vector<std::pair<double, double>>& pts) {
  // Integral of sigma = (omega - |u|)/2 over the support, by trapezoids on
  // the breakpoint partition refined with u = 0. sigma is piecewise linear
  // on that partition, so the sum is exact in rational arithmetic.
  std::vector<Rational> us, sig;
  auto push = [&](double u, double v) {
    Rational ru = exact_from_double(u);
    Rational rv = exact_from_double(v);
    us.push_back(ru);
    sig.push_back((rv - (ru < 0 ? -ru : ru)) / 2);
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && pts[i - 1].first < 0 && pts[i].first > 0) {
      // insert the kink of |u|
      double t = (0 - pts[i - 1].first) / (pts[i].first - pts[i - 1].first);
      double v = pts[i - 1].second + t * (pts[i].second - pts[i - 1].second);
      push(0.0, v);
    }
    push(pts[i].first, pts[i].second);
  }
  Rational area = 0;
  for (std::size_t i = 1; i < us.size(); ++i)
    area += (sig[i - 1] + sig[i]) * (us[i] - us[i - 1]) / 2;
  return area;
}

} // namespace

Rational area_second_moment_exact(const ContinuousDiagram& w) {
  if (!w.has_breakpoints())
    throw std::invalid_argument("exact area requires a breakpoint profile");
  return breakpoint_sigma_area(w.breakpoints());
}

double area_second_moment(const ContinuousDiagram& w) {
  if (w.has_breakpoints()) return to_double(breakpoint_sigma_area(w.breakpoints()));
  const GridFunction& g = w.grid();
  double area = 0;
  for (int i = 1; i < g.n(); ++i) {
    double u0 = g.u0 + (i - 1) * g.du, u1 = g.u0 + i * g.du;
    double s0 = (g.values[i - 1] - std::abs(u0)) / 2;
    double s1 = (g.values[i] - std::abs(u1)) / 2;
    area += (s0 + s1) * g.du / 2;
  }
  return area;
}

} // namespace yfp
