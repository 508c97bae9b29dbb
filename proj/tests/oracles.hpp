// Independent reference computations shared by the unit and acceptance tests.
// Nothing here calls into the sampler's step formulas.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "sqsample/math.hpp"
#include "sqsample/params.hpp"

namespace sq::oracle {

// Length of a parametric curve between t0 and t1 as the limit of inscribed
// polylines. The speed of a superellipse is singular at the ends for eps < 1,
// which rules out plain quadrature; a fine polyline converges regardless.
template <typename Curve>
double arc_length(const Curve& point, double t0, double t1, int pieces = 512) {
  double length = 0.0;
  auto prev = point(t0);
  for (int i = 1; i <= pieces; ++i) {
    const double t = i == pieces ? t1 : t0 + (t1 - t0) * i / pieces;
    const auto next = point(t);
    length += (next - prev).norm();
    prev = next;
  }
  return length;
}

// Parameter step that advances the curve by exactly `spacing` from t, found by
// bisection on the arc length.
template <typename Curve>
double invert_arc_length(const Curve& point, double t, double spacing, double t_max) {
  double lo = t, hi = t_max;
  if (arc_length(point, t, hi, 4096) < spacing) return hi - t;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (arc_length(point, t, mid, 4096) < spacing ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi) - t;
}

// Signed power. cos(pi/2) evaluates to ~6e-17 rather than 0, which small
// exponents would inflate to a visible offset, so such residues are zeroed.
inline double sp(double b, double e) {
  if (std::fabs(b) < 1e-15) return 0.0;
  return std::copysign(std::pow(std::fabs(b), e), b);
}

// Superquadric surface maps written out directly from the parametric form,
// without the library's helpers.
inline Vec3 superellipsoid(const SuperquadricParams& p, double eta, double omega) {
  const double ce = sp(std::cos(eta), p.shape.eps1), se = sp(std::sin(eta), p.shape.eps1);
  return {p.scale.a1 * ce * sp(std::cos(omega), p.shape.eps2),
          p.scale.a2 * ce * sp(std::sin(omega), p.shape.eps2), p.scale.a3 * se};
}

inline Vec3 superparaboloid(const SuperquadricParams& p, double u, double omega) {
  return {p.scale.a1 * u * sp(std::cos(omega), p.shape.eps2),
          p.scale.a2 * u * sp(std::sin(omega), p.shape.eps2),
          p.scale.a3 * (std::pow(u, 2.0 / p.shape.eps1) - 1.0)};
}

// Outward normal of a surface map by central differences: r_omega x r_first.
inline Vec3 fd_normal(const std::function<Vec3(double, double)>& map, double first, double omega,
                      double h = 1e-6) {
  const Vec3 r_first = (map(first + h, omega) - map(first - h, omega)) / (2.0 * h);
  const Vec3 r_omega = (map(first, omega + h) - map(first, omega - h)) / (2.0 * h);
  return r_omega.cross(r_first).normalized();
}

inline double cosine(const Vec3& a, const Vec3& b) { return a.dot(b) / (a.norm() * b.norm()); }

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Random valid parameters: scales with ratio <= 10, eps in [eps_lo, 2].
inline SuperquadricParams random_params(std::mt19937_64& rng, ShapeKind kind, double eps_lo = 0.1) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SuperquadricParams p;
  p.kind = kind;
  for (;;) {
    p.scale = {std::exp(std::log(0.3) + unit(rng) * std::log(10.0)),
               std::exp(std::log(0.3) + unit(rng) * std::log(10.0)),
               std::exp(std::log(0.3) + unit(rng) * std::log(10.0))};
    const double hi = std::max({p.scale.a1, p.scale.a2, p.scale.a3});
    const double lo = std::min({p.scale.a1, p.scale.a2, p.scale.a3});
    if (hi / lo <= 10.0) break;
  }
  p.shape = {eps_lo + (2.0 - eps_lo) * unit(rng), eps_lo + (2.0 - eps_lo) * unit(rng)};
  return p;
}

}  // namespace sq::oracle
