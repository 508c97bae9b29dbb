#include "sqsample/sampler2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace sq {

namespace {

void check_shape(double a, double b, double eps) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    std::ostringstream os;
    os << "curve scales a=" << a << " b=" << b;
    throw Error(ErrorCode::NonPositiveScale, os.str());
  }
  if (!(eps >= kMinEps && eps <= kMaxEps)) {
    std::ostringstream os;
    os << "eps=" << eps;
    throw Error(ErrorCode::EpsOutOfRange, os.str());
  }
}

void check_cap(std::size_t count, const SamplingConfig& config) {
  if (count > config.max_samples_per_curve) {
    std::ostringstream os;
    os << "more than " << config.max_samples_per_curve << " samples on one curve (spacing "
       << config.spacing << ")";
    throw Error(ErrorCode::SampleCapExceeded, os.str());
  }
}

// Distance of a chord from the target spacing, symmetric in over/undershoot.
double spacing_error(const Vec2& p, const Vec2& q, double spacing) {
  const double chord = (q - p).norm();
  if (!(chord > 0.0)) return std::numeric_limits<double>::infinity();
  return std::fabs(std::log(chord / spacing));
}

// Joins the ascending pass (0 .. first value >= pi/4) with the descending pass
// (pi/2 .. first value <= pi/4). The two overshooting samples straddle pi/4 and
// would pile up if both were kept; instead every way of keeping at most one of
// them, optionally dropping the last regular sample on either side, is scored
// by its worst chord against the spacing and the best one wins.
std::vector<double> merge_passes(std::vector<double> ascending, std::vector<double> descending,
                                 const Superellipse& curve, double spacing) {
  const double up_overshoot = ascending.back();
  ascending.pop_back();
  const double down_overshoot = descending.back();
  descending.pop_back();

  const std::size_t na = ascending.size();
  const std::size_t nd = descending.size();
  const bool can_drop_left = na >= 2;
  const bool can_drop_right = nd >= 2;

  struct Choice {
    bool drop_left = false;
    bool drop_right = false;
    std::optional<double> middle;
  };
  Choice best;
  double best_score = std::numeric_limits<double>::infinity();

  std::vector<double> window;
  window.reserve(5);
  for (int drop_left = 0; drop_left <= (can_drop_left ? 1 : 0); ++drop_left) {
    for (int drop_right = 0; drop_right <= (can_drop_right ? 1 : 0); ++drop_right) {
      const std::optional<double> middles[] = {up_overshoot, down_overshoot, std::nullopt};
      for (const auto& middle : middles) {
        window.clear();
        if (na >= 2) window.push_back(ascending[na - 2]);
        if (na < 2 || !drop_left) window.push_back(ascending[na - 1]);
        if (middle) window.push_back(*middle);
        if (nd < 2 || !drop_right) window.push_back(descending[nd - 1]);
        if (nd >= 2) window.push_back(descending[nd - 2]);

        if (!std::is_sorted(window.begin(), window.end(), std::less_equal<>())) continue;
        if (std::adjacent_find(window.begin(), window.end()) != window.end()) continue;

        double score = 0.0;
        for (std::size_t i = 1; i < window.size(); ++i) {
          score = std::max(score, spacing_error(curve.point(window[i - 1]),
                                                curve.point(window[i]), spacing));
        }
        if (score < best_score) {
          best_score = score;
          best = {drop_left != 0, drop_right != 0, middle};
        }
      }
    }
  }

  if (best.drop_left) ascending.pop_back();
  if (best.drop_right) descending.pop_back();
  std::vector<double> merged = std::move(ascending);
  merged.reserve(merged.size() + descending.size() + 1);
  if (best.middle) merged.push_back(*best.middle);
  merged.insert(merged.end(), descending.rbegin(), descending.rend());
  return merged;
}

bool near_singular(double theta, double singular) {
  return theta <= singular || kHalfPi - theta <= singular;
}

// delta_theta is a forward (Euler) step of d(theta)/ds = 1/|r'(theta)|, which
// over- or undershoots wherever the speed changes quickly across the step.
// Re-evaluating it at the step's midpoint removes the first-order error. The
// near-singular branches are closed-form advances and are used as they are.
double pass_step(double theta, double direction, const Superellipse& curve, double spacing,
                 double singular) {
  const double euler = delta_theta(theta, curve, spacing, singular);
  if (near_singular(theta, singular)) return euler;
  const double mid = std::clamp(theta + direction * 0.5 * euler, 0.0, kHalfPi);
  if (near_singular(mid, singular)) return euler;
  return delta_theta(mid, curve, spacing, singular);
}

// Same midpoint correction for the superparabola.
double u_step(double u, double a3, double eps1, double spacing) {
  const double euler = delta_u(u, a3, eps1, spacing);
  return delta_u(std::min(u + 0.5 * euler, 1.0), a3, eps1, spacing);
}

}  // namespace

Vec2 Superellipse::point(double theta) const {
  const CosSin cs = quarter_cos_sin(theta);
  return {a * std::pow(cs.cos, eps), b * std::pow(cs.sin, eps)};
}

Vec2 Superparabola::point(double u) const {
  return {u, a3 * (std::pow(u, 2.0 / eps1) - 1.0)};
}

double delta_theta(double theta, const Superellipse& curve, double spacing,
                   double theta_singular) {
  const double e = curve.eps;
  double step;
  if (theta <= theta_singular) {
    step = std::pow(std::pow(theta, e) + spacing / curve.b, 1.0 / e) - theta;
  } else if (kHalfPi - theta <= theta_singular) {
    const double phi = kHalfPi - theta;
    step = std::pow(std::pow(phi, e) + spacing / curve.a, 1.0 / e) - phi;
  } else {
    const CosSin cs = quarter_cos_sin(theta);
    const double c2 = cs.cos * cs.cos;
    const double s2 = cs.sin * cs.sin;
    const double den = curve.a * curve.a * std::pow(cs.cos, 2.0 * e) * s2 * s2 +
                       curve.b * curve.b * std::pow(cs.sin, 2.0 * e) * c2 * c2;
    step = (spacing / e) * std::sqrt(c2 * s2 / den);
  }
  if (!std::isfinite(step)) {
    std::ostringstream os;
    os << "angular step at theta=" << theta << " (a=" << curve.a << ", b=" << curve.b
       << ", eps=" << e << ", spacing=" << spacing << ")";
    throw Error(ErrorCode::NonFiniteResult, os.str());
  }
  return std::max(step, kMinStep);
}

AngleSequence sample_superellipse_angles(const Superellipse& curve, const SamplingConfig& config) {
  check_config(config);
  check_shape(curve.a, curve.b, curve.eps);

  const double spacing = config.spacing;
  const double singular = config.theta_singular;

  std::vector<double> ascending{0.0};
  while (ascending.back() < kQuarterPi) {
    const double theta = ascending.back();
    ascending.push_back(theta + pass_step(theta, +1.0, curve, spacing, singular));
    check_cap(ascending.size(), config);
  }

  std::vector<double> descending{kHalfPi};
  while (descending.back() > kQuarterPi) {
    const double theta = descending.back();
    descending.push_back(theta - pass_step(theta, -1.0, curve, spacing, singular));
    check_cap(ascending.size() + descending.size(), config);
  }

  return {merge_passes(std::move(ascending), std::move(descending), curve, spacing), true};
}

double delta_u(double u, double a3, double eps1, double spacing) {
  const double slope_sq = 4.0 * a3 * a3 / (eps1 * eps1) * std::pow(u, 4.0 / eps1 - 2.0);
  const double step = spacing / std::sqrt(slope_sq + 1.0);
  // An infinite slope term would quietly give a zero step.
  if (!std::isfinite(slope_sq) || !std::isfinite(step)) {
    std::ostringstream os;
    os << "parameter step at u=" << u << " (a3=" << a3 << ", eps1=" << eps1
       << ", spacing=" << spacing << ")";
    throw Error(ErrorCode::NonFiniteResult, os.str());
  }
  return std::max(step, kMinStep);
}

ParamSequence sample_superparabola_params(double a3, double eps1, const SamplingConfig& config) {
  check_config(config);
  check_shape(1.0, a3, eps1);

  const Superparabola curve{a3, eps1};
  const double spacing = config.spacing;
  std::vector<double> u{0.0};
  for (;;) {
    const double next = u.back() + u_step(u.back(), a3, eps1, spacing);
    if (next < 1.0) {
      u.push_back(next);
      check_cap(u.size() + 1, config);
      continue;
    }
    // Overshot: land on 1 either by appending it or by moving the last
    // interior sample there, whichever chord is closer to the spacing.
    if (u.size() >= 2) {
      const Vec2 end = curve.point(1.0);
      const double append = spacing_error(curve.point(u.back()), end, spacing);
      const double replace = spacing_error(curve.point(u[u.size() - 2]), end, spacing);
      if (replace < append) {
        u.back() = 1.0;
        break;
      }
    }
    u.push_back(1.0);
    break;
  }
  return {std::move(u)};
}

}  // namespace sq
