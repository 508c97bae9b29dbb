#include "sqsample/surface.hpp"

#include <algorithm>
#include <cmath>

namespace sq {

namespace {

// One value of the first surface parameter (eta or u) in the first octant.
struct Row {
  double param;
  double radial;  // cos^e1(eta) or u
  double height;  // a3 sin^e1(eta) or a3 (u^(2/e1) - 1)
};

// One omega in [0, pi/2] with its powered cosine and sine.
struct Column {
  double omega;
  double c;
  double s;
};

struct Octant {
  double sx, sy, sz;
};

// Counter-clockwise around z, upper half first.
constexpr Octant kOctants[8] = {
    {1, 1, 1},  {-1, 1, 1},  {-1, -1, 1},  {1, -1, 1},
    {1, 1, -1}, {-1, 1, -1}, {-1, -1, -1}, {1, -1, -1},
};

double mirror_omega(double omega, double sx, double sy) {
  if (sx > 0) return sy > 0 ? omega : -omega;
  return sy > 0 ? kPi - omega : omega - kPi;
}

std::vector<Row> superellipsoid_rows(const SuperquadricParams& p, std::span<const double> etas) {
  std::vector<Row> rows;
  rows.reserve(etas.size());
  for (double eta : etas) {
    const CosSin cs = quarter_cos_sin(eta);
    rows.push_back({eta, std::pow(cs.cos, p.shape.eps1), p.scale.a3 * std::pow(cs.sin, p.shape.eps1)});
  }
  return rows;
}

std::vector<Row> superparaboloid_rows(const SuperquadricParams& p, std::span<const double> us) {
  std::vector<Row> rows;
  rows.reserve(us.size());
  const double exponent = 2.0 / p.shape.eps1;
  for (double u : us) {
    rows.push_back({u, u, p.scale.a3 * (std::pow(u, exponent) - 1.0)});
  }
  return rows;
}

std::vector<Column> columns(const SuperquadricParams& p, std::span<const double> omegas) {
  std::vector<Column> cols;
  cols.reserve(omegas.size());
  for (double omega : omegas) {
    const CosSin cs = quarter_cos_sin(omega);
    cols.push_back({omega, std::pow(cs.cos, p.shape.eps2), std::pow(cs.sin, p.shape.eps2)});
  }
  return cols;
}

std::vector<Row> rows_for(const SuperquadricParams& p, std::span<const double> first) {
  return p.kind == ShapeKind::Superellipsoid ? superellipsoid_rows(p, first)
                                             : superparaboloid_rows(p, first);
}

// Mirrors the first-octant product grid. A mirrored copy is skipped when the
// flipped coordinate is within half the seam tolerance of zero (the copy would
// land within kSeamTolerance of the original), and rings whose diameter is
// below the tolerance collapse to a single point.
SampledSurface assemble(const SuperquadricParams& p, const std::vector<Row>& rows,
                        const std::vector<Column>& cols) {
  const bool ellipsoid = p.kind == ShapeKind::Superellipsoid;
  const std::size_t octants = ellipsoid ? 8 : 4;
  const double half = 0.5 * kSeamTolerance;
  const double ring_scale = std::max(p.scale.a1, p.scale.a2);

  SampledSurface out;
  out.params = p;
  out.frame = Frame::Canonical;
  out.points.reserve(octants * rows.size() * cols.size());
  out.param_coords.reserve(octants * rows.size() * cols.size());

  for (std::size_t o = 0; o < octants; ++o) {
    const Octant& oct = kOctants[o];
    for (const Row& row : rows) {
      if (oct.sz < 0 && std::fabs(row.height) < half) continue;
      const bool collapsed = 2.0 * row.radial * ring_scale < kSeamTolerance;
      const double first = ellipsoid ? oct.sz * row.param : row.param;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (collapsed && j > 0) break;
        const Column& col = cols[j];
        const double x = p.scale.a1 * row.radial * col.c;
        const double y = p.scale.a2 * row.radial * col.s;
        if (oct.sx < 0 && x < half) continue;
        if (oct.sy < 0 && y < half) continue;
        out.points.emplace_back(oct.sx * x, oct.sy * y, oct.sz * row.height);
        out.param_coords.push_back({first, mirror_omega(col.omega, oct.sx, oct.sy)});
      }
    }
  }
  return out;
}

void require_kind(const SuperquadricParams& p, ShapeKind kind) {
  if (p.kind != kind) {
    throw Error(ErrorCode::WrongKind, kind == ShapeKind::Superellipsoid
                                          ? "expected superellipsoid parameters"
                                          : "expected superparaboloid parameters");
  }
}

std::vector<double> uniform_grid(double hi, std::size_t n) {
  std::vector<double> values(n);
  const double step = hi / static_cast<double>(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) values[i] = static_cast<double>(i) * step;
  values[n - 1] = hi;
  return values;
}

}  // namespace

SampledSurface sample_superellipsoid(const ValidatedParams& params, const SamplingConfig& config) {
  const SuperquadricParams& p = params.get();
  require_kind(p, ShapeKind::Superellipsoid);
  const AngleSequence etas =
      sample_superellipse_angles({1.0, p.scale.a3, p.shape.eps1}, config);
  const AngleSequence omegas =
      sample_superellipse_angles({p.scale.a1, p.scale.a2, p.shape.eps2}, config);
  return assemble(p, superellipsoid_rows(p, etas.values), columns(p, omegas.values));
}

SampledSurface sample_superparaboloid(const ValidatedParams& params, const SamplingConfig& config) {
  const SuperquadricParams& p = params.get();
  require_kind(p, ShapeKind::Superparaboloid);
  const ParamSequence us = sample_superparabola_params(p.scale.a3, p.shape.eps1, config);
  const AngleSequence omegas =
      sample_superellipse_angles({p.scale.a1, p.scale.a2, p.shape.eps2}, config);
  return assemble(p, superparaboloid_rows(p, us.values), columns(p, omegas.values));
}

SampledSurface sample_surface(const ValidatedParams& params, const SamplingConfig& config) {
  return params->kind == ShapeKind::Superellipsoid ? sample_superellipsoid(params, config)
                                                   : sample_superparaboloid(params, config);
}

SampledSurface naive_sample(const ValidatedParams& params, std::size_t n_first,
                            std::size_t n_omega) {
  if (n_first < 2 || n_omega < 2) {
    throw Error(ErrorCode::InvalidConfig, "naive grid needs at least 2x2 samples");
  }
  const SuperquadricParams& p = params.get();
  const double first_hi = p.kind == ShapeKind::Superellipsoid ? kHalfPi : 1.0;
  const auto first = uniform_grid(first_hi, n_first);
  const auto omegas = uniform_grid(kHalfPi, n_omega);
  return assemble(p, rows_for(p, first), columns(p, omegas));
}

std::vector<Vec3> first_octant_grid(const SuperquadricParams& p,
                                    std::span<const double> first_values,
                                    std::span<const double> omega_values) {
  const auto rows = rows_for(p, first_values);
  const auto cols = columns(p, omega_values);
  std::vector<Vec3> grid;
  grid.reserve(rows.size() * cols.size());
  for (const Row& row : rows) {
    for (const Column& col : cols) {
      grid.emplace_back(p.scale.a1 * row.radial * col.c, p.scale.a2 * row.radial * col.s,
                        row.height);
    }
  }
  return grid;
}

Vec3 surface_point(const SuperquadricParams& p, double first, double omega) {
  const CosSin w = cos_sin(omega);
  const double cw = signed_pow(w.cos, p.shape.eps2);
  const double sw = signed_pow(w.sin, p.shape.eps2);
  if (p.kind == ShapeKind::Superellipsoid) {
    const CosSin e = cos_sin(first);
    const double ce = signed_pow(e.cos, p.shape.eps1);
    return {p.scale.a1 * ce * cw, p.scale.a2 * ce * sw,
            p.scale.a3 * signed_pow(e.sin, p.shape.eps1)};
  }
  return {p.scale.a1 * first * cw, p.scale.a2 * first * sw,
          p.scale.a3 * (std::pow(first, 2.0 / p.shape.eps1) - 1.0)};
}

}  // namespace sq
