#include "fris/surface.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fris/specfun.hpp"

namespace fris {

void SurfaceGeometry::validate() const {
  if (mx < 1 || mz < 1) throw ConfigError("surface: element counts must be >= 1");
  if (!(wx > 0.0) || !(wz > 0.0)) throw ConfigError("surface: aperture must be positive");
  if (!(wavelength > 0.0)) throw ConfigError("surface: wavelength must be positive");
  if (!(dx() > 0.0) || !(dz() > 0.0)) throw ConfigError("surface: element spacing must be positive");
}

SurfaceGeometry SurfaceGeometry::square_with_pitch(int side, double pitch_wavelengths, double wavelength) {
  SurfaceGeometry g{side, side, side * pitch_wavelengths, side * pitch_wavelengths, wavelength};
  g.validate();
  return g;
}

ElementCoords index_to_coords(int i, const SurfaceGeometry& geometry) {
  if (i < 0 || i >= geometry.size()) {
    throw IndexError("element index " + std::to_string(i) + " outside [0, " +
                     std::to_string(geometry.size()) + ")");
  }
  return {i % geometry.mx, i / geometry.mx};
}

double element_distance(int i, int l, const SurfaceGeometry& geometry) {
  const auto a = index_to_coords(i, geometry);
  const auto b = index_to_coords(l, geometry);
  const double ddx = geometry.dx() * (a.ix - b.ix);
  const double ddz = geometry.dz() * (a.iz - b.iz);
  return std::sqrt(ddx * ddx + ddz * ddz);
}

CorrelationMatrix build_correlation(const SurfaceGeometry& geometry) {
  geometry.validate();
  const int m = geometry.size();

  // J depends only on the lattice offset, so tabulate J0 once per (|dix|, |diz|).
  Eigen::MatrixXd offset_table(geometry.mx, geometry.mz);
  const double k0 = 2.0 * std::numbers::pi / geometry.wavelength;
  for (int ox = 0; ox < geometry.mx; ++ox) {
    for (int oz = 0; oz < geometry.mz; ++oz) {
      const double d = std::hypot(geometry.dx() * ox, geometry.dz() * oz);
      offset_table(ox, oz) = bessel_j0(k0 * d);
    }
  }

  CorrelationMatrix out;
  out.j.resize(m, m);
  for (int i = 0; i < m; ++i) {
    const auto ci = index_to_coords(i, geometry);
    for (int l = 0; l < m; ++l) {
      const auto cl = index_to_coords(l, geometry);
      out.j(i, l) = offset_table(std::abs(ci.ix - cl.ix), std::abs(ci.iz - cl.iz));
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(out.j);
  if (solver.info() != Eigen::Success) throw NumericError("build_correlation: eigendecomposition failed");

  Eigen::VectorXd lambda = solver.eigenvalues();
  out.eigen_floor = 1e-12 * lambda.maxCoeff();
  out.clamped_mass = 0.0;
  out.rank = 0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < 0.0) out.clamped_mass += -lambda(i);
    if (lambda(i) < out.eigen_floor) {
      lambda(i) = 0.0;
    } else {
      ++out.rank;
    }
  }
  const Eigen::MatrixXd& v = solver.eigenvectors();
  Eigen::MatrixXd root = v * lambda.cwiseSqrt().asDiagonal() * v.transpose();
  out.j_sqrt = 0.5 * (root + root.transpose());
  out.sqrt_residual = (out.j_sqrt * out.j_sqrt - out.j).norm();
  return out;
}

SelectionSet::SelectionSet(std::vector<int> indices, int total) : indices_(std::move(indices)), total_(total) {
  if (total_ < 1) throw IndexError("selection: surface must have at least one element");
  if (static_cast<int>(indices_.size()) > total_) throw IndexError("selection: more indices than elements");
  std::vector<bool> seen(static_cast<std::size_t>(total_), false);
  for (int idx : indices_) {
    if (idx < 0 || idx >= total_) throw IndexError("selection: index " + std::to_string(idx) + " out of range");
    if (seen[static_cast<std::size_t>(idx)]) throw IndexError("selection: duplicate index " + std::to_string(idx));
    seen[static_cast<std::size_t>(idx)] = true;
  }
}

SelectionSet SelectionSet::all(int total) { return first(total, total); }

SelectionSet SelectionSet::first(int count, int total) {
  if (count < 0 || count > total) throw IndexError("selection: count out of range");
  std::vector<int> idx(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) idx[static_cast<std::size_t>(i)] = i;
  return SelectionSet(std::move(idx), total);
}

}  // namespace fris
