#ifndef FRIS_SURFACE_HPP
#define FRIS_SURFACE_HPP

#include <Eigen/Dense>
#include <vector>

#include "fris/errors.hpp"

namespace fris {

/// Planar surface of mx * mz elements spread uniformly over an aperture of
/// (wx * wavelength) x (wz * wavelength). Element i sits at column i % mx,
/// row i / mx (0-based, row-major).
struct SurfaceGeometry {
  int mx = 1;
  int mz = 1;
  double wx = 1.0;  // aperture width, in wavelengths
  double wz = 1.0;  // aperture height, in wavelengths
  double wavelength = 1.0;  // meters

  int size() const { return mx * mz; }
  double dx() const { return wx * wavelength / mx; }
  double dz() const { return wz * wavelength / mz; }
  void validate() const;

  /// Square grid of side elements at a fixed pitch (in wavelengths).
  static SurfaceGeometry square_with_pitch(int side, double pitch_wavelengths, double wavelength);
};

struct ElementCoords {
  int ix;
  int iz;
};

ElementCoords index_to_coords(int i, const SurfaceGeometry& geometry);

/// Euclidean distance in meters between elements i and l.
double element_distance(int i, int l, const SurfaceGeometry& geometry);

/// Jakes correlation matrix J (unit diagonal) and its symmetric PSD root.
struct CorrelationMatrix {
  Eigen::MatrixXd j;
  Eigen::MatrixXd j_sqrt;
  double eigen_floor = 0.0;    // eigenvalues below this were clamped to 0
  double clamped_mass = 0.0;   // sum of |negative eigenvalues| removed
  double sqrt_residual = 0.0;  // ||j_sqrt * j_sqrt - j||_F
  int rank = 0;                // eigenvalues kept

  int size() const { return static_cast<int>(j.rows()); }
};

/// J[i][l] = J0(2 pi d_il / lambda). The square root comes from a symmetric
/// eigendecomposition with eigenvalues below 1e-12 * max clamped to zero.
CorrelationMatrix build_correlation(const SurfaceGeometry& geometry);

/// Ordered set of distinct active-element indices in [0, M).
class SelectionSet {
 public:
  SelectionSet() = default;
  SelectionSet(std::vector<int> indices, int total);

  static SelectionSet all(int total);
  static SelectionSet first(int count, int total);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  int total() const { return total_; }
  bool empty() const { return indices_.empty(); }
  int operator[](int k) const { return indices_[static_cast<std::size_t>(k)]; }

 private:
  std::vector<int> indices_;
  int total_ = 0;
};

/// Principal submatrix of j on the selected indices (S J S^T).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> reduce_correlation(
    const Eigen::MatrixBase<Derived>& j, const SelectionSet& sel) {
  if (j.rows() != j.cols() || j.rows() != sel.total()) {
    throw IndexError("reduce_correlation: selection does not match matrix size");
  }
  return j(sel.indices(), sel.indices());
}

/// tr(A^p) for symmetric A and p in {2, 4}: ||A||_F^2 and ||A^2||_F^2.
template <typename Derived>
typename Derived::RealScalar trace_power(const Eigen::MatrixBase<Derived>& a, int p) {
  if (a.rows() != a.cols()) throw DomainError("trace_power: matrix must be square");
  switch (p) {
    case 2:
      return a.squaredNorm();
    case 4: {
      const auto a2 = (a.derived() * a.derived()).eval();
      return a2.squaredNorm();
    }
    default:
      throw DomainError("trace_power: exponent must be 2 or 4");
  }
}

}  // namespace fris

#endif  // FRIS_SURFACE_HPP
