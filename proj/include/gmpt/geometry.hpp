#pragma once

// Voxelized unit-size object geometry and material parameters.  The object B
// lives in ξ-coordinates inside [−1,1]³ on a uniform grid with center-point
// membership; physical size/frequency enter only through the dimensionless
// ν = ω σ* μ0 α² and μ_r.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gmpt/multiindex.hpp"

namespace gmpt {

inline constexpr double kMu0 = 4.0e-7 * 3.14159265358979323846;

struct Material {
  double alpha = 1.0;       // object scale in meters
  double mu_r = 1.0;        // relative permeability of B
  double sigma_star = 0.0;  // conductivity in S/m
  double omega = 0.0;       // angular frequency in rad/s
  std::optional<double> nu_direct;  // ν prescribed directly (overrides ω/σ*)

  double nu() const {
    return nu_direct ? *nu_direct : omega * sigma_star * kMu0 * alpha * alpha;
  }
};

// Uniform boolean occupancy grid over [−1,1]³ with n cells per axis and
// spacing h = 2/n.  Cell (i,j,k) has center (−1+h(i+1/2), ...).  Flat index
// (i·n + j)·n + k (k fastest).
class VoxelGrid {
 public:
  VoxelGrid() = default;
  VoxelGrid(int n, double h) : n_(n), h_(h), occ_(static_cast<size_t>(n) * n * n, 0) {}

  int n() const { return n_; }
  double h() const { return h_; }
  const std::vector<std::uint8_t>& raw() const { return occ_; }
  std::vector<std::uint8_t>& raw() { return occ_; }

  bool occupied(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_) return false;
    return occ_[index(i, j, k)] != 0;
  }
  void set(int i, int j, int k, bool value) { occ_[index(i, j, k)] = value ? 1 : 0; }

  Vec3 cell_center(int i, int j, int k) const {
    return Vec3(-1.0 + h_ * (i + 0.5), -1.0 + h_ * (j + 0.5), -1.0 + h_ * (k + 0.5));
  }

  // Membership of an arbitrary point via the voxel it falls in.
  bool contains(const Vec3& x) const;

  int count() const;
  double volume() const { return count() * h_ * h_ * h_; }

  // Volume of occupied cells having at least one unoccupied face neighbor —
  // the O(h) boundary-layer proxy used by the refinement test.
  double boundary_cell_volume() const;

  // Largest |ξ| over occupied cells, measured to the cell's outer corner.
  double bounding_radius() const;

  // Exact remap under a signed-permutation (90°-rotation/reflection) matrix.
  VoxelGrid transformed(const Eigen::Matrix3i& P) const;

  bool operator==(const VoxelGrid& o) const {
    return n_ == o.n_ && h_ == o.h_ && occ_ == o.occ_;
  }

 private:
  size_t index(int i, int j, int k) const {
    return (static_cast<size_t>(i) * n_ + j) * n_ + k;
  }

  int n_ = 0;
  double h_ = 0.0;
  std::vector<std::uint8_t> occ_;
};

struct ObjectSpec {
  VoxelGrid grid;
  Material material;
};

// Shape primitives for voxelization; all must fit inside the unit box.
struct Shape {
  enum class Kind { Sphere, Box, Cylinder, Union };

  Kind kind = Kind::Sphere;
  Vec3 center = Vec3::Zero();
  double radius = 0.0;       // sphere, cylinder
  Vec3 lo = Vec3::Zero();    // box
  Vec3 hi = Vec3::Zero();    // box
  int axis = 2;              // cylinder axis
  double half_height = 0.0;  // cylinder
  std::vector<Shape> children;

  static Shape sphere(double radius, const Vec3& center = Vec3::Zero());
  static Shape box(const Vec3& lo, const Vec3& hi);
  static Shape cylinder(double radius, double half_height, int axis = 2,
                        const Vec3& center = Vec3::Zero());
  static Shape unite(std::vector<Shape> parts);

  bool contains(const Vec3& x) const;
};

// Center-point voxelization on the [−1,1]³ grid with spacing h (2/h must be
// a near-integer cell count).  Throws if no cell is occupied.
VoxelGrid voxelize(const Shape& shape, double h);

}  // namespace gmpt
