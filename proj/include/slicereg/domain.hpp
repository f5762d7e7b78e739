#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "slicereg/quaternion.hpp"

namespace slicereg {

/// Open box x0 < x < x1, y0 < y < y1 in the coordinates (x, y) of one slice.
struct Box {
  double x0, x1, y0, y1;
};

/// Open disc of radius r centered at (cx, cy) in slice coordinates.
struct Disc {
  double cx, cy, r;
};

using Shape = std::variant<Box, Disc>;

/// A union of boxes and discs in a single slice L_J, with signed y.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Shape> shapes) : shapes_(std::move(shapes)) {}

  static Region whole_plane();
  /// Box {a < x < b, |y| < c}: the half-plane box [0, c) mirrored.
  static Region half_plane_box(double a, double b, double c);
  static Region disc(double cx, double cy, double r) { return Region({Disc{cx, cy, r}}); }

  const std::vector<Shape>& shapes() const { return shapes_; }
  bool empty() const { return shapes_.empty(); }
  bool contains(double x, double y) const;
  bool is_bounded() const;

  /// Merged open intervals of the real trace, infinite ends kept as +-inf.
  std::vector<std::pair<double, double>> real_trace() const;

  /// Closed under (x, y) -> (x, -y). Exact when every shape is itself
  /// symmetric; otherwise sampled on a grid of the given step.
  bool is_conjugation_symmetric(double grid_step = 1e-2) const;

  Region united(const Region& other) const;

 private:
  std::vector<Shape> shapes_;
};

/// An axially symmetric set of quaternions, stored as the source slice region
/// whose symmetric completion it is. Membership of q depends only on
/// (Re q, |Im q|).
class AxialDomain {
 public:
  AxialDomain() : AxialDomain(Region::whole_plane()) {}
  explicit AxialDomain(Region region, double grid_step = 1e-2);

  static AxialDomain everything() { return AxialDomain(); }

  const Region& region() const { return region_; }
  bool contains(const Quaternion& q) const { return contains_xy(q.re(), q.im_norm()); }
  /// Shadow membership; y is taken as |y|.
  bool contains_xy(double x, double y) const;

  bool contains_real() const { return contains_real_; }
  bool axially_symmetric() const { return true; }
  bool is_s_domain() const { return is_s_domain_; }
  double grid_step() const { return grid_step_; }

 private:
  Region region_;
  double grid_step_;
  bool contains_real_ = false;
  bool is_s_domain_ = false;
};

/// Union of the spheres x + y S over the points x + yJ of the region.
/// is_s_domain is set when the region meets the real axis and a slice of the
/// completion is connected on a raster of the given step.
AxialDomain symmetric_completion(const Region& slice_region, double grid_step = 1e-2);

/// Number of 4-connected components of the slice {(x, y) : (x, |y|) in the
/// shadow} rasterized at cell centers. Exposed for tests.
int count_slice_components(const Region& region, double grid_step);

}  // namespace slicereg
