#include "slicereg/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "slicereg/errors.hpp"

namespace slicereg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool shape_contains(const Shape& s, double x, double y) {
  return std::visit(Overloaded{
                        [&](const Box& b) { return b.x0 < x && x < b.x1 && b.y0 < y && y < b.y1; },
                        [&](const Disc& d) {
                          const double dx = x - d.cx, dy = y - d.cy;
                          return dx * dx + dy * dy < d.r * d.r;
                        },
                    },
                    s);
}

struct Extent {
  double x0, x1, y0, y1;
};

Extent shape_extent(const Shape& s) {
  return std::visit(Overloaded{
                        [](const Box& b) { return Extent{b.x0, b.x1, b.y0, b.y1}; },
                        [](const Disc& d) {
                          return Extent{d.cx - d.r, d.cx + d.r, d.cy - d.r, d.cy + d.r};
                        },
                    },
                    s);
}

// Raster window: the hull of the finite extents, with unbounded directions
// clipped one unit beyond it.
Extent raster_window(const Region& region) {
  Extent hull{kInf, -kInf, kInf, -kInf};
  bool any_finite = false;
  for (const auto& s : region.shapes()) {
    const Extent e = shape_extent(s);
    for (double v : {e.x0, e.x1}) {
      if (std::isfinite(v)) { hull.x0 = std::min(hull.x0, v); hull.x1 = std::max(hull.x1, v); any_finite = true; }
    }
    for (double v : {std::abs(e.y0), std::abs(e.y1)}) {
      if (std::isfinite(v)) { hull.y1 = std::max(hull.y1, v); any_finite = true; }
    }
  }
  if (!any_finite) return {-10.0, 10.0, -10.0, 10.0};
  if (!std::isfinite(hull.x0)) { hull.x0 = -1.0; hull.x1 = 1.0; }
  if (!std::isfinite(hull.y1)) hull.y1 = 1.0;
  Extent w{hull.x0, hull.x1, -hull.y1, hull.y1};
  for (const auto& s : region.shapes()) {
    const Extent e = shape_extent(s);
    if (!std::isfinite(e.x0)) w.x0 = hull.x0 - 1.0;
    if (!std::isfinite(e.x1)) w.x1 = hull.x1 + 1.0;
    if (!std::isfinite(e.y0) || !std::isfinite(e.y1)) { w.y0 = -hull.y1 - 1.0; w.y1 = hull.y1 + 1.0; }
  }
  return w;
}

}  // namespace

Region Region::whole_plane() { return Region({Box{-kInf, kInf, -kInf, kInf}}); }

Region Region::half_plane_box(double a, double b, double c) { return Region({Box{a, b, -c, c}}); }

bool Region::contains(double x, double y) const {
  return std::any_of(shapes_.begin(), shapes_.end(),
                     [&](const Shape& s) { return shape_contains(s, x, y); });
}

bool Region::is_bounded() const {
  return std::all_of(shapes_.begin(), shapes_.end(), [](const Shape& s) {
    const Extent e = shape_extent(s);
    return std::isfinite(e.x0) && std::isfinite(e.x1) && std::isfinite(e.y0) && std::isfinite(e.y1);
  });
}

std::vector<std::pair<double, double>> Region::real_trace() const {
  std::vector<std::pair<double, double>> iv;
  for (const auto& s : shapes_) {
    std::visit(Overloaded{
                   [&](const Box& b) {
                     if (b.y0 < 0.0 && 0.0 < b.y1 && b.x0 < b.x1) iv.emplace_back(b.x0, b.x1);
                   },
                   [&](const Disc& d) {
                     if (std::abs(d.cy) < d.r) {
                       const double h = std::sqrt(d.r * d.r - d.cy * d.cy);
                       iv.emplace_back(d.cx - h, d.cx + h);
                     }
                   },
               },
               s);
  }
  std::sort(iv.begin(), iv.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& p : iv) {
    if (!merged.empty() && p.first < merged.back().second)
      merged.back().second = std::max(merged.back().second, p.second);
    else
      merged.push_back(p);
  }
  return merged;
}

bool Region::is_conjugation_symmetric(double grid_step) const {
  const bool each_symmetric = std::all_of(shapes_.begin(), shapes_.end(), [](const Shape& s) {
    return std::visit(Overloaded{
                          [](const Box& b) { return b.y0 == -b.y1; },
                          [](const Disc& d) { return d.cy == 0.0; },
                      },
                      s);
  });
  if (each_symmetric) return true;
  const Extent w = raster_window(*this);
  const double ymax = std::max(std::abs(w.y0), std::abs(w.y1));
  for (double x = w.x0 + 0.5 * grid_step; x < w.x1; x += grid_step)
    for (double y = 0.5 * grid_step; y < ymax; y += grid_step)
      if (contains(x, y) != contains(x, -y)) return false;
  return true;
}

Region Region::united(const Region& other) const {
  auto shapes = shapes_;
  shapes.insert(shapes.end(), other.shapes_.begin(), other.shapes_.end());
  return Region(std::move(shapes));
}

int count_slice_components(const Region& region, double grid_step) {
  if (!(grid_step > 0.0)) throw PreconditionError("grid step must be positive");
  if (region.empty()) return 0;
  for (const auto& s : region.shapes()) {
    const Extent e = shape_extent(s);
    if (e.x0 == -kInf && e.x1 == kInf && e.y0 == -kInf && e.y1 == kInf) return 1;
  }
  const Extent w = raster_window(region);
  const double ymax = std::max(std::abs(w.y0), std::abs(w.y1));
  const auto nx = static_cast<long>(std::ceil((w.x1 - w.x0) / grid_step));
  const auto ny = static_cast<long>(std::ceil(2.0 * ymax / grid_step));
  if (nx <= 0 || ny <= 0) return 0;
  std::vector<char> inside(static_cast<std::size_t>(nx * ny), 0);
  for (long ix = 0; ix < nx; ++ix) {
    const double x = w.x0 + (ix + 0.5) * grid_step;
    for (long iy = 0; iy < ny; ++iy) {
      const double y = -ymax + (iy + 0.5) * grid_step;
      inside[ix * ny + iy] = region.contains(x, y) || region.contains(x, -y);
    }
  }
  int components = 0;
  std::vector<char> seen(inside.size(), 0);
  std::queue<long> todo;
  for (long start = 0; start < nx * ny; ++start) {
    if (!inside[start] || seen[start]) continue;
    ++components;
    seen[start] = 1;
    todo.push(start);
    while (!todo.empty()) {
      const long c = todo.front();
      todo.pop();
      const long ix = c / ny, iy = c % ny;
      const long nbr[4][2] = {{ix - 1, iy}, {ix + 1, iy}, {ix, iy - 1}, {ix, iy + 1}};
      for (const auto& n : nbr) {
        if (n[0] < 0 || n[0] >= nx || n[1] < 0 || n[1] >= ny) continue;
        const long id = n[0] * ny + n[1];
        if (inside[id] && !seen[id]) {
          seen[id] = 1;
          todo.push(id);
        }
      }
    }
  }
  return components;
}

AxialDomain::AxialDomain(Region region, double grid_step)
    : region_(std::move(region)), grid_step_(grid_step) {
  contains_real_ = !region_.real_trace().empty();
  is_s_domain_ = contains_real_ && count_slice_components(region_, grid_step_) == 1;
}

bool AxialDomain::contains_xy(double x, double y) const {
  return region_.contains(x, y) || region_.contains(x, -y);
}

AxialDomain symmetric_completion(const Region& slice_region, double grid_step) {
  return AxialDomain(slice_region, grid_step);
}

}  // namespace slicereg
