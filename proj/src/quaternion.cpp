#include "slicereg/quaternion.hpp"

#include <array>
#include <ostream>

#include "slicereg/errors.hpp"

namespace slicereg {

namespace {
constexpr double kUnitFloor = 1e-12;
}

Quaternion inverse(const Quaternion& q) {
  const double n2 = q.norm2();
  if (n2 == 0.0 || !std::isfinite(n2)) throw DomainError("inverse of zero quaternion");
  return q.conj() / n2;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "[" << q.x0 << ", " << q.x1 << ", " << q.x2 << ", " << q.x3 << "]";
}

ImaginaryUnit::ImaginaryUnit(const Quaternion& u) {
  const double n = u.im_norm();
  if (!(n >= kUnitFloor)) throw NotASlicePoint("imaginary part too small to define a unit");
  u_ = u.im() / n;
}

ImaginaryUnit imaginary_unit_of(const Quaternion& q) { return ImaginaryUnit(q); }

SlicePoint slice_coords(const Quaternion& q) {
  const double y = q.im_norm();
  if (y == 0.0) return SlicePoint{q.x0, 0.0, ImaginaryUnit::i(), true};
  // Tiny imaginary parts are still normalized so that x + yI reproduces q.
  return SlicePoint{q.x0, y, ImaginaryUnit(q.im() / y, ImaginaryUnit::Normalized{}), false};
}

ImaginaryUnit orthogonal_unit(const ImaginaryUnit& unit) {
  static constexpr std::array<Quaternion, 3> kAxes{kI, kJ, kK};
  const Quaternion& u = unit.value();
  for (const auto& e : kAxes) {
    const double d = im_dot(e, u);
    if (std::abs(d) < 0.9) return ImaginaryUnit(e - d * u);
  }
  // Unreachable: some axis has |<e,u>| <= 1/sqrt(3).
  throw DomainError("no orthogonal unit found");
}

}  // namespace slicereg
