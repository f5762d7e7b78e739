#pragma once

#include <cmath>
#include <iosfwd>

namespace slicereg {

/// A quaternion x0 + x1 i + x2 j + x3 k.
struct Quaternion {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double re) : x0(re) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double a, double b, double c, double d)
      : x0(a), x1(b), x2(c), x3(d) {}

  constexpr double re() const { return x0; }
  constexpr Quaternion im() const { return {0.0, x1, x2, x3}; }
  constexpr Quaternion conj() const { return {x0, -x1, -x2, -x3}; }
  constexpr double norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
  double norm() const { return std::hypot(std::hypot(x0, x1), std::hypot(x2, x3)); }
  double im_norm() const { return std::hypot(x1, std::hypot(x2, x3)); }
  constexpr bool is_real() const { return x1 == 0.0 && x2 == 0.0 && x3 == 0.0; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    x0 *= s; x1 *= s; x2 *= s; x3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator-(const Quaternion& q) { return {-q.x0, -q.x1, -q.x2, -q.x3}; }
constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

/// Hamilton product: i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
          a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
          a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}

/// conj(q) / |q|^2. Throws DomainError for q = 0.
Quaternion inverse(const Quaternion& q);

/// Euclidean inner product of the imaginary parts.
constexpr double im_dot(const Quaternion& a, const Quaternion& b) {
  return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = 1e-9) {
  return distance(a, b) <= tol;
}

inline bool is_finite(const Quaternion& q) {
  return std::isfinite(q.x0) && std::isfinite(q.x1) && std::isfinite(q.x2) &&
         std::isfinite(q.x3);
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

struct SlicePoint;
SlicePoint slice_coords(const Quaternion& q);

/// A point of the unit sphere S of imaginary quaternions.
class ImaginaryUnit {
 public:
  /// Projects onto the imaginary part and normalizes; rejects |Im(u)| < 1e-12
  /// with NotASlicePoint.
  explicit ImaginaryUnit(const Quaternion& u);

  const Quaternion& value() const { return u_; }
  operator const Quaternion&() const { return u_; }  // NOLINT
  ImaginaryUnit operator-() const { return ImaginaryUnit(-u_, Normalized{}); }

  static ImaginaryUnit i() { return ImaginaryUnit(kI, Normalized{}); }
  static ImaginaryUnit j() { return ImaginaryUnit(kJ, Normalized{}); }
  static ImaginaryUnit k() { return ImaginaryUnit(kK, Normalized{}); }

  friend bool operator==(const ImaginaryUnit&, const ImaginaryUnit&) = default;

 private:
  struct Normalized {};
  ImaginaryUnit(const Quaternion& u, Normalized) : u_(u) {}
  friend struct SlicePoint;
  friend SlicePoint slice_coords(const Quaternion& q);

  Quaternion u_;
};

/// I_q = Im(q) / |Im(q)|. Throws NotASlicePoint when |Im(q)| <= 1e-12.
ImaginaryUnit imaginary_unit_of(const Quaternion& q);

/// q = x + y I with y >= 0. For real q the unit is the canonical i and
/// `arbitrary_unit` is set.
struct SlicePoint {
  double x = 0.0;
  double y = 0.0;
  ImaginaryUnit unit = ImaginaryUnit::i();
  bool arbitrary_unit = false;

  Quaternion to_quaternion() const { return Quaternion(x) + y * unit.value(); }
};

SlicePoint slice_coords(const Quaternion& q);

inline Quaternion from_slice(double x, double y, const ImaginaryUnit& unit) {
  return Quaternion(x) + y * unit.value();
}

/// Deterministic unit orthogonal to `unit`: Gram-Schmidt applied to the first
/// of i, j, k that is not (nearly) parallel to it.
ImaginaryUnit orthogonal_unit(const ImaginaryUnit& unit);

}  // namespace slicereg
