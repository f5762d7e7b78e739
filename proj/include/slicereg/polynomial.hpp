#pragma once

#include <cstddef>
#include <vector>

#include "slicereg/quaternion.hpp"

namespace slicereg {

/// f(q) = sum_n (q - p0)^n a_n with a real center p0 and quaternionic
/// coefficients on the right. Trailing zero coefficients are trimmed; the
/// zero polynomial has no coefficients and degree -1.
class SlicePolynomial {
 public:
  SlicePolynomial() = default;
  explicit SlicePolynomial(std::vector<Quaternion> coeffs, double center = 0.0);

  static SlicePolynomial constant(const Quaternion& a, double center = 0.0) {
    return SlicePolynomial({a}, center);
  }
  /// q - a, centered at 0.
  static SlicePolynomial linear(const Quaternion& root) { return SlicePolynomial({-root, kOne}); }

  double center() const { return center_; }
  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool has_real_coeffs() const;

  /// Horner evaluation with left multiplication by (q - p0).
  Quaternion operator()(const Quaternion& q) const;

  /// sum_n |a_n| r^n, the usual rounding-error envelope at |q - p0| = r.
  double majorant(double r) const;

  SlicePolynomial derivative() const;

  friend bool operator==(const SlicePolynomial&, const SlicePolynomial&) = default;

 private:
  std::vector<Quaternion> coeffs_;
  double center_ = 0.0;
};

/// Regular product: c_n = sum_{r<=n} a_r b_{n-r}. Centers must agree.
SlicePolynomial star_poly(const SlicePolynomial& f, const SlicePolynomial& g);

/// Regular conjugate: coefficient-wise quaternion conjugation.
SlicePolynomial conj_poly(const SlicePolynomial& f);

/// f * f^c; its coefficients are real.
SlicePolynomial symm_poly(const SlicePolynomial& f);

SlicePolynomial operator+(const SlicePolynomial& f, const SlicePolynomial& g);

}  // namespace slicereg
