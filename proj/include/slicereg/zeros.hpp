#pragma once

#include <optional>
#include <span>
#include <vector>

#include "slicereg/errors.hpp"
#include "slicereg/polynomial.hpp"
#include "slicereg/slice_expr.hpp"

namespace slicereg {

/// Zero set of a regular function on one sphere x + yS.
struct SphereZero {
  enum class Kind { None, Isolated, Spherical };

  double x = 0.0;
  double y = 0.0;
  Kind kind = Kind::None;
  /// Set for Isolated; for a real point (y = 0) it is the canonical i and
  /// arbitrary_unit is true.
  std::optional<ImaginaryUnit> unit;
  bool arbitrary_unit = false;
  /// |f| at the reported zero (Isolated), |b| + |c| (Spherical), or |f| at
  /// the best candidate (None).
  double residual = 0.0;
  /// False when the root iteration that produced this sphere did not
  /// converge.
  bool converged = true;
};

const char* to_string(SphereZero::Kind kind);

SphereZero sphere_zero_classify(const SliceExpr& f, double x, double y, double tol);

struct AberthOptions {
  int max_iterations = 200;
  double step_tol = 1e-13;
};

struct AberthResult {
  std::vector<Complex> roots;
  std::vector<bool> converged;
  int iterations = 0;
  bool all_converged() const;
};

/// Simultaneous Aberth-Ehrlich iteration for sum_k coeffs[k] z^k. Initial
/// guesses lie on the circle of radius 1 + max_k |c_k / c_n|.
AberthResult aberth_roots(std::span<const Complex> coeffs, const AberthOptions& opts = {});

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, std::vector<SphereZero> partial)
      : Error(what), partial_(std::move(partial)) {}
  const std::vector<SphereZero>& partial() const { return partial_; }

 private:
  std::vector<SphereZero> partial_;
};

inline constexpr double kDefaultRootTol = 1e-8;

/// Zero spheres of a polynomial, found from the complex roots of f^s on L_i
/// and classified one sphere at a time.
std::vector<SphereZero> poly_roots(const SlicePolynomial& f, double tol = kDefaultRootTol);

struct StarZeroCheck {
  bool holds = false;            ///< predicate agrees with |f*g(q)| < tol
  bool product_vanishes = false;
  bool left_vanishes = false;    ///< f(q) = 0
  bool right_vanishes = false;   ///< g(f(q)^{-1} q f(q)) = 0 (only when f(q) != 0)
  double product_norm = 0.0;
};

StarZeroCheck star_zero_check(const SliceExpr& f, const SliceExpr& g, const Quaternion& q,
                              double tol);

/// (q^2 - 2 Re(s) q + |s|^2)^{-1} (q - conj(s)). Throws SingularPoint on the
/// sphere Re(s) + |Im(s)| S.
Quaternion cauchy_kernel(const Quaternion& s, const Quaternion& q);

}  // namespace slicereg
