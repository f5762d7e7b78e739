#pragma once

#include "slicereg/domain.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/slice_expr.hpp"

namespace slicereg {

/// Value at target = x + yI of a regular function from its values
/// f_plus = f(x + yJ) and f_minus = f(x - yJ) on one slice.
Quaternion representation(const Quaternion& f_plus, const Quaternion& f_minus,
                          const ImaginaryUnit& J, const SlicePoint& target);

/// Value at target = x + yI from vJ = f(x + yJ) and vK = f(x + yK) on two
/// distinct slices. Throws DegenerateUnits when |J - K| <= 1e-9.
Quaternion general_representation(const Quaternion& vJ, const Quaternion& vK,
                                  const ImaginaryUnit& J, const ImaginaryUnit& K,
                                  const SlicePoint& target);

/// f(x + yI) = b + I c on the sphere x + yS.
struct AffineCoeffs {
  Quaternion b;
  Quaternion c;
};

/// (b, c) from the values at x +- y i. Requires y > 0.
AffineCoeffs sphere_affine_coeffs(const SliceExpr& f, double x, double y);

/// Regular extension of stems r on L_J and s on L_K to the symmetric completion
/// of r's domain. The real traces must agree at 32 sample points within
/// 1e-9 max(1, |r|).
SliceExpr extend(const StemFunction& r, const StemFunction& s);

/// Regular extension of a stem holomorphic on a conjugation-symmetric domain
/// of its slice that meets the real axis.
SliceExpr ext_from_holomorphic(const StemFunction& f);

/// 32 evenly spaced points of the real trace of a region (infinite ends
/// clipped to a window of width 4). Empty when there is no trace.
std::vector<double> real_trace_samples(const Region& region, int count = 32);

}  // namespace slicereg
