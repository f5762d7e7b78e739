#pragma once

#include <vector>

#include <json.hpp>

#include "slicereg/domain.hpp"
#include "slicereg/errors.hpp"
#include "slicereg/polynomial.hpp"
#include "slicereg/slice_expr.hpp"
#include "slicereg/verify.hpp"
#include "slicereg/zeros.hpp"

namespace slicereg {

using Json = nlohmann::json;

/// Input that is valid JSON but does not follow one of the encodings below.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// [x0, x1, x2, x3], finite doubles only.
Json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const Json& j);

/// {"center": p0, "coeffs": [[...], ...]}
Json to_json(const SlicePolynomial& p);
SlicePolynomial polynomial_from_json(const Json& j);

/// {"boxes": [{"x0", "x1", "y1", "y0"?}], "discs": [{"cx", "cy", "r"}]}.
/// y0 defaults to -y1; null stands for an infinite bound.
Json to_json(const Region& r);
Region region_from_json(const Json& j);

/// {"unit": [...], "center": p0, "coeffs": [...], "domain"?}: the restriction
/// of a polynomial to the slice of `unit`. Only stems built that way are
/// serializable.
Json to_json(const StemFunction& s);
StemFunction stem_from_json(const Json& j);

/// Tagged objects:
///   {"op":"poly", "center", "coeffs", "domain"?}
///   {"op":"ext", "stem"} or {"op":"ext", "r", "s"}
///   {"op":"star"|"sum", "left", "right"}
///   {"op":"conj"|"symm"|"recip", "arg"}
///   {"op":"rscale", "arg", "scalar"}
///   {"op":"map", "name":"conj"}   (the non-regular q -> conj(q))
/// Ext nodes are built through ext_from_holomorphic / extend, so their
/// validation errors surface while parsing.
Json to_json(const SliceExpr& f);
SliceExpr expr_from_json(const Json& j, double grid_step = 1e-2);

/// {"x", "y", "kind", "unit"?, "residual"}
Json to_json(const SphereZero& z);
SphereZero sphere_zero_from_json(const Json& j);
Json to_json(const std::vector<SphereZero>& zs);

/// Infinite residuals are written as null.
Json to_json(const CheckReport& r);
CheckReport check_report_from_json(const Json& j);

}  // namespace slicereg
