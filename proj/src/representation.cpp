#include "slicereg/representation.hpp"

#include <algorithm>
#include <cmath>

#include "slicereg/errors.hpp"

namespace slicereg {

namespace {
constexpr double kUnitSeparation = 1e-9;
constexpr double kTraceTol = 1e-9;
}  // namespace

Quaternion representation(const Quaternion& f_plus, const Quaternion& f_minus,
                          const ImaginaryUnit& J, const SlicePoint& target) {
  return 0.5 * (f_plus + f_minus) + target.unit.value() * (0.5 * (J.value() * (f_minus - f_plus)));
}

Quaternion general_representation(const Quaternion& vJ, const Quaternion& vK,
                                  const ImaginaryUnit& J, const ImaginaryUnit& K,
                                  const SlicePoint& target) {
  const Quaternion diff = J.value() - K.value();
  if (diff.norm() <= kUnitSeparation) throw DegenerateUnits("J and K coincide");
  const Quaternion d = inverse(diff);
  return d * (J.value() * vJ - K.value() * vK) + target.unit.value() * (d * (vJ - vK));
}

AffineCoeffs sphere_affine_coeffs(const SliceExpr& f, double x, double y) {
  if (!(y > 0.0)) throw PreconditionError("sphere_affine_coeffs needs y > 0");
  const Quaternion plus = eval(f, Quaternion(x, y, 0.0, 0.0));
  const Quaternion minus = eval(f, Quaternion(x, -y, 0.0, 0.0));
  return {0.5 * (plus + minus), 0.5 * (kI * (minus - plus))};
}

std::vector<double> real_trace_samples(const Region& region, int count) {
  auto trace = region.real_trace();
  for (auto& [a, b] : trace) {
    if (!std::isfinite(a) && !std::isfinite(b)) {
      a = -2.0;
      b = 2.0;
    } else if (!std::isfinite(a)) {
      a = b - 4.0;
    } else if (!std::isfinite(b)) {
      b = a + 4.0;
    }
  }
  double total = 0.0;
  for (const auto& [a, b] : trace) total += b - a;
  std::vector<double> out;
  if (trace.empty() || total <= 0.0) return out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    double s = total * (k + 0.5) / count;
    for (const auto& [a, b] : trace) {
      if (s <= b - a) {
        out.push_back(a + s);
        break;
      }
      s -= b - a;
    }
  }
  return out;
}

SliceExpr extend(const StemFunction& r, const StemFunction& s) {
  if ((r.unit.value() - s.unit.value()).norm() <= kUnitSeparation)
    throw DegenerateUnits("extend: the two slices coincide");
  const auto xs = real_trace_samples(r.domain);
  if (xs.empty()) throw NoRealTrace("extend: the stem domain does not meet the real axis");
  for (double x : xs) {
    const Quaternion a = r(x, 0.0), b = s(x, 0.0);
    if (distance(a, b) > kTraceTol * std::max(1.0, a.norm()))
      throw RealTraceMismatch("extend: stems disagree on the real axis");
  }
  return SliceExpr::ext(r, s);
}

SliceExpr ext_from_holomorphic(const StemFunction& f) {
  if (f.domain.real_trace().empty())
    throw NoRealTrace("ext_from_holomorphic: the stem domain does not meet the real axis");
  if (!f.domain.is_conjugation_symmetric())
    throw DomainNotSymmetric("ext_from_holomorphic: the stem domain is not symmetric");
  return SliceExpr::ext(f);
}

}  // namespace slicereg
