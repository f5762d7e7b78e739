#include "slicereg/polynomial.hpp"

#include <algorithm>

#include "slicereg/errors.hpp"

namespace slicereg {

SlicePolynomial::SlicePolynomial(std::vector<Quaternion> coeffs, double center)
    : coeffs_(std::move(coeffs)), center_(center) {
  while (!coeffs_.empty() && coeffs_.back() == Quaternion{}) coeffs_.pop_back();
}

bool SlicePolynomial::has_real_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Quaternion& a) { return a.is_real(); });
}

Quaternion SlicePolynomial::operator()(const Quaternion& q) const {
  if (coeffs_.empty()) return {};
  const Quaternion w = q - Quaternion(center_);
  Quaternion acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = w * acc + *it;
  return acc;
}

double SlicePolynomial::majorant(double r) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + it->norm();
  return acc;
}

SlicePolynomial SlicePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return SlicePolynomial({}, center_);
  std::vector<Quaternion> d(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = static_cast<double>(n) * coeffs_[n];
  return SlicePolynomial(std::move(d), center_);
}

namespace {
void require_same_center(const SlicePolynomial& f, const SlicePolynomial& g) {
  if (f.center() != g.center())
    throw PreconditionError("polynomials expanded at different centers");
}
}  // namespace

SlicePolynomial star_poly(const SlicePolynomial& f, const SlicePolynomial& g) {
  require_same_center(f, g);
  if (f.is_zero() || g.is_zero()) return SlicePolynomial({}, f.center());
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<Quaternion> c(a.size() + b.size() - 1);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t s = 0; s < b.size(); ++s) c[r + s] += a[r] * b[s];
  return SlicePolynomial(std::move(c), f.center());
}

SlicePolynomial conj_poly(const SlicePolynomial& f) {
  std::vector<Quaternion> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(a.conj());
  return SlicePolynomial(std::move(c), f.center());
}

SlicePolynomial symm_poly(const SlicePolynomial& f) {
  auto s = star_poly(f, conj_poly(f));
  // The imaginary parts cancel pairwise; drop the rounding residue.
  std::vector<Quaternion> c;
  c.reserve(s.coeffs().size());
  for (const auto& a : s.coeffs()) c.emplace_back(a.x0);
  return SlicePolynomial(std::move(c), f.center());
}

SlicePolynomial operator+(const SlicePolynomial& f, const SlicePolynomial& g) {
  require_same_center(f, g);
  std::vector<Quaternion> c(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t n = 0; n < f.coeffs().size(); ++n) c[n] += f.coeffs()[n];
  for (std::size_t n = 0; n < g.coeffs().size(); ++n) c[n] += g.coeffs()[n];
  return SlicePolynomial(std::move(c), f.center());
}

}  // namespace slicereg
