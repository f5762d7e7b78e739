#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "slicereg/domain.hpp"
#include "slicereg/polynomial.hpp"
#include "slicereg/quaternion.hpp"

namespace slicereg {

using Complex = std::complex<double>;

/// Slice data on L_J: value(x, y) is the value at x + yJ (y signed). Expected
/// to satisfy (d/dx + J d/dy) value = 0 on `domain`; regularity_residual on an
/// extension is the numerical check.
struct StemFunction {
  std::function<Quaternion(double x, double y)> value;
  ImaginaryUnit unit = ImaginaryUnit::i();
  Region domain = Region::whole_plane();
  /// Set when the stem is the restriction of a polynomial; makes the
  /// extension serializable.
  std::optional<SlicePolynomial> source;

  Quaternion operator()(double x, double y) const { return value(x, y); }

  static StemFunction restriction(const SlicePolynomial& p, const ImaginaryUnit& unit,
                                  Region domain = Region::whole_plane());
};

struct SliceNode;

/// Immutable expression tree over regular functions. Copies share nodes.
class SliceExpr {
 public:
  enum class Kind { Poly, Ext, Star, Conj, Symm, Recip, Sum, RightScalar, Map };

  static SliceExpr poly(SlicePolynomial p, std::optional<AxialDomain> domain = std::nullopt);
  static SliceExpr constant(const Quaternion& a) { return poly(SlicePolynomial::constant(a)); }
  /// Single-slice extension of a stem (symmetric domain).
  static SliceExpr ext(StemFunction stem);
  /// Two-slice extension of stems on L_J and L_K.
  static SliceExpr ext(StemFunction r, StemFunction s);
  static SliceExpr star(SliceExpr f, SliceExpr g);
  static SliceExpr conj(SliceExpr f);
  static SliceExpr symm(SliceExpr f);
  static SliceExpr recip(SliceExpr f);
  static SliceExpr sum(SliceExpr f, SliceExpr g);
  static SliceExpr rscale(SliceExpr f, const Quaternion& a);
  /// Arbitrary pointwise map; not assumed regular.
  static SliceExpr map(std::string name, std::function<Quaternion(const Quaternion&)> fn);

  Kind kind() const;
  const SliceNode& node() const { return *node_; }

  bool contains(const Quaternion& q) const;
  Quaternion operator()(const Quaternion& q) const;

 private:
  explicit SliceExpr(std::shared_ptr<const SliceNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const SliceNode> node_;
};

struct PolyNode {
  SlicePolynomial poly;
  std::optional<AxialDomain> domain;
};
struct ExtNode {
  StemFunction r;
  std::optional<StemFunction> s;  // empty: single-slice form
};
struct StarNode {
  SliceExpr left, right;
};
struct ConjNode {
  SliceExpr arg;
};
struct SymmNode {
  SliceExpr arg;
};
struct RecipNode {
  SliceExpr arg;
};
struct SumNode {
  SliceExpr left, right;
};
struct ScaleNode {
  SliceExpr arg;
  Quaternion scalar;
};
struct MapNode {
  std::string name;
  std::function<Quaternion(const Quaternion&)> fn;
};

struct SliceNode {
  std::variant<PolyNode, ExtNode, StarNode, ConjNode, SymmNode, RecipNode, SumNode, ScaleNode,
               MapNode>
      data;
};

/// v = F + G J with F, G in L_I, written as complex numbers over {1, I}.
struct SplitPair {
  Complex F;
  Complex G;
  ImaginaryUnit I;
  ImaginaryUnit J;

  Quaternion recombine() const;
};

/// Coordinates of v in the orthonormal basis {1, I, J, IJ}. J must be
/// orthogonal to I within 1e-9.
SplitPair split(const Quaternion& v, const ImaginaryUnit& I, const ImaginaryUnit& J);

/// c.real() + c.imag() I.
Quaternion lift(const Complex& c, const ImaginaryUnit& I);

Quaternion eval(const SliceExpr& f, const Quaternion& q);

/// Regular product at q = x + yI from the splittings of f at z and g at z, z-bar.
/// The orthogonal unit defaults to orthogonal_unit(I).
Quaternion star_eval(const SliceExpr& f, const SliceExpr& g, const Quaternion& q);
Quaternion star_eval(const SliceExpr& f, const SliceExpr& g, const Quaternion& q,
                     const ImaginaryUnit& J);
Quaternion conj_eval(const SliceExpr& f, const Quaternion& q);
Quaternion symm_eval(const SliceExpr& f, const Quaternion& q);
/// f^s(q)^{-1} f^c(q). Throws SingularPoint when
/// |f^s(q)| <= 1e-10 max(1, |f^c(q)|).
Quaternion recip_eval(const SliceExpr& f, const Quaternion& q);

/// f(q) g(f(q)^{-1} q f(q)); throws ZeroBase when |f(q)| <= 1e-12.
Quaternion star_via_composition(const SliceExpr& f, const SliceExpr& g, const Quaternion& q);

inline constexpr double kDifferenceStep = 1e-5;

/// Derivative tree built by the Leibniz rule; empty when the expression
/// contains Ext or Map nodes.
std::optional<SliceExpr> derivative_expr(const SliceExpr& f);

/// Exact through derivative_expr when available, otherwise a fourth-order
/// central difference in x.
Quaternion slice_derivative(const SliceExpr& f, const Quaternion& q, double h = kDifferenceStep);

/// |1/2 (d/dx + I d/dy) f(x + yI)| by fourth-order central differences. q must be
/// non-real.
double regularity_residual(const SliceExpr& f, const Quaternion& q, double h = kDifferenceStep);

}  // namespace slicereg
