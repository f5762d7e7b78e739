#include "slicereg/slice_expr.hpp"

#include <algorithm>
#include <sstream>

#include "slicereg/errors.hpp"

namespace slicereg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kSingularTol = 1e-10;
constexpr double kZeroBase = 1e-12;
constexpr double kOrthoTol = 1e-9;

// Evaluation frame: the slice L_I through the point and the splitting unit J.
struct Frame {
  double x;
  double y;
  ImaginaryUnit I;
  ImaginaryUnit J;

  Quaternion z() const { return from_slice(x, y, I); }
  Quaternion zbar() const { return from_slice(x, -y, I); }
  bool real() const { return y == 0.0; }
};

// Values of a function at z = x + yI and at z-bar = x - yI.
struct Pair {
  Quaternion z;
  Quaternion zbar;
};

struct Split {
  Complex F;
  Complex G;
};

Split split_raw(const Quaternion& v, const Quaternion& I, const Quaternion& J) {
  const Quaternion IJ = I * J;
  return {Complex(v.x0, im_dot(v, I)), Complex(im_dot(v, J), im_dot(v, IJ))};
}

Quaternion combine(const Complex& F, const Complex& G, const Frame& fr) {
  return lift(F, fr.I) + lift(G, fr.I) * fr.J.value();
}

Frame frame_at(const Quaternion& q) {
  const SlicePoint sp = slice_coords(q);
  const ImaginaryUnit J = orthogonal_unit(sp.unit);
  return {sp.x, sp.y, sp.unit, J};
}

std::string sphere_text(double x, double y) {
  std::ostringstream os;
  os << "sphere x=" << x << " y=" << y;
  return os.str();
}

Pair star_pair(const Pair& f, const Pair& g, const Frame& fr) {
  if (fr.real()) {
    const Quaternion v = f.z * g.z;
    return {v, v};
  }
  const Quaternion& I = fr.I.value();
  const Quaternion& J = fr.J.value();
  const Split a = split_raw(f.z, I, J), ab = split_raw(f.zbar, I, J);
  const Split b = split_raw(g.z, I, J), bb = split_raw(g.zbar, I, J);
  return {combine(a.F * b.F - a.G * std::conj(bb.G), a.F * b.G + a.G * std::conj(bb.F), fr),
          combine(ab.F * bb.F - ab.G * std::conj(b.G), ab.F * bb.G + ab.G * std::conj(b.F), fr)};
}

Pair conj_pair(const Pair& f, const Frame& fr) {
  if (fr.real()) return {f.z.conj(), f.z.conj()};
  const Split a = split_raw(f.z, fr.I, fr.J), ab = split_raw(f.zbar, fr.I, fr.J);
  return {combine(std::conj(ab.F), -a.G, fr), combine(std::conj(a.F), -ab.G, fr)};
}

// Symmetrization as complex values in L_I (exactly slice preserving).
std::pair<Complex, Complex> symm_values(const Pair& f, const Frame& fr) {
  if (fr.real()) {
    const double n2 = f.z.norm2();
    return {Complex(n2), Complex(n2)};
  }
  const Split a = split_raw(f.z, fr.I, fr.J), ab = split_raw(f.zbar, fr.I, fr.J);
  return {a.F * std::conj(ab.F) + a.G * std::conj(ab.G),
          ab.F * std::conj(a.F) + ab.G * std::conj(a.G)};
}

Pair symm_pair(const Pair& f, const Frame& fr) {
  const auto [s, sb] = symm_values(f, fr);
  return {lift(s, fr.I), lift(sb, fr.I)};
}

Pair recip_pair(const Pair& f, const Frame& fr) {
  const auto [s, sb] = symm_values(f, fr);
  const Pair c = conj_pair(f, fr);
  auto one = [&](const Complex& sv, const Quaternion& cv) {
    if (std::abs(sv) <= kSingularTol * std::max(1.0, cv.norm()))
      throw SingularPoint("regular reciprocal on the zero set of f^s: " + sphere_text(fr.x, fr.y),
                          fr.x, fr.y);
    return lift(1.0 / sv, fr.I) * cv;
  };
  return {one(s, c.z), one(sb, c.zbar)};
}

Quaternion ext_value(const ExtNode& e, double x, double t, const ImaginaryUnit& I) {
  const StemFunction& r = e.r;
  if (!e.s) {
    if (!(r.domain.contains(x, t) || r.domain.contains(x, -t)))
      throw DomainError("point outside the extension domain");
    if (!(r.domain.contains(x, t) && r.domain.contains(x, -t)))
      throw DomainError("stem domain is not conjugation symmetric at this point");
    const Quaternion fp = r(x, t), fm = r(x, -t);
    return 0.5 * (fp + fm) + I.value() * (0.5 * (r.unit.value() * (fm - fp)));
  }
  const StemFunction& s = *e.s;
  auto inside = [&](double tt) { return r.domain.contains(x, tt) && s.domain.contains(x, tt); };
  double tt = t;
  Quaternion unit = I.value();
  if (!inside(tt)) {
    if (!inside(-tt)) throw DomainError("point outside the extension domain");
    tt = -tt;
    unit = -unit;
  }
  const Quaternion& J = r.unit.value();
  const Quaternion& K = s.unit.value();
  const Quaternion vr = r(x, tt), vs = s(x, tt);
  const Quaternion d = inverse(J - K);
  return d * (J * vr - K * vs) + unit * (d * (vr - vs));
}

Pair eval_pair(const SliceExpr& f, const Frame& fr) {
  return std::visit(
      Overloaded{
          [&](const PolyNode& n) -> Pair {
            if (n.domain && !n.domain->contains_xy(fr.x, fr.y))
              throw DomainError("point outside the polynomial's declared domain");
            const Quaternion v = n.poly(fr.z());
            return {v, fr.real() ? v : n.poly(fr.zbar())};
          },
          [&](const ExtNode& n) -> Pair {
            const Quaternion v = ext_value(n, fr.x, fr.y, fr.I);
            return {v, fr.real() ? v : ext_value(n, fr.x, -fr.y, fr.I)};
          },
          [&](const StarNode& n) {
            return star_pair(eval_pair(n.left, fr), eval_pair(n.right, fr), fr);
          },
          [&](const ConjNode& n) { return conj_pair(eval_pair(n.arg, fr), fr); },
          [&](const SymmNode& n) { return symm_pair(eval_pair(n.arg, fr), fr); },
          [&](const RecipNode& n) { return recip_pair(eval_pair(n.arg, fr), fr); },
          [&](const SumNode& n) -> Pair {
            const Pair a = eval_pair(n.left, fr), b = eval_pair(n.right, fr);
            return {a.z + b.z, a.zbar + b.zbar};
          },
          [&](const ScaleNode& n) -> Pair {
            const Pair a = eval_pair(n.arg, fr);
            return {a.z * n.scalar, a.zbar * n.scalar};
          },
          [&](const MapNode& n) -> Pair {
            const Quaternion v = n.fn(fr.z());
            return {v, fr.real() ? v : n.fn(fr.zbar())};
          },
      },
      f.node().data);
}

}  // namespace

StemFunction StemFunction::restriction(const SlicePolynomial& p, const ImaginaryUnit& unit,
                                       Region domain) {
  const Quaternion J = unit.value();
  return StemFunction{[p, J](double x, double y) { return p(Quaternion(x) + y * J); }, unit,
                      std::move(domain), p};
}

// ---- SliceExpr ------------------------------------------------------------

#define SLICEREG_NODE(...) SliceExpr(std::make_shared<const SliceNode>(SliceNode{__VA_ARGS__}))

SliceExpr SliceExpr::poly(SlicePolynomial p, std::optional<AxialDomain> domain) {
  return SLICEREG_NODE(PolyNode{std::move(p), std::move(domain)});
}
SliceExpr SliceExpr::ext(StemFunction stem) { return SLICEREG_NODE(ExtNode{std::move(stem), {}}); }
SliceExpr SliceExpr::ext(StemFunction r, StemFunction s) {
  return SLICEREG_NODE(ExtNode{std::move(r), std::move(s)});
}
SliceExpr SliceExpr::star(SliceExpr f, SliceExpr g) {
  return SLICEREG_NODE(StarNode{std::move(f), std::move(g)});
}
SliceExpr SliceExpr::conj(SliceExpr f) { return SLICEREG_NODE(ConjNode{std::move(f)}); }
SliceExpr SliceExpr::symm(SliceExpr f) { return SLICEREG_NODE(SymmNode{std::move(f)}); }
SliceExpr SliceExpr::recip(SliceExpr f) { return SLICEREG_NODE(RecipNode{std::move(f)}); }
SliceExpr SliceExpr::sum(SliceExpr f, SliceExpr g) {
  return SLICEREG_NODE(SumNode{std::move(f), std::move(g)});
}
SliceExpr SliceExpr::rscale(SliceExpr f, const Quaternion& a) {
  return SLICEREG_NODE(ScaleNode{std::move(f), a});
}
SliceExpr SliceExpr::map(std::string name, std::function<Quaternion(const Quaternion&)> fn) {
  return SLICEREG_NODE(MapNode{std::move(name), std::move(fn)});
}

#undef SLICEREG_NODE

SliceExpr::Kind SliceExpr::kind() const { return static_cast<Kind>(node_->data.index()); }

bool SliceExpr::contains(const Quaternion& q) const {
  const double x = q.re(), y = q.im_norm();
  return std::visit(
      Overloaded{
          [&](const PolyNode& n) { return !n.domain || n.domain->contains(q); },
          [&](const ExtNode& n) {
            auto in = [&](double t) {
              return n.r.domain.contains(x, t) && (!n.s || n.s->domain.contains(x, t));
            };
            if (!n.s) return in(y) && in(-y);
            return in(y) || in(-y);
          },
          [&](const StarNode& n) { return n.left.contains(q) && n.right.contains(q); },
          [&](const ConjNode& n) { return n.arg.contains(q); },
          [&](const SymmNode& n) { return n.arg.contains(q); },
          [&](const RecipNode& n) { return n.arg.contains(q); },
          [&](const SumNode& n) { return n.left.contains(q) && n.right.contains(q); },
          [&](const ScaleNode& n) { return n.arg.contains(q); },
          [&](const MapNode&) { return true; },
      },
      node_->data);
}

Quaternion SliceExpr::operator()(const Quaternion& q) const { return eval(*this, q); }

// ---- splitting --------------------------------------------------------------

Quaternion lift(const Complex& c, const ImaginaryUnit& I) {
  return Quaternion(c.real()) + c.imag() * I.value();
}

Quaternion SplitPair::recombine() const { return lift(F, I) + lift(G, I) * J.value(); }

SplitPair split(const Quaternion& v, const ImaginaryUnit& I, const ImaginaryUnit& J) {
  if (std::abs(im_dot(I, J)) > kOrthoTol) throw PreconditionError("split: J is not orthogonal to I");
  const Split s = split_raw(v, I, J);
  return {s.F, s.G, I, J};
}

// ---- pointwise operations -------------------------------------------------

Quaternion eval(const SliceExpr& f, const Quaternion& q) { return eval_pair(f, frame_at(q)).z; }

Quaternion star_eval(const SliceExpr& f, const SliceExpr& g, const Quaternion& q) {
  const Frame fr = frame_at(q);
  return star_pair(eval_pair(f, fr), eval_pair(g, fr), fr).z;
}

Quaternion star_eval(const SliceExpr& f, const SliceExpr& g, const Quaternion& q,
                     const ImaginaryUnit& J) {
  Frame fr = frame_at(q);
  if (std::abs(im_dot(fr.I, J)) > kOrthoTol)
    throw PreconditionError("star_eval: J is not orthogonal to I_q");
  fr.J = J;
  return star_pair(eval_pair(f, fr), eval_pair(g, fr), fr).z;
}

Quaternion conj_eval(const SliceExpr& f, const Quaternion& q) {
  const Frame fr = frame_at(q);
  return conj_pair(eval_pair(f, fr), fr).z;
}

Quaternion symm_eval(const SliceExpr& f, const Quaternion& q) {
  const Frame fr = frame_at(q);
  return symm_pair(eval_pair(f, fr), fr).z;
}

Quaternion recip_eval(const SliceExpr& f, const Quaternion& q) {
  const Frame fr = frame_at(q);
  return recip_pair(eval_pair(f, fr), fr).z;
}

Quaternion star_via_composition(const SliceExpr& f, const SliceExpr& g, const Quaternion& q) {
  const Quaternion fq = eval(f, q);
  if (fq.norm() <= kZeroBase) throw ZeroBase("f(q) = 0: composition form undefined");
  return fq * eval(g, inverse(fq) * q * fq);
}

std::optional<SliceExpr> derivative_expr(const SliceExpr& f) {
  using R = std::optional<SliceExpr>;
  return std::visit(
      Overloaded{
          [](const PolyNode& n) -> R { return SliceExpr::poly(n.poly.derivative(), n.domain); },
          [](const ExtNode&) -> R { return std::nullopt; },
          [](const MapNode&) -> R { return std::nullopt; },
          [](const SumNode& n) -> R {
            auto a = derivative_expr(n.left), b = derivative_expr(n.right);
            if (!a || !b) return std::nullopt;
            return SliceExpr::sum(*a, *b);
          },
          [](const ScaleNode& n) -> R {
            auto a = derivative_expr(n.arg);
            if (!a) return std::nullopt;
            return SliceExpr::rscale(*a, n.scalar);
          },
          [](const StarNode& n) -> R {
            auto a = derivative_expr(n.left), b = derivative_expr(n.right);
            if (!a || !b) return std::nullopt;
            return SliceExpr::sum(SliceExpr::star(*a, n.right), SliceExpr::star(n.left, *b));
          },
          [](const ConjNode& n) -> R {
            auto a = derivative_expr(n.arg);
            if (!a) return std::nullopt;
            return SliceExpr::conj(*a);
          },
          [](const SymmNode& n) -> R {
            auto a = derivative_expr(n.arg);
            if (!a) return std::nullopt;
            return SliceExpr::sum(SliceExpr::star(*a, SliceExpr::conj(n.arg)),
                                  SliceExpr::star(n.arg, SliceExpr::conj(*a)));
          },
          [](const RecipNode& n) -> R {
            auto a = derivative_expr(n.arg);
            if (!a) return std::nullopt;
            const SliceExpr r = SliceExpr::recip(n.arg);
            return SliceExpr::rscale(SliceExpr::star(SliceExpr::star(r, *a), r), Quaternion(-1.0));
          },
      },
      f.node().data);
}

namespace {

// Fourth-order central difference of t -> g(t) at 0.
template <class G>
Quaternion central_difference(const G& g, double h) {
  return (g(-2.0 * h) - 8.0 * g(-h) + 8.0 * g(h) - g(2.0 * h)) / (12.0 * h);
}

}  // namespace

Quaternion slice_derivative(const SliceExpr& f, const Quaternion& q, double h) {
  if (const auto d = derivative_expr(f)) return eval(*d, q);
  return central_difference([&](double t) { return eval(f, q + Quaternion(t)); }, h);
}

double regularity_residual(const SliceExpr& f, const Quaternion& q, double h) {
  const SlicePoint sp = slice_coords(q);
  if (sp.arbitrary_unit) throw NotASlicePoint("regularity residual needs a non-real point");
  const ImaginaryUnit& I = sp.unit;
  const Quaternion dx =
      central_difference([&](double t) { return eval(f, from_slice(sp.x + t, sp.y, I)); }, h);
  const Quaternion dy =
      central_difference([&](double t) { return eval(f, from_slice(sp.x, sp.y + t, I)); }, h);
  return (0.5 * (dx + I.value() * dy)).norm();
}

}  // namespace slicereg
