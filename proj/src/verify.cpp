#include "slicereg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "slicereg/errors.hpp"
#include "slicereg/representation.hpp"

namespace slicereg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kLoopNodes = 64;
constexpr double kMinUnitSeparation = 1e-3;
}  // namespace

SplitMix64::result_type SplitMix64::operator()() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double SplitMix64::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ImaginaryUnit random_unit(SplitMix64& rng) {
  for (;;) {
    const Quaternion v(0.0, rng.normal(), rng.normal(), rng.normal());
    if (v.im_norm() > 1e-6) return ImaginaryUnit(v);
  }
}

Quaternion random_quaternion(SplitMix64& rng, double max_norm) {
  for (;;) {
    const Quaternion v(rng.normal(), rng.normal(), rng.normal(), rng.normal());
    const double n = v.norm();
    if (n > 1e-6) return v * (rng.uniform(0.0, max_norm) / n);
  }
}

SlicePolynomial random_polynomial(SplitMix64& rng, int degree, double center,
                                  double min_leading) {
  std::vector<Quaternion> c(static_cast<std::size_t>(degree + 1));
  for (auto& a : c) a = random_quaternion(rng);
  while (c.back().norm() < min_leading) c.back() = random_quaternion(rng);
  return SlicePolynomial(std::move(c), center);
}

SlicePoint random_slice_point(SplitMix64& rng) {
  const double x = rng.uniform(-2.0, 2.0);
  const double y = rng.uniform(0.1, 2.0);
  return SlicePoint{x, y, random_unit(rng), false};
}

void CheckReport::record(double residual, const std::string& input) {
  ++samples;
  if (!(residual <= max_residual)) {
    max_residual = std::isnan(residual) ? kInf : residual;
    worst_input = input;
    worst_residual = max_residual;
  }
}

void CheckReport::finish() { passed = max_residual <= tolerance; }

std::string describe(const Quaternion& q) {
  std::ostringstream os;
  os.precision(17);
  os << q;
  return os.str();
}

CheckReport check_grf_invariance(const SliceExpr& f, int spheres, int unit_pairs,
                                 std::uint64_t seed, double tolerance) {
  SplitMix64 rng(seed);
  CheckReport rep;
  rep.name = "grf_invariance";
  rep.tolerance = tolerance;
  for (int s = 0; s < spheres; ++s) {
    const SlicePoint p = random_slice_point(rng);
    const Quaternion ref = eval(f, p.to_quaternion());
    std::optional<Quaternion> first;
    for (int k = 0; k < unit_pairs; ++k) {
      const ImaginaryUnit J = random_unit(rng);
      ImaginaryUnit K = random_unit(rng);
      while (distance(J, K) < kMinUnitSeparation) K = random_unit(rng);

      double magnitude = 0.0;
      auto rebuild = [&](double x, double y) {
        const Quaternion vJ = eval(f, from_slice(x, y, J));
        const Quaternion vK = eval(f, from_slice(x, y, K));
        magnitude = std::max({magnitude, vJ.norm(), vK.norm()});
        return general_representation(vJ, vK, J, K, SlicePoint{x, y, p.unit, false});
      };

      const Quaternion v = rebuild(p.x, p.y);
      const double scale = std::max({1.0, magnitude, ref.norm()});
      double residual = distance(v, ref) / scale;
      if (first)
        residual = std::max(residual, distance(v, *first) / scale);
      else
        first = v;

      // Cauchy: the loop integral of dz * phi over a circle in L_I vanishes
      // for a regular phi; conj(q) gives exactly 2 pi I rho^2.
      const double rho = 0.5 * p.y;
      Quaternion loop;
      double loop_mag = 0.0;
      for (int n = 0; n < kLoopNodes; ++n) {
        const double t = 2.0 * std::numbers::pi * n / kLoopNodes;
        const Quaternion phi = rebuild(p.x + rho * std::cos(t), p.y + rho * std::sin(t));
        loop_mag = std::max(loop_mag, phi.norm());
        const Quaternion dz = lift(Complex(-rho * std::sin(t), rho * std::cos(t)), p.unit);
        loop += dz * phi;
      }
      residual = std::max(residual, loop.norm() / (kLoopNodes * rho * rho * std::max(1.0, loop_mag)));

      std::ostringstream in;
      in.precision(17);
      in << "x=" << p.x << " y=" << p.y << " I=" << p.unit.value() << " J=" << J.value()
         << " K=" << K.value();
      rep.record(residual, in.str());
    }
  }
  rep.finish();
  return rep;
}

std::vector<CheckReport> check_identity_suite(const SliceExpr& f, const SliceExpr& g, int points,
                                              std::uint64_t seed) {
  auto make = [](const char* name, double tol) {
    CheckReport r;
    r.name = name;
    r.tolerance = tol;
    return r;
  };
  CheckReport anti = make("anti_homomorphism", 1e-9);
  CheckReport comp = make("composition", 1e-8);
  CheckReport symm = make("symmetrization_multiplicativity", 1e-9);
  CheckReport left = make("left_reciprocal", 1e-8);
  CheckReport slice = make("slice_preservation", 1e-10);

  const SliceExpr fg = SliceExpr::star(f, g);
  const SliceExpr cf = SliceExpr::conj(f), cg = SliceExpr::conj(g);
  const SliceExpr rf = SliceExpr::recip(f);

  SplitMix64 rng(seed);
  for (int n = 0; n < points; ++n) {
    const SlicePoint p = random_slice_point(rng);
    const Quaternion q = p.to_quaternion();
    const Quaternion qb = from_slice(p.x, -p.y, p.unit);
    const std::string in = describe(q);
    try {
      const Quaternion fz = eval(f, q);
      const double mf = std::max(fz.norm(), eval(f, qb).norm());
      const double mg = std::max(eval(g, q).norm(), eval(g, qb).norm());
      const double scale = std::max(1.0, mf * mg);

      anti.record(distance(conj_eval(fg, q), star_eval(cg, cf, q)) / scale, in);

      if (fz.norm() > 1e-6)
        comp.record(distance(star_via_composition(f, g, q), star_eval(f, g, q)) / scale, in);

      const Quaternion sf = symm_eval(f, q), sg = symm_eval(g, q);
      const double symm_scale = scale * scale;
      const double mult = distance(symm_eval(fg, q), sf * sg) / symm_scale;
      const double commute = distance(sf * sg, sg * sf) / symm_scale;
      symm.record(std::max(mult, commute), in);

      if (sf.norm() > 1e-3) left.record(distance(star_eval(rf, f, q), kOne), in);

      const SplitPair parts = split(sf, p.unit, orthogonal_unit(p.unit));
      slice.record(std::abs(parts.G) / std::max(1.0, mf * mf), in);
    } catch (const Error& e) {
      const std::string what = in + " error: " + e.what();
      for (CheckReport* r : {&anti, &comp, &symm, &left, &slice}) r->record(kInf, what);
    }
  }
  std::vector<CheckReport> out{anti, comp, symm, left, slice};
  for (auto& r : out) r.finish();
  return out;
}

CheckReport check_extension_roundtrip(const SlicePolynomial& f, const ImaginaryUnit& slice,
                                      int points, std::uint64_t seed, double tolerance) {
  CheckReport rep;
  rep.name = "extension_roundtrip";
  rep.tolerance = tolerance;
  const SliceExpr fe = SliceExpr::poly(f);
  const SliceExpr ext = ext_from_holomorphic(StemFunction::restriction(f, slice));
  SplitMix64 rng(seed);
  for (int n = 0; n < points; ++n) {
    const Quaternion q = random_slice_point(rng).to_quaternion() + Quaternion(f.center());
    const double scale = std::max(1.0, f.majorant((q - Quaternion(f.center())).norm()));
    rep.record(distance(eval(ext, q), eval(fe, q)) / scale, describe(q));
  }
  rep.finish();
  return rep;
}

std::vector<CheckReport> run_suite(std::string_view suite, std::uint64_t seed, int samples,
                                   bool non_regular_control) {
  if (samples <= 0) throw PreconditionError("samples must be positive");
  const bool all = suite == "all";
  if (!all && suite != "grf" && suite != "identities" && suite != "extension")
    throw PreconditionError("unknown suite: " + std::string(suite));

  SplitMix64 rng(seed);
  std::vector<CheckReport> out;
  if (all || suite == "grf") {
    const int spheres = std::max(1, samples / 10);
    auto run = [&](const char* name, const SliceExpr& f) {
      CheckReport r = check_grf_invariance(f, spheres, 10, seed);
      r.name = name;
      out.push_back(r);
    };
    run("grf_poly", SliceExpr::poly(random_polynomial(rng, 8)));
    run("grf_star", SliceExpr::star(SliceExpr::poly(random_polynomial(rng, 4)),
                                    SliceExpr::poly(random_polynomial(rng, 4))));
    run("grf_ext", ext_from_holomorphic(
                       StemFunction::restriction(random_polynomial(rng, 5), random_unit(rng))));
    if (non_regular_control)
      run("grf_control_conj", SliceExpr::map("conj", [](const Quaternion& q) { return q.conj(); }));
  }
  if (all || suite == "identities") {
    const auto f = SliceExpr::poly(random_polynomial(rng, 5));
    const auto g = SliceExpr::poly(random_polynomial(rng, 5));
    for (auto& r : check_identity_suite(f, g, samples, seed)) out.push_back(r);
  }
  if (all || suite == "extension") {
    const auto f = random_polynomial(rng, 8);
    out.push_back(check_extension_roundtrip(f, random_unit(rng), samples, seed));
  }
  return out;
}

}  // namespace slicereg
