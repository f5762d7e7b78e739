#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "slicereg/errors.hpp"
#include "slicereg/representation.hpp"
#include "slicereg/slice_expr.hpp"
#include "slicereg/verify.hpp"

using namespace slicereg;

namespace {

SliceExpr P(std::vector<Quaternion> c) { return SliceExpr::poly(SlicePolynomial(std::move(c))); }

const SliceExpr q_minus_i = P({-kI, kOne});
const SliceExpr q_minus_j = P({-kJ, kOne});

SliceExpr conj_map() {
  return SliceExpr::map("conj", [](const Quaternion& q) { return q.conj(); });
}

}  // namespace

TEST_CASE("eval") {
  CHECK(eval(P({Quaternion(), kOne}), Quaternion(1, 1, 0, 0)) == Quaternion(1, 1, 0, 0));
  CHECK(eval(SliceExpr::star(q_minus_i, q_minus_j), kI).norm() < 1e-15);
  CHECK(distance(eval(SliceExpr::recip(q_minus_j), 2.0 * kJ), -kJ) < 1e-12);
}

TEST_CASE("split") {
  const auto I = ImaginaryUnit::i(), J = ImaginaryUnit::j();
  const SplitPair a = split(Quaternion(1, 2, 0, 0), I, J);
  CHECK(a.F == Complex(1, 2));
  CHECK(a.G == Complex(0, 0));
  const SplitPair b = split(kJ, I, J);
  CHECK(b.F == Complex(0, 0));
  CHECK(b.G == Complex(1, 0));
  const SplitPair c = split(kK, I, J);
  CHECK(c.F == Complex(0, 0));
  CHECK(c.G == Complex(0, 1));
  CHECK_THROWS_AS(split(kK, I, ImaginaryUnit(kI + kJ)), PreconditionError);

  SplitMix64 rng(31);
  for (int n = 0; n < 200; ++n) {
    const ImaginaryUnit u = random_unit(rng);
    const Quaternion v = random_quaternion(rng, 3.0);
    CHECK(distance(split(v, u, orthogonal_unit(u)).recombine(), v) < 1e-14);
  }
}

TEST_CASE("star_eval") {
  const SliceExpr one = SliceExpr::constant(kOne);
  const Quaternion q(0.2, -0.4, 0.9, 1.1);
  CHECK(distance(star_eval(one, q_minus_j, q), eval(q_minus_j, q)) < 1e-14);
  CHECK(distance(star_eval(q_minus_i, q_minus_j, kOne), Quaternion(1, -1, -1, 1)) < 1e-14);
  // [k, -i-j, 1] at j: k + j(-i-j) + j^2 = 2k.
  CHECK(distance(star_eval(q_minus_i, q_minus_j, kJ), 2.0 * kK) < 1e-14);
  CHECK(distance(star_eval(q_minus_i, q_minus_j, kJ),
                 oracle::poly_eval({kK, -kI - kJ, kOne}, 0.0, kJ)) < 1e-14);
}

TEST_CASE("property: star_eval agrees with coefficient convolution") {
  SplitMix64 rng(32);
  double worst = 0.0;
  for (int pair = 0; pair < 50; ++pair) {
    const double c = rng.uniform(-1.0, 1.0);
    const auto f = random_polynomial(rng, 1 + static_cast<int>(rng.uniform() * 8), c);
    const auto g = random_polynomial(rng, 1 + static_cast<int>(rng.uniform() * 8), c);
    const auto fe = SliceExpr::poly(f), ge = SliceExpr::poly(g);
    const auto conv = oracle::convolve(f.coeffs(), g.coeffs());
    for (int n = 0; n < 100; ++n) {
      const Quaternion q = random_quaternion(rng, 2.0) + Quaternion(c);
      const double scale = std::max(1.0, f.majorant(2.0) * g.majorant(2.0));
      worst = std::max(worst, distance(star_eval(fe, ge, q), oracle::poly_eval(conv, c, q)) / scale);
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("property: star_eval does not depend on the orthogonal unit") {
  SplitMix64 rng(33);
  const auto f = SliceExpr::poly(random_polynomial(rng, 5));
  const auto g = SliceExpr::poly(random_polynomial(rng, 5));
  for (int n = 0; n < 200; ++n) {
    const SlicePoint p = random_slice_point(rng);
    const Quaternion J = orthogonal_unit(p.unit).value();
    const double t = rng.uniform(0.0, 6.28);
    const ImaginaryUnit J2(std::cos(t) * J + std::sin(t) * (p.unit.value() * J));
    const Quaternion q = p.to_quaternion();
    CHECK(distance(star_eval(f, g, q), star_eval(f, g, q, J2)) < 1e-10);
  }
}

TEST_CASE("property: constant J against a slice-holomorphic H") {
  // H has coefficients in L_I, so on L_I it is the holomorphic map
  // z -> sum c_n z^n; the product is conj(H(conj z)) J there.
  SplitMix64 rng(34);
  for (int n = 0; n < 100; ++n) {
    const ImaginaryUnit I = random_unit(rng);
    const ImaginaryUnit J = orthogonal_unit(I);
    std::vector<Complex> c(5);
    std::vector<Quaternion> coeffs;
    for (auto& a : c) {
      a = Complex(rng.normal(), rng.normal());
      coeffs.push_back(lift(a, I));
    }
    const SliceExpr H = P(coeffs);
    const Complex z(rng.uniform(-2.0, 2.0), rng.uniform(0.1, 2.0));
    Complex Hzb = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) Hzb = Hzb * std::conj(z) + c[k];
    const Quaternion expected = lift(std::conj(Hzb), I) * J.value();
    const Quaternion got = star_eval(SliceExpr::constant(J.value()), H, lift(z, I));
    CHECK(distance(got, expected) < 1e-10 * std::max(1.0, expected.norm()));
  }
}

TEST_CASE("conj_eval") {
  SplitMix64 rng(35);
  const auto f = random_polynomial(rng, 6);
  const auto fc = SliceExpr::poly(conj_poly(f));
  for (int n = 0; n < 100; ++n) {
    const Quaternion q = random_quaternion(rng, 2.0);
    CHECK(distance(conj_eval(SliceExpr::poly(f), q), eval(fc, q)) < 1e-12);
  }
  CHECK(distance(conj_eval(q_minus_j, Quaternion(1, 1, 0, 0)), Quaternion(1, 1, 1, 0)) < 1e-14);
  const auto real = P({Quaternion(2.0), Quaternion(-1.0), Quaternion(0.5)});
  const Quaternion q(0.3, 0.1, -0.7, 0.2);
  CHECK(distance(conj_eval(real, q), eval(real, q)) < 1e-14);
}

TEST_CASE("symm_eval") {
  SplitMix64 rng(36);
  for (int n = 0; n < 100; ++n) {
    const SlicePoint p = random_slice_point(rng);
    const Quaternion q = p.to_quaternion();
    CHECK(distance(symm_eval(q_minus_j, q), q * q + kOne) < 1e-13);
  }
  const Quaternion a(1, -2, 0.5, 3);
  CHECK(distance(symm_eval(SliceExpr::constant(a), Quaternion(0.1, 0.2, 0.3, 0.4)),
                 Quaternion(a.norm2())) < 1e-13);
}

TEST_CASE("recip_eval") {
  CHECK(distance(recip_eval(q_minus_j, 2.0 * kJ), -kJ) < 1e-12);
  const Quaternion a(1, -2, 0.5, 3);
  CHECK(distance(recip_eval(SliceExpr::constant(a), kK), inverse(a)) < 1e-14);
  CHECK_THROWS_AS(recip_eval(q_minus_j, kJ), SingularPoint);
  try {
    recip_eval(q_minus_j, kK);
  } catch (const SingularPoint& e) {
    CHECK(e.sphere_x() == doctest::Approx(0.0));
    CHECK(e.sphere_y() == doctest::Approx(1.0));
  }
}

TEST_CASE("star_via_composition") {
  CHECK(distance(star_via_composition(q_minus_i, q_minus_j, kOne),
                 star_eval(q_minus_i, q_minus_j, kOne)) < 1e-14);
  CHECK_THROWS_AS(star_via_composition(q_minus_i, q_minus_j, kI), ZeroBase);
  SplitMix64 rng(37);
  const auto f = SliceExpr::poly(random_polynomial(rng, 6));
  const auto g = SliceExpr::poly(random_polynomial(rng, 6));
  for (int n = 0; n < 1000; ++n) {
    const Quaternion q = random_slice_point(rng).to_quaternion();
    if (eval(f, q).norm() <= 1e-6) continue;
    CHECK(distance(star_via_composition(f, g, q), star_eval(f, g, q)) < 1e-8);
  }
}

TEST_CASE("real points use pointwise formulas") {
  SplitMix64 rng(38);
  const auto f = SliceExpr::poly(random_polynomial(rng, 4));
  const auto g = SliceExpr::poly(random_polynomial(rng, 4));
  const Quaternion x(0.7);
  CHECK(distance(star_eval(f, g, x), eval(f, x) * eval(g, x)) < 1e-14);
  CHECK(distance(conj_eval(f, x), eval(f, x).conj()) < 1e-14);
  CHECK(std::abs(symm_eval(f, x).x0 - eval(f, x).norm2()) < 1e-14);
  // Any unit gives the same value in the limit y -> 0.
  const Quaternion near_real = from_slice(0.7, 1e-9, random_unit(rng));
  CHECK(distance(star_eval(f, g, near_real), star_eval(f, g, x)) < 1e-7);
}

TEST_CASE("slice_derivative") {
  CHECK(distance(slice_derivative(P({Quaternion(), Quaternion(), kOne}), kI), 2.0 * kI) < 1e-14);
  CHECK(slice_derivative(SliceExpr::constant(kK), Quaternion(1, 2, 3, 4)).norm() == 0.0);
  const SlicePolynomial sq({Quaternion(), Quaternion(), kOne});
  const auto ext = ext_from_holomorphic(StemFunction::restriction(sq, ImaginaryUnit::i()));
  CHECK(distance(slice_derivative(ext, kOne + kJ), Quaternion(2, 0, 2, 0)) < 1e-6);
}

TEST_CASE("property: derivative trees match differentiated coefficients") {
  SplitMix64 rng(40);
  for (int n = 0; n < 20; ++n) {
    const auto fp = random_polynomial(rng, 4), gp = random_polynomial(rng, 3);
    const auto f = SliceExpr::poly(fp), g = SliceExpr::poly(gp);
    const auto dstar = oracle::convolve(fp.coeffs(), gp.coeffs());
    const SlicePolynomial prod(dstar);
    const auto symm = oracle::convolve(fp.coeffs(), oracle::conjugate_coeffs(fp.coeffs()));
    for (int k = 0; k < 20; ++k) {
      const Quaternion q = random_quaternion(rng, 2.0);
      const double scale = std::max(1.0, prod.majorant(2.0) * 10.0);
      CHECK(distance(slice_derivative(SliceExpr::star(f, g), q), prod.derivative()(q)) < 1e-12 * scale);
      CHECK(distance(slice_derivative(SliceExpr::symm(f), q), SlicePolynomial(symm).derivative()(q)) <
            1e-12 * scale);
      CHECK(distance(slice_derivative(SliceExpr::conj(f), q), conj_poly(fp).derivative()(q)) < 1e-12 * scale);
    }
  }
  // Recip has no coefficient form; compare with a difference quotient along x.
  const auto r = SliceExpr::recip(q_minus_j);
  const Quaternion q = 2.0 * kJ + Quaternion(0.3);
  const Quaternion fd = (eval(r, q + Quaternion(1e-6)) - eval(r, q - Quaternion(1e-6))) / 2e-6;
  CHECK(distance(slice_derivative(r, q), fd) < 1e-8);
  CHECK_FALSE(derivative_expr(SliceExpr::map("id", [](const Quaternion& x) { return x; })));
}

TEST_CASE("regularity_residual") {
  CHECK(regularity_residual(P({Quaternion(), Quaternion(), Quaternion(), kOne}),
                            Quaternion(1, 2, 0, 0)) < 1e-8);
  CHECK(regularity_residual(conj_map(), kI) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(regularity_residual(q_minus_i, Quaternion(2.0)), NotASlicePoint);
}

TEST_CASE("property: every node type is regular") {
  SplitMix64 rng(39);
  const auto fp = random_polynomial(rng, 5), gp = random_polynomial(rng, 5);
  const auto f = SliceExpr::poly(fp), g = SliceExpr::poly(gp);
  const ImaginaryUnit J = random_unit(rng), K = random_unit(rng);
  const std::vector<std::pair<const char*, SliceExpr>> nodes = {
      {"poly", f},
      {"ext", ext_from_holomorphic(StemFunction::restriction(fp, J))},
      {"ext2", extend(StemFunction::restriction(fp, J), StemFunction::restriction(fp, K))},
      {"star", SliceExpr::star(f, g)},
      {"conj", SliceExpr::conj(f)},
      {"symm", SliceExpr::symm(f)},
      {"recip", SliceExpr::recip(f)},
      {"sum", SliceExpr::sum(f, g)},
      {"rscale", SliceExpr::rscale(f, Quaternion(0.5, -1, 2, 0.25))},
      {"derivative of star",
       SliceExpr::map("d star", [fg = SliceExpr::star(f, g)](const Quaternion& q) {
         return slice_derivative(fg, q);
       })},
      {"derivative of poly", SliceExpr::map("d poly", [f](const Quaternion& q) {
         return slice_derivative(f, q);
       })},
  };
  for (const auto& [label, e] : nodes) {
    const std::string name = label;
    CAPTURE(name);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      const Quaternion q = random_slice_point(rng).to_quaternion();
      if (name == "recip" && symm_eval(f, q).norm() < 1e-1) continue;
      worst = std::max(worst, regularity_residual(e, q) / std::max(1.0, eval(e, q).norm()));
    }
    CHECK(worst < 1e-6);
  }
}
