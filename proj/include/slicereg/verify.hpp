#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slicereg/polynomial.hpp"
#include "slicereg/slice_expr.hpp"

namespace slicereg {

/// SplitMix64 generator with hand-rolled real/normal conversions, so sample
/// streams are identical on every platform and standard library.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller, cosine branch only).
  double normal();

 private:
  std::uint64_t state_;
};

/// Uniform point of S (normalized Gaussian triple).
ImaginaryUnit random_unit(SplitMix64& rng);
/// Uniform direction in R^4 with |q| uniform in [0, max_norm].
Quaternion random_quaternion(SplitMix64& rng, double max_norm = 1.0);
/// Coefficients with |a_n| <= 1; the leading one is redrawn until
/// |a_degree| >= min_leading.
SlicePolynomial random_polynomial(SplitMix64& rng, int degree, double center = 0.0,
                                  double min_leading = 0.25);

/// x uniform in [-2, 2], y uniform in [0.1, 2], I uniform on S.
SlicePoint random_slice_point(SplitMix64& rng);

struct CheckReport {
  std::string name;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  std::string worst_input;
  double worst_residual = 0.0;

  /// Folds one sample into the report.
  void record(double residual, const std::string& input);
  /// passed <=> max_residual <= tolerance.
  void finish();
};

std::string describe(const Quaternion& q);

/// Representation-formula check: at random spheres and target units, the
/// value rebuilt from f on slices J, K must not depend on the pair, must
/// equal f(x + yI), and the rebuilt slice function must have a vanishing
/// Cauchy loop integral around x + yI. Residuals are relative to
/// max(1, magnitude of the values involved).
CheckReport check_grf_invariance(const SliceExpr& f, int spheres, int unit_pairs,
                                 std::uint64_t seed, double tolerance = 1e-9);

/// anti_homomorphism, composition, symmetrization_multiplicativity,
/// left_reciprocal and slice_preservation reports. Evaluation errors count
/// as infinite residuals.
std::vector<CheckReport> check_identity_suite(const SliceExpr& f, const SliceExpr& g, int points,
                                              std::uint64_t seed);

/// ext_from_holomorphic of the restriction of f to a slice against f.
CheckReport check_extension_roundtrip(const SlicePolynomial& f, const ImaginaryUnit& slice,
                                      int points, std::uint64_t seed = 1,
                                      double tolerance = 1e-9);

/// Suites behind the "check" command: "grf", "identities", "extension" or
/// "all". `non_regular_control` adds the conj(q) GRF control, which must fail.
std::vector<CheckReport> run_suite(std::string_view suite, std::uint64_t seed, int samples,
                                   bool non_regular_control = false);

}  // namespace slicereg
