#include "slicereg/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "slicereg/representation.hpp"

namespace slicereg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kClusterFloor = 1e-8;
constexpr double kRealAxisTol = 1e-9;

struct Horner {
  Complex p;
  Complex dp;
  double envelope;  // sum |c_k| |z|^k
};

Horner horner(std::span<const Complex> c, const Complex& z) {
  Complex p = c.back(), dp = 0.0;
  double env = std::abs(c.back());
  const double az = std::abs(z);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
    env = env * az + std::abs(c[k]);
  }
  return {p, dp, env};
}

// Disjoint-set forest over root indices.
struct Clusters {
  std::vector<std::size_t> parent;
  explicit Clusters(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

struct Candidate {
  Complex root;
  bool converged;
};

// An m-fold root of p is a simple root of p^(m-1); Newton there recovers
// the digits the centroid loses. Kept only if it stays inside the cluster.
Complex polish_multiple(std::span<const Complex> coeffs, Complex z, std::size_t m, double spread) {
  std::vector<Complex> d(coeffs.begin(), coeffs.end());
  for (std::size_t k = 1; k < m && d.size() > 1; ++k) {
    for (std::size_t i = 1; i < d.size(); ++i) d[i - 1] = d[i] * static_cast<double>(i);
    d.pop_back();
  }
  if (d.size() < 2) return z;
  const Complex start = z;
  for (int it = 0; it < 20; ++it) {
    const Horner h = horner(d, z);
    if (h.dp == Complex(0.0)) break;
    const Complex step = h.p / h.dp;
    z -= step;
    if (std::abs(step) <= kEps * std::max(1.0, std::abs(z))) break;
  }
  return std::isfinite(z.real()) && std::isfinite(z.imag()) && std::abs(z - start) <= spread
             ? z
             : start;
}

// Groups approximations whose Newton inclusion discs overlap and replaces each
// group by its centroid; an m-fold root scatters its m approximations on a
// circle of radius ~eps^(1/m) while their mean stays accurate.
std::vector<Candidate> cluster_roots(std::span<const Complex> coeffs, const AberthResult& ar) {
  const std::size_t n = ar.roots.size();
  std::vector<double> radius(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex z = ar.roots[k];
    const Horner h = horner(coeffs, z);
    const double newton = std::abs(h.dp) > 0.0 ? static_cast<double>(n) * std::abs(h.p / h.dp)
                                               : std::numeric_limits<double>::infinity();
    radius[k] = std::max(std::isfinite(newton) ? newton : 0.0,
                         kClusterFloor * std::max(1.0, std::abs(z)));
  }
  Clusters sets(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (std::abs(ar.roots[a] - ar.roots[b]) <= radius[a] + radius[b]) sets.unite(a, b);

  std::vector<Candidate> out;
  std::vector<std::size_t> seen;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t r = sets.find(a);
    if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
    seen.push_back(r);
    Complex sum = 0.0;
    std::size_t count = 0;
    bool conv = true;
    for (std::size_t b = 0; b < n; ++b) {
      if (sets.find(b) != r) continue;
      sum += ar.roots[b];
      ++count;
      conv = conv && ar.converged[b];
    }
    Complex center = sum / static_cast<double>(count);
    double spread = 0.0;
    for (std::size_t b = 0; b < n; ++b)
      if (sets.find(b) == r) spread = std::max(spread, std::abs(ar.roots[b] - center) + radius[b]);
    if (count > 1) center = polish_multiple(coeffs, center, count, spread);
    out.push_back({center, conv});
  }
  return out;
}

}  // namespace

const char* to_string(SphereZero::Kind kind) {
  switch (kind) {
    case SphereZero::Kind::None: return "none";
    case SphereZero::Kind::Isolated: return "isolated";
    case SphereZero::Kind::Spherical: return "spherical";
  }
  return "none";
}

SphereZero sphere_zero_classify(const SliceExpr& f, double x, double y, double tol) {
  if (y < 0.0) throw PreconditionError("sphere_zero_classify needs y >= 0");
  SphereZero z;
  z.x = x;
  z.y = y;
  if (y == 0.0) {
    z.residual = eval(f, Quaternion(x)).norm();
    if (z.residual < tol) {
      z.kind = SphereZero::Kind::Isolated;
      z.unit = ImaginaryUnit::i();
      z.arbitrary_unit = true;
    }
    return z;
  }
  const auto [b, c] = sphere_affine_coeffs(f, x, y);
  if (b.norm() < tol && c.norm() < tol) {
    z.kind = SphereZero::Kind::Spherical;
    z.residual = b.norm() + c.norm();
    return z;
  }
  if (c.norm() < tol) {
    z.residual = b.norm();
    return z;
  }
  // b + I c = 0  <=>  I = -b c^{-1}; accept it when its direction on S
  // actually annihilates f.
  const Quaternion candidate = -(b * inverse(c));
  if (candidate.im_norm() <= 1e-12 * std::max(1.0, candidate.norm())) {
    z.residual = b.norm();
    return z;
  }
  const ImaginaryUnit unit(candidate);
  z.residual = eval(f, from_slice(x, y, unit)).norm();
  if (z.residual <= tol) {
    z.kind = SphereZero::Kind::Isolated;
    z.unit = unit;
  }
  return z;
}

bool AberthResult::all_converged() const {
  return std::all_of(converged.begin(), converged.end(), [](bool c) { return c; });
}

AberthResult aberth_roots(std::span<const Complex> coeffs, const AberthOptions& opts) {
  std::size_t size = coeffs.size();
  while (size > 0 && coeffs[size - 1] == Complex(0.0)) --size;
  AberthResult res;
  if (size <= 1) return res;
  const auto c = coeffs.first(size);
  const std::size_t n = size - 1;

  double ratio = 0.0;
  for (std::size_t k = 0; k < n; ++k) ratio = std::max(ratio, std::abs(c[k] / c[n]));
  const double radius = 1.0 + ratio;
  res.roots.resize(n);
  res.converged.assign(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n + 0.4;
    res.roots[k] = std::polar(radius, angle);
  }

  for (res.iterations = 0; res.iterations < opts.max_iterations; ++res.iterations) {
    bool done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (res.converged[k]) continue;
      Complex& z = res.roots[k];
      const Horner h = horner(c, z);
      if (std::abs(h.p) <= 16.0 * kEps * h.envelope) {
        res.converged[k] = true;
        continue;
      }
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) repulsion += 1.0 / (z - res.roots[j]);
      const Complex denom = h.dp / h.p - repulsion;
      Complex step;
      if (denom == Complex(0.0)) {
        step = Complex(1e-3 * std::max(1.0, std::abs(z)), 0.0);
      } else {
        step = 1.0 / denom;
      }
      z -= step;
      if (std::abs(step) <= opts.step_tol * std::max(1.0, std::abs(z)))
        res.converged[k] = true;
      else
        done = false;
    }
    if (done && res.all_converged()) break;
  }
  return res;
}

std::vector<SphereZero> poly_roots(const SlicePolynomial& f, double tol) {
  if (f.degree() < 1) throw PreconditionError("poly_roots needs degree >= 1");
  const SlicePolynomial fs = symm_poly(f);
  std::vector<Complex> coeffs;
  coeffs.reserve(fs.coeffs().size());
  for (const auto& a : fs.coeffs()) coeffs.emplace_back(a.x0, 0.0);

  const AberthResult ar = aberth_roots(coeffs);
  const auto clusters = cluster_roots(coeffs, ar);

  struct Sphere {
    double x, y;
    bool converged;
  };
  std::vector<Sphere> spheres;
  for (const auto& cand : clusters) {
    const double scale = std::max(1.0, std::abs(cand.root));
    double y = std::abs(cand.root.imag());
    if (y <= kRealAxisTol * scale) y = 0.0;
    const double x = f.center() + cand.root.real();
    auto same = std::find_if(spheres.begin(), spheres.end(), [&](const Sphere& s) {
      return std::hypot(s.x - x, s.y - y) <= kClusterFloor * scale;
    });
    if (same != spheres.end())
      same->converged = same->converged && cand.converged;
    else
      spheres.push_back({x, y, cand.converged});
  }
  std::sort(spheres.begin(), spheres.end(),
            [](const Sphere& a, const Sphere& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });

  const SliceExpr fe = SliceExpr::poly(f);
  std::vector<SphereZero> out;
  out.reserve(spheres.size());
  bool all_converged = true;
  for (const auto& s : spheres) {
    const double rho = std::hypot(s.x - f.center(), s.y);
    const double scaled_tol = tol * std::max(1.0, f.majorant(std::max(1.0, rho)));
    SphereZero z = sphere_zero_classify(fe, s.x, s.y, scaled_tol);
    z.converged = s.converged;
    all_converged = all_converged && s.converged;
    out.push_back(z);
  }
  if (!all_converged)
    throw NonConvergence("root iteration did not converge within the iteration limit",
                         std::move(out));
  return out;
}

StarZeroCheck star_zero_check(const SliceExpr& f, const SliceExpr& g, const Quaternion& q,
                              double tol) {
  StarZeroCheck r;
  const Quaternion fq = eval(f, q);
  r.product_norm = star_eval(f, g, q).norm();
  r.product_vanishes = r.product_norm < tol;
  r.left_vanishes = fq.norm() < tol;
  if (!r.left_vanishes) r.right_vanishes = eval(g, inverse(fq) * q * fq).norm() < tol;
  r.holds = (r.left_vanishes || r.right_vanishes) == r.product_vanishes;
  return r;
}

Quaternion cauchy_kernel(const Quaternion& s, const Quaternion& q) {
  const Quaternion den = q * q - 2.0 * s.re() * q + Quaternion(s.norm2());
  const Quaternion num = q - s.conj();
  if (den.norm() <= 1e-10 * std::max(1.0, num.norm()))
    throw SingularPoint("Cauchy kernel evaluated on its singular sphere", s.re(), s.im_norm());
  return inverse(den) * num;
}

}  // namespace slicereg
