#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "slicereg/json_io.hpp"
#include "slicereg/representation.hpp"

using namespace slicereg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("quaternion and polynomial encodings") {
  CHECK(to_json(Quaternion(1, -2, 0.5, 3)) == Json::parse("[1, -2, 0.5, 3]"));
  CHECK(quaternion_from_json(Json::parse("[0, 0, 1, 0]")) == kJ);
  CHECK_THROWS_AS(quaternion_from_json(Json::parse("[0, 1]")), ParseError);
  CHECK_THROWS_AS(quaternion_from_json(Json::parse("[0, 1, \"a\", 2]")), ParseError);
  CHECK_THROWS_AS(to_json(Quaternion(NAN, 0, 0, 0)), DomainError);

  const auto p = polynomial_from_json(Json::parse(R"({"center": 0.5, "coeffs": [[0,0,-1,0],[1,0,0,0]]})"));
  CHECK(p == SlicePolynomial({-kJ, kOne}, 0.5));
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"center": 0})")), ParseError);
}

TEST_CASE("property: emitted JSON re-parses to equal values") {
  SplitMix64 rng(71);
  for (int n = 0; n < 200; ++n) {
    const Quaternion q(rng.normal() * 1e3, rng.normal() * 1e-7, rng.normal(), rng.uniform());
    CHECK(quaternion_from_json(reparse(to_json(q))) == q);
    const auto p = random_polynomial(rng, 6, rng.uniform(-1.0, 1.0));
    CHECK(polynomial_from_json(reparse(to_json(p))) == p);
  }

  const auto f = SliceExpr::poly(random_polynomial(rng, 3));
  const auto g = SliceExpr::poly(random_polynomial(rng, 2));
  const SlicePolynomial h = random_polynomial(rng, 4);
  const Region dom({Box{-1, 1, -0.5, 0.5}, Disc{0.5, 0, 0.75}});
  const std::vector<SliceExpr> exprs = {
      SliceExpr::star(f, SliceExpr::conj(g)),
      SliceExpr::recip(SliceExpr::symm(f)),
      SliceExpr::rscale(SliceExpr::sum(f, g), Quaternion(0.25, 1, -2, 0.125)),
      SliceExpr::poly(h, AxialDomain(dom)),
      ext_from_holomorphic(StemFunction::restriction(h, random_unit(rng), dom)),
      extend(StemFunction::restriction(h, ImaginaryUnit::i()),
             StemFunction::restriction(h, ImaginaryUnit::k())),
      SliceExpr::map("conj", [](const Quaternion& q) { return q.conj(); }),
  };
  for (const auto& e : exprs) {
    const Json j = to_json(e);
    const SliceExpr back = expr_from_json(reparse(j));
    CHECK(to_json(back) == j);
    for (int n = 0; n < 10; ++n) {
      const Quaternion q = random_quaternion(rng, 0.4);
      if (!e.contains(q)) continue;
      CHECK(distance(eval(back, q), eval(e, q)) < 1e-12);
    }
  }

  SphereZero z;
  z.x = 0.1;
  z.y = 1.0 / 3.0;
  z.kind = SphereZero::Kind::Isolated;
  z.unit = ImaginaryUnit(Quaternion(0, 0.6, 0, 0.8));
  z.residual = 1e-17;
  const SphereZero zb = sphere_zero_from_json(reparse(to_json(z)));
  CHECK(zb.x == z.x);
  CHECK(zb.y == z.y);
  CHECK(zb.kind == z.kind);
  CHECK(distance(zb.unit->value(), z.unit->value()) < 1e-16);
  CHECK(zb.residual == z.residual);

  CheckReport r;
  r.name = "x";
  r.samples = 3;
  r.max_residual = INFINITY;
  r.worst_residual = INFINITY;
  r.tolerance = 1e-9;
  r.passed = false;
  r.worst_input = "q";
  const CheckReport rb = check_report_from_json(reparse(to_json(r)));
  CHECK(rb.name == r.name);
  CHECK(rb.samples == r.samples);
  CHECK(rb.max_residual == r.max_residual);
  CHECK(rb.tolerance == r.tolerance);
  CHECK(rb.passed == r.passed);
}

TEST_CASE("expression parse errors") {
  CHECK_THROWS_AS(expr_from_json(Json::parse(R"({"op": "nope"})")), ParseError);
  CHECK_THROWS_AS(expr_from_json(Json::parse(R"({"op": "star", "left": {"op":"poly","coeffs":[]}})")),
                  ParseError);
  CHECK_THROWS_AS(expr_from_json(Json::parse(R"({"op": "map", "name": "exp"})")), ParseError);
}

TEST_CASE("cli eval") {
  const std::string qmj = R"({"op":"poly","center":0,"coeffs":[[0,0,-1,0],[1,0,0,0]]})";
  auto r = run({"eval", "--expr", qmj, "--points", "[[0,0,1,0]]"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out) == Json::parse("[[0,0,0,0]]"));

  r = run({"eval"}, R"({"expr": {"op":"recip","arg":)" + qmj + R"(}, "points": [[0,0,2,0],[0,0,1,0]]})");
  CHECK(r.code == 0);
  const Json v = Json::parse(r.out);
  CHECK(distance(quaternion_from_json(v[0]), -kJ) < 1e-12);
  CHECK(v[1].contains("error"));

  r = run({"eval", "--expr",
           R"({"op":"poly","coeffs":[[1,0,0,0]],"domain":{"boxes":[{"x0":-1,"x1":1,"y1":1}]}})",
           "--points", "[[5,0,0,0],[0,0.5,0,0]]"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)[0].contains("error"));
  CHECK(Json::parse(r.out)[1] == Json::parse("[1,0,0,0]"));

  r = run({"eval"}, "{not json");
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error:", 0) == 0);

  r = run({"--pretty", "eval", "--expr", qmj, "--points", "[[1,0,0,0]]"});
  CHECK(r.code == 0);
  CHECK(r.out.find('\n') < r.out.size() - 1);
}

TEST_CASE("cli roots") {
  auto r = run({"roots", "--poly", R"({"center":0,"coeffs":[[1,0,0,0],[0,0,0,0],[1,0,0,0]]})"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["kind"] == "spherical");
  CHECK(j[0]["x"].get<double>() == doctest::Approx(0.0));
  CHECK(j[0]["y"].get<double>() == doctest::Approx(1.0));

  r = run({"roots"}, R"({"center":0,"coeffs":[[0,0,-1,0],[1,0,0,0]]})");
  j = Json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["kind"] == "isolated");
  CHECK(distance(quaternion_from_json(j[0]["unit"]), kJ) < 1e-12);

  r = run({"roots", "--poly", R"({"center":0,"coeffs":[[0,0,0,1],[0,-1,-1,0],[1,0,0,0]]})"});
  for (const auto& z : Json::parse(r.out)) {
    CHECK(z["x"].get<double>() == doctest::Approx(0.0));
    CHECK(z["y"].get<double>() == doctest::Approx(1.0));
    CHECK(z["residual"].get<double>() < 1e-7);
  }

  CHECK(run({"roots", "--poly", R"({"coeffs":[[1,0,0,0]]})"}).code == 2);
}

TEST_CASE("cli check") {
  auto r = run({"check", "--suite", "all", "--seed", "7", "--samples", "200"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  int count = 0;
  for (std::string line; std::getline(lines, line); ++count)
    CHECK(Json::parse(line)["passed"] == true);
  CHECK(count == 9);

  CHECK(run({"check", "--suite", "grf", "--control", "--samples", "50"}).code == 1);
  r = run({"check", "--samples", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error:", 0) == 0);
  CHECK(run({"check", "--suite", "bogus"}).code == 2);

  setenv("SLICEREG_SEED", "11", 1);
  const auto a = run({"check", "--suite", "extension", "--samples", "20"});
  const auto b = run({"check", "--suite", "extension", "--samples", "20", "--seed", "11"});
  const auto c = run({"check", "--suite", "extension", "--samples", "20", "--seed", "7"});
  unsetenv("SLICEREG_SEED");
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}

TEST_CASE("cli extend") {
  const std::string stem = R"({"unit":[0,0,1,0],"center":0,"coeffs":[[0,0,-1,0],[1,0,0,0]]})";
  auto r = run({"extend"}, R"({"stem":)" + stem + R"(, "points": [[0,0,0,1]]})");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["expr"]["op"] == "ext");
  CHECK(distance(quaternion_from_json(j["values"][0]), kK - kJ) < 1e-14);

  r = run({"extend", "--json",
           R"({"stem":{"unit":[0,1,0,0],"coeffs":[[1,0,0,0]],"domain":{"discs":[{"cx":0,"cy":2,"r":1}]}}})"});
  CHECK(r.code == 3);
  CHECK(r.err.rfind("error:", 0) == 0);
}

TEST_CASE("cli kernel") {
  auto r = run({"kernel", "--s", "[0,1,0,0]", "--q", "[0,0,2,0]"});
  CHECK(r.code == 0);
  CHECK(distance(quaternion_from_json(Json::parse(r.out)), -(kI + 2.0 * kJ) / 3.0) < 1e-15);
  r = run({"kernel"}, R"({"s": [0,0,0,0], "q": [1,0,0,0]})");
  CHECK(Json::parse(r.out) == Json::parse("[1,0,0,0]"));
  r = run({"kernel", "--s", "[0,1,0,0]", "--q", "[0,0,1,0]"});
  CHECK(r.code == 3);
  CHECK(r.err.rfind("error:", 0) == 0);
}

TEST_CASE("cli usage errors") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"eval", "--bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
