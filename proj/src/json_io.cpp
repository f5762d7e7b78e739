#include "slicereg/json_io.hpp"

#include <cmath>
#include <limits>

#include "slicereg/representation.hpp"

namespace slicereg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite");
  return v;
}

// null means an infinite bound with the given sign.
double bound(const Json& j, const char* key, double missing) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return missing;
  return number(*it, key);
}

Json bound_json(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json maybe_inf(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }
double from_maybe_inf(const Json& j, const char* key) {
  const Json& v = field(j, key);
  return v.is_null() ? kInf : number(v, key);
}

SliceExpr binary(const Json& j, double grid, SliceExpr (*make)(SliceExpr, SliceExpr)) {
  return make(expr_from_json(field(j, "left"), grid), expr_from_json(field(j, "right"), grid));
}

}  // namespace

Json to_json(const Quaternion& q) {
  if (!is_finite(q)) throw DomainError("non-finite quaternion");
  return Json::array({q.x0, q.x1, q.x2, q.x3});
}

Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("a quaternion is an array of 4 numbers");
  return Quaternion(number(j[0], "x0"), number(j[1], "x1"), number(j[2], "x2"),
                    number(j[3], "x3"));
}

Json to_json(const SlicePolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& a : p.coeffs()) coeffs.push_back(to_json(a));
  return {{"center", p.center()}, {"coeffs", coeffs}};
}

SlicePolynomial polynomial_from_json(const Json& j) {
  const Json& c = field(j, "coeffs");
  if (!c.is_array()) throw ParseError("\"coeffs\" must be an array");
  std::vector<Quaternion> coeffs;
  for (const auto& a : c) coeffs.push_back(quaternion_from_json(a));
  const double center = j.contains("center") ? number(j["center"], "center") : 0.0;
  return SlicePolynomial(std::move(coeffs), center);
}

Json to_json(const Region& r) {
  Json boxes = Json::array(), discs = Json::array();
  for (const auto& s : r.shapes()) {
    if (const auto* b = std::get_if<Box>(&s)) {
      boxes.push_back({{"x0", bound_json(b->x0)},
                       {"x1", bound_json(b->x1)},
                       {"y0", bound_json(b->y0)},
                       {"y1", bound_json(b->y1)}});
    } else {
      const auto& d = std::get<Disc>(s);
      discs.push_back({{"cx", d.cx}, {"cy", d.cy}, {"r", d.r}});
    }
  }
  return {{"boxes", boxes}, {"discs", discs}};
}

Region region_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a domain is an object");
  std::vector<Shape> shapes;
  if (auto it = j.find("boxes"); it != j.end()) {
    if (!it->is_array()) throw ParseError("\"boxes\" must be an array");
    for (const auto& b : *it) {
      if (!b.is_object()) throw ParseError("a box is an object");
      const double y1 = bound(b, "y1", kInf);
      shapes.push_back(Box{bound(b, "x0", -kInf), bound(b, "x1", kInf), bound(b, "y0", -y1), y1});
    }
  }
  if (auto it = j.find("discs"); it != j.end()) {
    if (!it->is_array()) throw ParseError("\"discs\" must be an array");
    for (const auto& d : *it)
      shapes.push_back(Disc{number(field(d, "cx"), "cx"), number(field(d, "cy"), "cy"),
                            number(field(d, "r"), "r")});
  }
  return Region(std::move(shapes));
}

Json to_json(const StemFunction& s) {
  if (!s.source) throw PreconditionError("only polynomial restrictions can be serialized");
  Json j = to_json(*s.source);
  j["unit"] = to_json(s.unit.value());
  j["domain"] = to_json(s.domain);
  return j;
}

StemFunction stem_from_json(const Json& j) {
  const ImaginaryUnit unit(quaternion_from_json(field(j, "unit")));
  Region domain = j.contains("domain") ? region_from_json(j["domain"]) : Region::whole_plane();
  return StemFunction::restriction(polynomial_from_json(j), unit, std::move(domain));
}

Json to_json(const SliceExpr& f) {
  const auto& data = f.node().data;
  if (const auto* n = std::get_if<PolyNode>(&data)) {
    Json j = to_json(n->poly);
    j["op"] = "poly";
    if (n->domain) j["domain"] = to_json(n->domain->region());
    return j;
  }
  if (const auto* n = std::get_if<ExtNode>(&data)) {
    if (n->s) return {{"op", "ext"}, {"r", to_json(n->r)}, {"s", to_json(*n->s)}};
    return {{"op", "ext"}, {"stem", to_json(n->r)}};
  }
  if (const auto* n = std::get_if<StarNode>(&data))
    return {{"op", "star"}, {"left", to_json(n->left)}, {"right", to_json(n->right)}};
  if (const auto* n = std::get_if<SumNode>(&data))
    return {{"op", "sum"}, {"left", to_json(n->left)}, {"right", to_json(n->right)}};
  if (const auto* n = std::get_if<ConjNode>(&data)) return {{"op", "conj"}, {"arg", to_json(n->arg)}};
  if (const auto* n = std::get_if<SymmNode>(&data)) return {{"op", "symm"}, {"arg", to_json(n->arg)}};
  if (const auto* n = std::get_if<RecipNode>(&data))
    return {{"op", "recip"}, {"arg", to_json(n->arg)}};
  if (const auto* n = std::get_if<ScaleNode>(&data))
    return {{"op", "rscale"}, {"arg", to_json(n->arg)}, {"scalar", to_json(n->scalar)}};
  const auto& m = std::get<MapNode>(data);
  if (m.name != "conj") throw PreconditionError("map \"" + m.name + "\" cannot be serialized");
  return {{"op", "map"}, {"name", m.name}};
}

SliceExpr expr_from_json(const Json& j, double grid) {
  const Json& opj = field(j, "op");
  if (!opj.is_string()) throw ParseError("\"op\" must be a string");
  const std::string op = opj.get<std::string>();
  if (op == "poly") {
    std::optional<AxialDomain> domain;
    if (j.contains("domain")) domain = AxialDomain(region_from_json(j["domain"]), grid);
    return SliceExpr::poly(polynomial_from_json(j), std::move(domain));
  }
  if (op == "ext") {
    if (j.contains("stem")) return ext_from_holomorphic(stem_from_json(j["stem"]));
    return extend(stem_from_json(field(j, "r")), stem_from_json(field(j, "s")));
  }
  if (op == "star") return binary(j, grid, &SliceExpr::star);
  if (op == "sum") return binary(j, grid, &SliceExpr::sum);
  if (op == "conj") return SliceExpr::conj(expr_from_json(field(j, "arg"), grid));
  if (op == "symm") return SliceExpr::symm(expr_from_json(field(j, "arg"), grid));
  if (op == "recip") return SliceExpr::recip(expr_from_json(field(j, "arg"), grid));
  if (op == "rscale")
    return SliceExpr::rscale(expr_from_json(field(j, "arg"), grid),
                             quaternion_from_json(field(j, "scalar")));
  if (op == "map") {
    const Json& name = field(j, "name");
    if (name != "conj") throw ParseError("unknown map; only \"conj\" is available");
    return SliceExpr::map("conj", [](const Quaternion& q) { return q.conj(); });
  }
  throw ParseError("unknown op \"" + op + "\"");
}

Json to_json(const SphereZero& z) {
  Json j = {{"x", z.x}, {"y", z.y}, {"kind", to_string(z.kind)}, {"residual", z.residual}};
  if (z.unit) j["unit"] = to_json(z.unit->value());
  if (z.arbitrary_unit) j["arbitrary_unit"] = true;
  if (!z.converged) j["converged"] = false;
  return j;
}

SphereZero sphere_zero_from_json(const Json& j) {
  SphereZero z;
  z.x = number(field(j, "x"), "x");
  z.y = number(field(j, "y"), "y");
  const Json& kind = field(j, "kind");
  if (kind == "none")
    z.kind = SphereZero::Kind::None;
  else if (kind == "isolated")
    z.kind = SphereZero::Kind::Isolated;
  else if (kind == "spherical")
    z.kind = SphereZero::Kind::Spherical;
  else
    throw ParseError("unknown zero kind");
  z.residual = number(field(j, "residual"), "residual");
  if (j.contains("unit")) z.unit = ImaginaryUnit(quaternion_from_json(j["unit"]));
  z.arbitrary_unit = j.value("arbitrary_unit", false);
  z.converged = j.value("converged", true);
  return z;
}

Json to_json(const std::vector<SphereZero>& zs) {
  Json out = Json::array();
  for (const auto& z : zs) out.push_back(to_json(z));
  return out;
}

Json to_json(const CheckReport& r) {
  return {{"name", r.name},
          {"samples", r.samples},
          {"max_residual", maybe_inf(r.max_residual)},
          {"tolerance", r.tolerance},
          {"passed", r.passed},
          {"worst_input", r.worst_input},
          {"worst_residual", maybe_inf(r.worst_residual)}};
}

CheckReport check_report_from_json(const Json& j) {
  CheckReport r;
  const Json& name = field(j, "name");
  if (!name.is_string()) throw ParseError("\"name\" must be a string");
  r.name = name.get<std::string>();
  r.samples = field(j, "samples").get<std::size_t>();
  r.max_residual = from_maybe_inf(j, "max_residual");
  r.tolerance = number(field(j, "tolerance"), "tolerance");
  r.passed = field(j, "passed").get<bool>();
  r.worst_input = field(j, "worst_input").get<std::string>();
  r.worst_residual = from_maybe_inf(j, "worst_residual");
  return r;
}

}  // namespace slicereg
