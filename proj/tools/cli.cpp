#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>

#include "slicereg/json_io.hpp"
#include "slicereg/representation.hpp"
#include "slicereg/verify.hpp"
#include "slicereg/zeros.hpp"

namespace slicereg::cli {

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kDomain = 3 };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool pretty = false;

  void emit(const Json& j) const { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }
};

Json parse_text(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Usage(std::string("malformed JSON in ") + what + ": " + e.what());
  }
}

Json read_stdin(const Io& io) {
  const std::string text{std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>()};
  return parse_text(text, "stdin");
}

// Flag value if given, otherwise the named member of the stdin document.
class Input {
 public:
  explicit Input(const Io& io) : io_(io) {}
  Json get(const std::string& flag, const char* key) {
    if (!flag.empty()) return parse_text(flag, key);
    if (!doc_) doc_ = read_stdin(io_);
    if (!doc_->is_object() || !doc_->contains(key))
      throw Usage(std::string("missing \"") + key + "\" (flag or stdin member)");
    return (*doc_)[key];
  }
  const Json& document() {
    if (!doc_) doc_ = read_stdin(io_);
    return *doc_;
  }

 private:
  const Io& io_;
  std::optional<Json> doc_;
};

Json eval_points(const SliceExpr& f, const Json& points) {
  if (!points.is_array()) throw ParseError("\"points\" must be an array");
  std::vector<Quaternion> qs;
  for (const auto& p : points) qs.push_back(quaternion_from_json(p));
  Json values = Json::array();
  for (const auto& q : qs) {
    try {
      const Quaternion v = eval(f, q);
      values.push_back(to_json(v));
    } catch (const Error& e) {
      values.push_back({{"error", e.what()}});
    }
  }
  return values;
}

int cmd_eval(const Io& io, const std::string& expr_flag, const std::string& points_flag,
             double grid) {
  Input input(io);
  const Json expr = input.get(expr_flag, "expr");
  const Json points = input.get(points_flag, "points");
  io.emit(eval_points(expr_from_json(expr, grid), points));
  return kOk;
}

int cmd_roots(const Io& io, const std::string& poly_flag, double tol) {
  Input input(io);
  const Json doc = poly_flag.empty() ? input.document() : parse_text(poly_flag, "--poly");
  const Json& pj = doc.is_object() && doc.contains("poly") ? doc["poly"] : doc;
  const SlicePolynomial p = polynomial_from_json(pj);
  if (p.degree() < 1) throw Usage("roots needs a polynomial of degree >= 1");
  try {
    io.emit(to_json(poly_roots(p, tol)));
  } catch (const NonConvergence& e) {
    io.emit(to_json(e.partial()));
    throw;
  }
  return kOk;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SLICEREG_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Usage("SLICEREG_SEED is not an unsigned integer");
  }
  return 7;
}

int cmd_check(const Io& io, const std::string& suite, std::optional<std::uint64_t> seed,
              int samples, bool control) {
  if (samples <= 0) throw Usage("--samples must be positive");
  if (suite != "all" && suite != "grf" && suite != "identities" && suite != "extension")
    throw Usage("unknown suite \"" + suite + "\"");
  bool ok = true;
  for (const auto& r : run_suite(suite, seed ? *seed : default_seed(), samples, control)) {
    io.emit(to_json(r));
    ok = ok && r.passed;
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_extend(const Io& io, const std::string& json_flag) {
  Input input(io);
  const Json doc = json_flag.empty() ? input.document() : parse_text(json_flag, "--json");
  if (!doc.is_object()) throw ParseError("extend expects an object with \"stem\" or \"r\", \"s\"");
  Json ext = {{"op", "ext"}};
  if (doc.contains("stem")) {
    ext["stem"] = doc["stem"];
  } else {
    ext["r"] = doc.value("r", Json());
    ext["s"] = doc.value("s", Json());
  }
  const SliceExpr f = expr_from_json(ext);
  Json result = {{"expr", to_json(f)}};
  if (doc.contains("points")) result["values"] = eval_points(f, doc["points"]);
  io.emit(result);
  return kOk;
}

int cmd_kernel(const Io& io, const std::string& s_flag, const std::string& q_flag) {
  Input input(io);
  const Quaternion s = quaternion_from_json(input.get(s_flag, "s"));
  const Quaternion q = quaternion_from_json(input.get(q_flag, "q"));
  io.emit(to_json(cauchy_kernel(s, q)));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Slice regular quaternionic functions", "slicereg"};
  app.require_subcommand(1);
  Io io{in, out, err};
  app.add_flag("--pretty", io.pretty, "Indented JSON output");

  double grid = 1e-2;
  std::string expr_flag, points_flag, poly_flag, json_flag, s_flag, q_flag;
  double tol = kDefaultRootTol;
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  int samples = 200;
  bool control = false;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression at points");
  eval_cmd->add_option("--expr", expr_flag, "Expression JSON (default: stdin member \"expr\")");
  eval_cmd->add_option("--points", points_flag, "Point list JSON (default: stdin member \"points\")");
  eval_cmd->add_option("--grid-step", grid, "Raster step for domain classification");

  auto* roots_cmd = app.add_subcommand("roots", "Zero spheres of a polynomial");
  roots_cmd->add_option("--poly", poly_flag, "Polynomial JSON (default: stdin)");
  roots_cmd->add_option("--tol", tol, "Classification tolerance");

  auto* check_cmd = app.add_subcommand("check", "Run a verification suite");
  check_cmd->add_option("--suite", suite, "grf | identities | extension | all");
  check_cmd->add_option("--seed", seed, "RNG seed (default: $SLICEREG_SEED or 7)");
  check_cmd->add_option("--samples", samples, "Samples per report");
  check_cmd->add_flag("--control", control, "Add the non-regular conj(q) GRF control");

  auto* extend_cmd = app.add_subcommand("extend", "Regular extension of slice data");
  extend_cmd->add_option("--json", json_flag, "{\"stem\"} or {\"r\", \"s\"}, optional \"points\"");

  auto* kernel_cmd = app.add_subcommand("kernel", "Cauchy kernel S^{-*}(q)");
  kernel_cmd->add_option("--s", s_flag, "Quaternion JSON");
  kernel_cmd->add_option("--q", q_flag, "Quaternion JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(io, expr_flag, points_flag, grid);
    if (roots_cmd->parsed()) return cmd_roots(io, poly_flag, tol);
    if (check_cmd->parsed()) return cmd_check(io, suite, seed, samples, control);
    if (extend_cmd->parsed()) return cmd_extend(io, json_flag);
    if (kernel_cmd->parsed()) return cmd_kernel(io, s_flag, q_flag);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SingularPoint& e) {
    err << "error: " << e.what() << " (sphere x=" << e.sphere_x() << " y=" << e.sphere_y()
        << ")\n";
    return kDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace slicereg::cli
