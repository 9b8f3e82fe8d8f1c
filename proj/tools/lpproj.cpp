#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpproj/errors.hpp"
#include "lpproj/json_io.hpp"
#include "lpproj/operators.hpp"
#include "lpproj/verify.hpp"

namespace {

using namespace lpproj;
using nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kPrecondition = 3 };

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LPPROJ_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("LPPROJ_SEED must be an unsigned integer");
    }
  }
  return 7;
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(out, j);
  }
}

std::vector<double> parse_direction(const std::string& text, int n) {
  std::vector<double> u;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) u.push_back(parse_rational(item).get_d());
  if (static_cast<int>(u.size()) != n)
    throw ParseError("direction has " + std::to_string(u.size()) + " entries, expected " +
                     std::to_string(n));
  return u;
}

int cmd_body(const std::string& op, double p, const std::string& in, const std::string& out) {
  const auto kind = parse_operator(op);
  if (!kind) throw ParseError("unknown operator '" + op + "'");
  const auto P = polytope_from_json(read_json_file(in));
  emit(to_json(apply(*kind, P, p)), out);
  return kOk;
}

int cmd_eval(const std::string& body, const std::string& dir) {
  const auto f = signed_from_json(read_json_file(body));
  const auto u = parse_direction(dir, f.pos().dim());
  std::printf("%.15g\n", f(u));
  return kOk;
}

int cmd_verify(const std::string& suite, const SuiteConfig& cfg) {
  if (suite == "classification" && cfg.n < 3) {
    std::cerr << "error: classification requires n >= 3\n";
    return kUsage;
  }
  if (cfg.n < 2 || !(cfg.p > 1.0) || cfg.cases < 1 || (cfg.tol && !(*cfg.tol > 0.0))) {
    std::cerr << "error: need n >= 2, p > 1, cases >= 1 and tol > 0\n";
    return kUsage;
  }
  const auto reports = run_suite(suite, cfg);
  json out = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    out.push_back(to_json(r));
    ok = ok && r.passed;
  }
  std::cout << out.dump(2) << '\n';
  return ok ? kOk : kFailed;
}

int cmd_gen(const std::string& shape, int n, std::uint64_t seed, const std::string& out) {
  if (n < 1) throw ParseError("n must be positive");
  Rng rng(seed);
  Polytope P = Polytope::empty(n);
  if (shape == "simplex") {
    P = standard_simplex(n);
  } else if (shape == "shifted-simplex") {
    P = shifted_simplex(n);
  } else if (shape == "probe-simplex") {
    P = probe_simplex(n);
  } else if (shape == "cube") {
    P = unit_cube(n);
  } else if (shape == "random") {
    P = random_polytope(n, rng, false);
  } else if (shape == "random-o") {
    P = random_polytope(n, rng, true);
  } else {
    throw ParseError("unknown shape '" + shape + "'");
  }
  emit(to_json(P), out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polytope bodies for L_p projection-type operators"};
  app.require_subcommand(1);

  std::string op, in, out, body, dir, suite, shape;
  double p = 2.0;
  int n = 3;
  SuiteConfig cfg;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool corrupted = false;

  try {
    seed = default_seed();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.seed = seed;

  auto* body_cmd = app.add_subcommand("body", "Compute an operator body of a polytope");
  body_cmd->add_option("--op", op, "Operator name")->required();
  body_cmd->add_option("--p", p, "Exponent p > 1")->required();
  body_cmd->add_option("--in", in, "Polytope JSON")->required();
  body_cmd->add_option("--out", out, "Output path (stdout if omitted)");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a body function at a direction");
  eval_cmd->add_option("--body", body, "Body JSON")->required();
  eval_cmd->add_option("--dir", dir, "Comma separated direction")->required()->allow_extra_args(false);

  auto* verify_cmd = app.add_subcommand("verify", "Run identity suites");
  verify_cmd->add_option("--suite", suite, "Suite name or 'all'")->required();
  verify_cmd->add_option("--n", cfg.n, "Dimension");
  verify_cmd->add_option("--p", cfg.p, "Exponent p > 1");
  verify_cmd->add_option("--cases", cfg.cases, "Cases per suite");
  verify_cmd->add_option("--seed", cfg.seed, "Seed (default $LPPROJ_SEED or 7)");
  auto* tol_opt = verify_cmd->add_option("--tol", tol, "Override the suite tolerance");
  verify_cmd->add_flag("--corrupted", corrupted, "Run the perturbed control operator");

  auto* gen_cmd = app.add_subcommand("gen", "Write a named or random polytope");
  gen_cmd->add_option("--shape", shape, "simplex, shifted-simplex, probe-simplex, cube, random, random-o")
      ->required();
  gen_cmd->add_option("--n", n, "Dimension");
  gen_cmd->add_option("--seed", seed, "Seed (default $LPPROJ_SEED or 7)");
  gen_cmd->add_option("--out", out, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (body_cmd->parsed()) return cmd_body(op, p, in, out);
    if (eval_cmd->parsed()) return cmd_eval(body, dir);
    if (verify_cmd->parsed()) {
      if (tol_opt->count() > 0) cfg.tol = tol;
      cfg.corrupted = corrupted;
      return cmd_verify(suite, cfg);
    }
    if (gen_cmd->parsed()) return cmd_gen(shape, n, seed, out);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
