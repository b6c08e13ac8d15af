#include "tcalg/cli/commands.hpp"

#include <CLI11.hpp>
#include <optional>

#include "tcalg/cli/interpreter.hpp"
#include "tcalg/cli/parser.hpp"
#include "tcalg/cli/report.hpp"
#include "tcalg/cli/suites.hpp"
#include "tcalg/errors.hpp"

namespace tcalg::cli {

namespace {

using json = nlohmann::ordered_json;

struct GlobalFlags {
  std::size_t n = 1;
  std::size_t N = 1;
  std::string backend = "cend";
  std::string variety = "free";
  std::optional<std::string> ring;
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> degree_bound;
  std::optional<std::size_t> arity;
  std::optional<std::size_t> samples;
};

Session make_session(const GlobalFlags& g, const std::string& default_ring) {
  Session s;
  s.n = g.n;
  s.N = g.N;
  s.backend = g.backend == "cur" ? BackendKind::CurPoly : BackendKind::CendWeyl;
  s.variety = g.variety == "assoc" ? Variety::Assoc : Variety::Free;
  s.ring = g.ring.value_or(default_ring);
  return s;
}

Expr parse_argument(const std::string& text, std::size_t position, const Session& s) {
  try {
    return parse(text, s);
  } catch (const ParseError& e) {
    throw ParseError("argument " + std::to_string(position) + ": " + e.what());
  }
}

/// Builds name(arg1, ..., argk) from separately parsed command arguments.
Expr call_node(const std::string& name, const std::vector<std::string>& args, const Session& s) {
  Expr call;
  call.kind = Expr::Kind::Call;
  call.text = name;
  call.line = 1;
  call.column = 1;
  for (std::size_t i = 0; i < args.size(); ++i) call.args.push_back(parse_argument(args[i], i + 1, s));
  return call;
}

json integer_result(std::uint64_t v) { return {{"type", "integer"}, {"text", std::to_string(v)}, {"value", v}}; }

json locality_result(const Value& a, const Value& b) {
  const auto* x = std::get_if<ConformalElement>(&a);
  const auto* y = std::get_if<ConformalElement>(&b);
  if (x && y) {
    std::vector<MultiIndex> set = locality_set(*x, *y);
    std::string text = "{";
    json elements = json::array();
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) text += ",";
      const auto& e = set[i].entries();
      if (e.size() == 1) {
        text += std::to_string(e[0]);
      } else {
        text += "(";
        for (std::size_t k = 0; k < e.size(); ++k) text += (k ? "," : "") + std::to_string(e[k]);
        text += ")";
      }
      elements.push_back(e);
    }
    text += "}";
    return {{"type", "locality-set"}, {"text", text}, {"bound", locality_bound(*x, *y)}, {"elements", elements}};
  }
  DistLocality r = distribution_locality(a, b);
  std::string text = r.local ? "local" : "not local: " + r.certificate;
  return {{"type", "locality"}, {"text", text}, {"local", r.local}, {"certificate", r.certificate}};
}

json given_options(const CLI::App& app, const GlobalFlags& g) {
  json o = json::object();
  if (app.count("--seed")) o["seed"] = g.seed;
  if (g.degree_bound) o["degree_bound"] = *g.degree_bound;
  if (g.arity) o["arity"] = *g.arity;
  if (g.samples) o["samples"] = *g.samples;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Weyl, Hopf and conformal algebras, formal distributions and operads"};
  app.name("tcalg");
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--n", g.n, "number of variables")->check(CLI::Range(std::size_t{1}, std::size_t{16}));
  app.add_option("--N", g.N, "matrix size")->check(CLI::Range(std::size_t{1}, std::size_t{16}));
  app.add_option("--backend", g.backend, "conformal backend")->check(CLI::IsMember({"cend", "cur"}));
  app.add_option("--variety", g.variety, "operad variety")->check(CLI::IsMember({"free", "assoc"}));
  app.add_option("--ring", g.ring, "coefficient ring of z and w")
      ->check(CLI::IsMember({"rational", "matrix", "weyl", "laurent", "all"}));
  app.add_flag("--json", g.json, "emit a JSON report");
  app.add_option("--seed", g.seed, "seed of the randomized suites");
  app.add_option("--degree-bound", g.degree_bound, "enumeration degree of the suites");
  app.add_option("--arity", g.arity, "operad arity");
  app.add_option("--samples", g.samples, "sample count of the randomized suites");

  std::string expr, f_arg, a_arg, b_arg, k_arg, suite;
  std::vector<std::string> eval_args, compose_args;

  auto* simplify = app.add_subcommand("simplify", "evaluate an expression to normal form");
  simplify->add_option("expr", expr)->required();
  auto* eval = app.add_subcommand("eval", "evaluate EXPR, or the conformal element EXPR at F");
  eval->add_option("args", eval_args, "EXPR [F]")->required()->expected(1, 2);
  auto* fprod = app.add_subcommand("fprod", "f-product of conformal elements");
  fprod->add_option("a", a_arg)->required();
  fprod->add_option("b", b_arg)->required();
  fprod->add_option("f", f_arg)->required();
  auto* nprod = app.add_subcommand("nprod", "k-th product of conformal elements");
  nprod->add_option("a", a_arg)->required();
  nprod->add_option("b", b_arg)->required();
  nprod->add_option("k", k_arg)->required();
  auto* locality = app.add_subcommand("locality", "locality set of two conformal elements or distributions");
  locality->add_option("a", a_arg)->required();
  locality->add_option("b", b_arg)->required();
  auto* res = app.add_subcommand("res-nprod", "residue n-product of formal distributions");
  res->add_option("a", a_arg)->required();
  res->add_option("b", b_arg)->required();
  res->add_option("k", k_arg)->required();
  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  auto* operad = app.add_subcommand("operad", "operad operations");
  operad->require_subcommand(1);
  auto* compose = operad->add_subcommand("compose", "compose F with G1..Gm");
  compose->add_option("args", compose_args, "F G1 .. Gm")->required()->expected(2, -1);
  auto* dim = app.add_subcommand("dim", "dimension of the arity component of the free operad");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();
  compose->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run 'tcalg --help' for usage\n";
    return kExitUsage;
  }

  Report r;
  r.options = given_options(app, g);
  try {
    if (*check) {
      r.command = "check";
      r.arguments = {suite};
      r.session = make_session(g, "all");
      SuiteOptions o;
      o.n = r.session.n;
      o.N = r.session.N;
      o.backend = r.session.backend;
      o.variety = r.session.variety;
      o.ring = r.session.ring;
      o.seed = g.seed;
      o.degree_bound = g.degree_bound;
      o.samples = g.samples;
      r.checks = run_suite(suite, o);
    } else {
      r.session = make_session(g, "rational");
      const Session& s = r.session;
      auto value = [&](const Expr& e) { return value_to_json(evaluate(e, s), s); };
      if (*simplify) {
        r.command = "simplify";
        r.arguments = {expr};
        r.result = value(parse_argument(expr, 1, s));
      } else if (*eval) {
        r.command = "eval";
        r.arguments = eval_args;
        r.result = value(eval_args.size() == 1 ? parse_argument(eval_args[0], 1, s) : call_node("eval", eval_args, s));
      } else if (*fprod) {
        r.command = "fprod";
        r.arguments = {a_arg, b_arg, f_arg};
        r.result = value(call_node("fprod", r.arguments, s));
      } else if (*nprod) {
        r.command = "nprod";
        r.arguments = {a_arg, b_arg, k_arg};
        r.result = value(call_node("nprod", r.arguments, s));
      } else if (*res) {
        r.command = "res-nprod";
        r.arguments = {a_arg, b_arg, k_arg};
        r.result = value(call_node("res", r.arguments, s));
      } else if (*locality) {
        r.command = "locality";
        r.arguments = {a_arg, b_arg};
        r.result = locality_result(evaluate(parse_argument(a_arg, 1, s), s), evaluate(parse_argument(b_arg, 2, s), s));
      } else if (*compose) {
        r.command = "operad compose";
        r.arguments = compose_args;
        r.result = value(call_node("compose", compose_args, s));
      } else if (*dim) {
        if (!g.arity) throw std::invalid_argument("dim needs --arity");
        r.command = "dim";
        r.result = integer_result(dim_CI(*g.arity, s.variety));
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  out << (g.json ? render_json(r) : render_text(r));
  return r.passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace tcalg::cli
