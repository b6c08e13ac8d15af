#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "golden.hpp"
#include "schema_validator.hpp"
#include "tcalg/cli/commands.hpp"
#include "tcalg/cli/interpreter.hpp"
#include "tcalg/cli/parser.hpp"
#include "tcalg/cli/report.hpp"
#include "tcalg/errors.hpp"

using namespace tcalg;
using namespace tcalg::cli;
namespace gen = tcalg::testing;

namespace {

Session session(std::size_t n = 1, std::size_t N = 1, BackendKind b = BackendKind::CendWeyl,
                Variety v = Variety::Free, std::string ring = "rational") {
  Session s;
  s.n = n;
  s.N = N;
  s.backend = b;
  s.variety = v;
  s.ring = std::move(ring);
  return s;
}

std::string simplify(const std::string& src, const Session& s = session()) {
  return format_value(evaluate(src, s), s);
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const gen::SchemaValidator& validator() {
  static const gen::SchemaValidator v = [] {
    std::ifstream in(TCALG_SOURCE_DIR "/schema/report.schema.json");
    return gen::SchemaValidator(nlohmann::json::parse(in));
  }();
  return v;
}

Expr leaf(Expr::Kind k, std::string text) {
  Expr e;
  e.kind = k;
  e.text = std::move(text);
  return e;
}

Expr node(Expr::Kind k, std::vector<Expr> args, std::string text = "") {
  Expr e;
  e.kind = k;
  e.args = std::move(args);
  e.text = std::move(text);
  return e;
}

// Random trees over the operators; only shapes the parser can produce.
Expr random_expr(std::mt19937& rng, int depth) {
  using K = Expr::Kind;
  static const char* symbols[] = {"T1", "p1", "q1", "z", "t1", "x1"};
  static const char* numbers[] = {"0", "1", "2", "1/2", "7/3"};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 9);
  switch (pick(rng)) {
    case 0: return leaf(K::Symbol, symbols[std::uniform_int_distribution<int>(0, 5)(rng)]);
    case 1: return leaf(K::Number, numbers[std::uniform_int_distribution<int>(0, 4)(rng)]);
    case 2: return node(K::Add, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 3: return node(K::Sub, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 4: return node(K::Mul, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 5: return node(K::Juxt, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 6: return node(K::Neg, {random_expr(rng, depth - 1)});
    case 7: return node(K::Pow, {random_expr(rng, depth - 1)}, std::uniform_int_distribution<int>(0, 1)(rng) ? "3" : "-1");
    case 8: return node(K::Tensor, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    default: return node(K::Call, {random_expr(rng, depth - 1), random_expr(rng, depth - 1), random_expr(rng, depth - 1)}, "fprod");
  }
}

}  // namespace

TEST_CASE("parse examples") {
  Expr e = parse("q1*p1", session());
  CHECK(e.kind == Expr::Kind::Mul);
  REQUIRE(e.args.size() == 2);
  CHECK(e.args[0].text == "q1");
  CHECK(e.args[1].text == "p1");
  CHECK(simplify("q1*p1") == "p1*q1 + 1");
  Expr f = parse("fprod(a[1], a[p1], T1)", session());
  CHECK(f.kind == Expr::Kind::Call);
  CHECK(f.text == "fprod");
  CHECK(f.args[0].kind == Expr::Kind::Conformal);
  CHECK(simplify("fprod(a[1], a[p1], T1)") == "a[1]");
}

TEST_CASE("grammar shapes") {
  using K = Expr::Kind;
  CHECK(parse("x1 x2 x3", session()).kind == K::Juxt);
  CHECK(parse("T1 (x) T1", session()).kind == K::Tensor);
  CHECK(parse("dT1^dT2", session(2)).kind == K::Wedge);
  CHECK(parse("z^-2", session()).text == "-2");
  CHECK(parse("{T1, T2}", session(2)).kind == K::Poisson);
  CHECK(parse("[d1, T1*d1]", session()).kind == K::List);
  CHECK(parse("T1 . a[p1]", session()).kind == K::Dot);
  CHECK(parse("-T1 + 1", session()).kind == K::Add);
  CHECK(format(parse("(T1 + 1)*(T1 - 1)", session())) == "(T1 + 1)*(T1 - 1)");
  CHECK(format(parse("((T1))", session())) == "T1");
  CHECK(format(parse("T1 - (p1 + q1)", session())) == "T1 - (p1 + q1)");
  CHECK(format(parse("T1 (x) (T1 (x) T1)", session())) == "T1 (x) (T1 (x) T1)");
  CHECK(format(parse("-(-T1)", session())) == "-(-T1)");
}

TEST_CASE("syntax errors carry line and column") {
  auto where = [](const std::string& src, const Session& s) -> std::pair<std::size_t, std::size_t> {
    try {
      parse(src, s);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(where("T1 +", session()) == std::make_pair(std::size_t{1}, std::size_t{5}));
  CHECK(where("T1 +\n  $", session()) == std::make_pair(std::size_t{2}, std::size_t{3}));
  CHECK(where("(T1", session()) == std::make_pair(std::size_t{1}, std::size_t{4}));
  CHECK(where("foo + 1", session()) == std::make_pair(std::size_t{1}, std::size_t{1}));
  CHECK(where("T1 + T2", session()) == std::make_pair(std::size_t{1}, std::size_t{6}));
  CHECK(where("fprod(a[1], T1)", session()) == std::make_pair(std::size_t{1}, std::size_t{1}));
  CHECK(where("1/0", session()).first == 1);
  CHECK_THROWS_WITH_AS(parse("foo", session()), doctest::Contains("unknown identifier"), ParseError);
  CHECK_THROWS_WITH_AS(parse("fprod(a[1], T1)", session()), doctest::Contains("takes 3 arguments"), ParseError);
  CHECK_THROWS_WITH_AS(parse("q3", session(2)), doctest::Contains("outside"), ParseError);
}

TEST_CASE("evaluation errors are typed and located") {
  CHECK_THROWS_WITH_AS(evaluate("T1 + p1", session()), doctest::Contains("at 1:"), TypeMismatch);
  CHECK_THROWS_AS(evaluate("{T1, T2}", session(3)), DimensionMismatch);
  CHECK_THROWS_WITH_AS(evaluate("a[p1]", session(1, 1, BackendKind::CurPoly)), doctest::Contains("at 1:"),
                       DimensionMismatch);
  CHECK_THROWS_AS(evaluate("nprod(a[1], a[p1], 1/2)", session()), Error);
}

TEST_CASE("parse(format(e)) == e on random trees") {
  std::mt19937 rng(7);
  Session s = session();
  for (int i = 0; i < 2000; ++i) {
    Expr e = random_expr(rng, 4);
    std::string text = format(e);
    INFO(text);
    CHECK(parse(text, s) == e);
    CHECK(format(parse(text, s)) == text);
  }
}

TEST_CASE("value text round-trips through the evaluator") {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    for (std::size_t n = 1; n <= 2; ++n) {
      Session s = session(n, 2);
      std::vector<HPoly> comps;
      for (std::size_t i = 0; i < n; ++i) comps.push_back(gen::random_poly(rng, n, 2, 2));
      std::vector<Value> values{
          Value(gen::random_poly(rng, n, 3, 4) * Rational(1, 2)),
          Value(gen::random_weyl(rng, n, 3, 4)),
          Value(gen::random_mat_weyl(rng, n, 2, 2, 3)),
          Value(gen::random_matrix(rng, 2) * Rational(-2, 3)),
          Value(gen::random_conformal(rng, Backend{BackendKind::CendWeyl, n, 2}, 3, 2)),
          Value(PolyDerivation(comps)),
      };
      if (n == 2)
        values.push_back(Value(DifferentialForm::monomial(gen::random_poly(rng, 2, 2, 3), {1, 0}, 2)));
      for (const auto& v : values) {
        std::string text = format_value(v, s);
        INFO(type_name(v), ": ", text);
        Value back = evaluate(text, s);
        CHECK(format_value(back, s) == text);
        // Constants of every type print as plain rationals.
        if (!std::holds_alternative<Rational>(back)) CHECK(type_name(back) == type_name(v));
      }
    }
    Session cur = session(2, 2, BackendKind::CurPoly);
    Value c = gen::random_conformal(rng, cur.conformal_backend(), 3, 2);
    CHECK(simplify(format_value(c, cur), cur) == format_value(c, cur));
    Dist<Rational> d{};
    auto fd = gen::random_distribution<Rational>(rng, 4, 4, [](std::mt19937& g) { return Rational(gen::small_int(g)) / 2; });
    for (const auto& [k, x] : fd.coeffs()) d.d.add_term(0, k, x);
    CHECK(simplify(format_value(Value(d), session()), session()) == format_value(Value(d), session()));
  }
}

TEST_CASE("formatting is deterministic") {
  Session s = session(2);
  std::string first = simplify("(p1 + q2)^3 - q1*p1", s);
  for (int i = 0; i < 5; ++i) CHECK(simplify("(p1 + q2)^3 - q1*p1", s) == first);
  CHECK(simplify("q1*p1") == "p1*q1 + 1");
}

TEST_CASE("sub-language examples") {
  CHECK(simplify("Delta(T1^2)") == "T1^2 (x) 1 + 2*T1 (x) T1 + 1 (x) T1^2");
  CHECK(simplify("[q1, p1]") == "1");
  CHECK(simplify("x1 (x2 x3) - (x1 x2) x3", session(1, 1, BackendKind::CendWeyl, Variety::Assoc)) == "0");
  CHECK(simplify("res(z^-1, z^-1, 0)") == "z^-1");
  CHECK(simplify("ham(T1*T2)", session(2)) == "-T1*d1 + T2*d2");
  CHECK(simplify("ext_d(contract(ham(T1^2*T2)))", session(2)) == "0");
  CHECK(simplify("{T1, T2}", session(2)) == "1");
  CHECK(simplify("div(T1*d1 - T2*d2)", session(2)) == "0");
}

TEST_CASE("golden corpus") {
  auto corpus = gen::load_golden(TCALG_SOURCE_DIR "/tests/golden");
  CHECK(corpus.size() == 20);
  for (const auto& c : corpus) {
    INFO(c.name);
    Session s = gen::session_from_flags(c.flags);
    Expr in = parse(c.input, s), out = parse(c.output, s);
    CHECK(parse(format(in), s) == in);
    CHECK(parse(format(out), s) == out);
    CHECK(simplify(c.input, s) == c.output);
    CHECK(simplify(c.output, s) == c.output);
    std::vector<std::string> args = c.flags;
    args.insert(args.end(), {"simplify", "--", c.input});
    RunResult r = run_cli(args);
    CHECK(r.code == 0);
    CHECK(r.out == c.output + "\n");
  }
}

TEST_CASE("value JSON") {
  Session s = session(1, 2);
  nlohmann::ordered_json j = value_to_json(evaluate("T1 . a[[[p1, 0], [0, 1/2]]]", s), s);
  CHECK(j["type"] == "conformal");
  REQUIRE(j["terms"].size() == 2);
  for (const auto& t : j["terms"]) {
    CHECK(t.contains("gamma"));
    CHECK(t.contains("beta"));
    CHECK(t.contains("matrix"));
  }
  CHECK(j["terms"][0]["matrix"][1][1] == "0");
  nlohmann::ordered_json r = value_to_json(evaluate("3/6", s), s);
  CHECK(r["value"] == "1/2");
  nlohmann::ordered_json f = value_to_json(evaluate("T2 dT1^dT2", session(2)), session(2));
  CHECK(f["terms"][0]["indices"] == nlohmann::ordered_json::array({1, 2}));
}

TEST_CASE("reports validate against the schema") {
  std::vector<std::vector<std::string>> commands{
      {"simplify", "q1*p1", "--json"},
      {"--n", "2", "simplify", "ham(T1*T2)", "--json"},
      {"--n", "2", "simplify", "T2 dT1^dT2 + ext_d(T1 dT2)", "--json"},
      {"simplify", "Delta(T1^2)", "--json"},
      {"simplify", "t1^2", "--json"},
      {"--ring", "matrix", "--N", "2", "simplify", "[[1, 0], [0, 0]]*z^-1", "--json"},
      {"--ring", "weyl", "simplify", "p1*z - w", "--json"},
      {"--ring", "laurent", "simplify", "t*z", "--json"},
      {"simplify", "t^-1", "--json"},
      {"--N", "2", "simplify", "[[1, 2], [3, 4]]", "--json"},
      {"--N", "2", "simplify", "[[p1, 0], [0, q1]]", "--json"},
      {"--backend", "cur", "--N", "2", "eval", "a[[[1, 0], [0, 1]]]", "T1", "--json"},
      {"fprod", "a[1]", "a[p1]", "T1", "--json"},
      {"nprod", "a[1]", "a[p1]", "0", "--json"},
      {"locality", "a[1]", "a[p1]", "--json"},
      {"locality", "z^-1", "z^2", "--json"},
      {"res-nprod", "z^-1", "z^-1", "0", "--json"},
      {"operad", "compose", "x1 x2", "x1 x2", "x1", "--json"},
      {"dim", "--arity", "3", "--json"},
      {"check", "A", "--json"},
      {"check", "hopf", "--degree-bound", "2", "--json"},
  };
  for (const auto& args : commands) {
    std::string line;
    for (const auto& a : args) line += a + " ";
    INFO(line);
    RunResult r = run_cli(args);
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    auto errors = validator().validate(j);
    std::string first_error = errors.empty() ? "" : errors.front();
    INFO(first_error);
    CHECK(errors.empty());
    CHECK(run_cli(args).out == r.out);
  }
}

TEST_CASE("schema rejects malformed reports") {
  RunResult r = run_cli({"fprod", "a[1]", "a[p1]", "T1", "--json"});
  auto good = nlohmann::json::parse(r.out);
  REQUIRE(validator().validate(good).empty());
  auto bad = good;
  bad["result"]["terms"][0].erase("gamma");
  CHECK_FALSE(validator().validate(bad).empty());
  bad = good;
  bad["result"]["terms"][0]["matrix"][0][0] = 1.5;
  CHECK_FALSE(validator().validate(bad).empty());
  bad = good;
  bad["schema_version"] = "2.0";
  CHECK_FALSE(validator().validate(bad).empty());
  bad = good;
  bad["extra"] = true;
  CHECK_FALSE(validator().validate(bad).empty());
}

TEST_CASE("command-line examples and exit codes") {
  CHECK(run_cli({"dim", "--variety", "free", "--arity", "3"}).out == "12\n");
  CHECK(run_cli({"dim", "--variety", "assoc", "--arity", "4"}).out == "24\n");
  CHECK(run_cli({"locality", "a[1]", "a[p1]"}).out == "{0,1}\n");
  CHECK(run_cli({"--n", "2", "locality", "a[1]", "a[p1*p2]"}).out == "{(0,0),(0,1),(1,0),(1,1)}\n");
  CHECK(run_cli({"simplify", "q1*p1"}).out == "p1*q1 + 1\n");
  CHECK(run_cli({"eval", "--", "-T1 + 1"}).out == "-T1 + 1\n");
  CHECK(run_cli({"eval", "T1 . a[p1]", "T1^2"}).out == "-2*p1*q1\n");

  RunResult c = run_cli({"check", "C", "--backend", "cend", "--n", "1", "--N", "2"});
  CHECK(c.code == kExitPass);
  CHECK(c.out.find("FAIL") == std::string::npos);
  CHECK(c.out.find("all passed") != std::string::npos);

  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == kExitUsage);
  CHECK(run_cli({"check", "nosuch"}).code == kExitUsage);
  CHECK(run_cli({"check", "C", "--n", "2"}).code == kExitUsage);
  CHECK(run_cli({"--backend", "other", "simplify", "1"}).code == kExitUsage);
  RunResult p = run_cli({"simplify", "T1 +"});
  CHECK(p.code == kExitUsage);
  CHECK(p.err == "error: argument 1: unexpected end of input at 1:5\n");
  CHECK(run_cli({"simplify", "T1 + p1"}).code == kExitUsage);
  CHECK(run_cli({"dim"}).code == kExitUsage);
  CHECK(run_cli({"--help"}).code == kExitPass);
}

TEST_CASE("text report marks failures") {
  Report r;
  r.command = "check";
  r.arguments = {"demo"};
  r.checks = {{"x = x", true, 3, ""}, {"x = y", false, 2, "x = 1, y = 2"}};
  CHECK_FALSE(r.passed());
  CHECK(render_text(r) ==
        "PASS x = x (3 cases)\n"
        "FAIL x = y (2 cases): x = 1, y = 2\n"
        "check demo: 2 identities, 5 cases, 1 failed\n");
  auto j = nlohmann::json::parse(render_json(r));
  CHECK(j["passed"] == false);
  CHECK(validator().validate(j).empty());
}
