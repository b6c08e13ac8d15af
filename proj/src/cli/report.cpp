#include "tcalg/cli/report.hpp"

#include <sstream>

namespace tcalg::cli {

namespace {

using json = nlohmann::ordered_json;

json rat(const Rational& r) { return to_string(r); }

json exponents(const MultiIndex& m) { return m.entries(); }

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(rat(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json hpoly_terms(const HPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exponent", exponents(e)}, {"coeff", rat(c)}});
  return terms;
}

json weyl_terms(const WeylElement& w) {
  json terms = json::array();
  for (const auto& [k, c] : w.terms())
    terms.push_back({{"p", exponents(k.p)}, {"q", exponents(k.q)}, {"coeff", rat(c)}});
  return terms;
}

json laurent_terms(const LaurentPoly& l) {
  json terms = json::array();
  for (const auto& [k, c] : l.terms()) terms.push_back({{"exponent", k}, {"coeff", rat(c)}});
  return terms;
}

json backend_json(const Backend& b) {
  return {{"kind", b.kind == BackendKind::CendWeyl ? "cend" : "cur"}, {"n", b.n}, {"N", b.N}};
}

json ring_value(const Rational& r) { return rat(r); }
json ring_value(const RatMatrix& m) { return matrix_json(m); }
json ring_value(const WeylElement& w) { return weyl_terms(w); }
json ring_value(const LaurentPoly& l) { return laurent_terms(l); }

const char* ring_name(const Rational*) { return "rational"; }
const char* ring_name(const RatMatrix*) { return "matrix"; }
const char* ring_name(const WeylElement*) { return "weyl"; }
const char* ring_name(const LaurentPoly*) { return "laurent"; }

template <class R>
void fill(json& j, const Dist<R>& d) {
  j["ring"] = ring_name(static_cast<const R*>(nullptr));
  json terms = json::array();
  for (const auto& [wz, c] : d.d.coeffs())
    terms.push_back({{"w", wz.first}, {"z", wz.second}, {"coeff", ring_value(c)}, {"coeff_text", RingTraits<R>::to_string(c)}});
  j["terms"] = std::move(terms);
}

void fill(json& j, const Rational& r) { j["value"] = rat(r); }

void fill(json& j, const HPoly& f) {
  j["nvars"] = f.nvars();
  j["terms"] = hpoly_terms(f);
}

void fill(json& j, const HTensor& t) {
  j["nvars"] = t.nvars();
  j["arity"] = t.arity();
  json terms = json::array();
  for (const auto& [legs, c] : t.terms()) {
    json ls = json::array();
    for (const auto& e : legs) ls.push_back(exponents(e));
    terms.push_back({{"legs", std::move(ls)}, {"coeff", rat(c)}});
  }
  j["terms"] = std::move(terms);
}

void fill(json& j, const DualPoly& x) {
  j["nvars"] = x.nvars();
  json terms = json::array();
  for (const auto& [e, c] : x.terms()) terms.push_back({{"exponent", exponents(e)}, {"coeff", rat(c)}});
  j["terms"] = std::move(terms);
}

void fill(json& j, const WeylElement& w) {
  j["nvars"] = w.nvars();
  j["terms"] = weyl_terms(w);
}

void fill(json& j, const MatWeyl& m) {
  j["nvars"] = m.nvars();
  j["N"] = m.size();
  json rows = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(weyl_terms(m(r, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
}

void fill(json& j, const RatMatrix& m) {
  j["N"] = m.size();
  j["entries"] = matrix_json(m);
}

void fill(json& j, const LaurentPoly& l) { j["terms"] = laurent_terms(l); }

void fill(json& j, const ConformalElement& a) {
  j["backend"] = backend_json(a.backend());
  json terms = json::array();
  for (const auto& [k, m] : a.coeffs())
    terms.push_back({{"gamma", exponents(k.gamma)}, {"beta", exponents(k.beta)}, {"matrix", matrix_json(m)}});
  j["terms"] = std::move(terms);
}

void fill(json& j, const CurValue& v) {
  j["backend"] = backend_json(v.backend);
  json rows = json::array();
  for (std::size_t r = 0; r < v.value.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < v.value.size(); ++c) row.push_back(hpoly_terms(q_only_poly(v.value(r, c))));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
}

void fill(json& j, const OperadWords& w, const Session& s) {
  OperadElt f = to_operad(w, s.variety);
  j["variety"] = s.variety == Variety::Free ? "free" : "assoc";
  j["arity"] = f.arity();
  json terms = json::array();
  for (const auto& [word, c] : f.terms())
    terms.push_back({{"word", word_string(word)}, {"prefix", word}, {"coeff", rat(c)}});
  j["terms"] = std::move(terms);
}

void fill(json& j, const PolyDerivation& D) {
  j["nvars"] = D.nvars();
  json comps = json::array();
  for (const auto& f : D.components()) comps.push_back(hpoly_terms(f));
  j["components"] = std::move(comps);
}

void fill(json& j, const DifferentialForm& w) {
  j["nvars"] = w.nvars();
  j["degree"] = w.degree();
  json terms = json::array();
  for (const auto& [idx, f] : w.terms()) {
    json one_based = json::array();
    for (auto i : idx) one_based.push_back(i + 1);
    terms.push_back({{"indices", std::move(one_based)}, {"coeff", hpoly_terms(f)}});
  }
  j["terms"] = std::move(terms);
}

std::string count(std::uint64_t k, const char* one, const char* many) {
  return std::to_string(k) + " " + (k == 1 ? one : many);
}

}  // namespace

json value_to_json(const Value& v, const Session& s) {
  json j;
  j["type"] = type_name(v);
  j["text"] = format_value(v, s);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, OperadWords>)
          fill(j, x, s);
        else
          fill(j, x);
      },
      v);
  return j;
}

json session_to_json(const Session& s) {
  return {{"n", s.n},
          {"N", s.N},
          {"backend", s.backend == BackendKind::CendWeyl ? "cend" : "cur"},
          {"variety", s.variety == Variety::Free ? "free" : "assoc"},
          {"ring", s.ring}};
}

json report_to_json(const Report& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = r.command;
  j["arguments"] = r.arguments;
  j["session"] = session_to_json(r.session);
  j["options"] = r.options;
  j["result"] = r.result ? *r.result : json(nullptr);
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"identity", c.identity}, {"passed", c.passed}, {"cases", c.cases}, {"certificate", c.certificate}});
  j["checks"] = std::move(checks);
  j["passed"] = r.passed();
  return j;
}

std::string render_json(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

std::string render_text(const Report& r) {
  std::ostringstream os;
  if (r.result) os << (*r.result)["text"].get<std::string>() << "\n";
  if (r.checks.empty()) return os.str();
  std::uint64_t cases = 0, failed = 0;
  for (const auto& c : r.checks) {
    cases += c.cases;
    if (!c.passed) ++failed;
    os << (c.passed ? "PASS " : "FAIL ") << c.identity << " (" << count(c.cases, "case", "cases") << ")";
    if (!c.passed) os << ": " << c.certificate;
    os << "\n";
  }
  os << r.command;
  for (const auto& a : r.arguments) os << " " << a;
  os << ": " << count(r.checks.size(), "identity", "identities") << ", " << count(cases, "case", "cases") << ", ";
  os << (failed == 0 ? std::string("all passed") : std::to_string(failed) + " failed") << "\n";
  return os.str();
}

}  // namespace tcalg::cli
