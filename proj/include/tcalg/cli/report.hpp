#pragma once

// Structured output of every tcalg command. Rationals are always serialized
// as "p/q" strings; maps are emitted in the canonical term order so that two
// runs on the same input are byte-identical.

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "tcalg/cli/interpreter.hpp"
#include "tcalg/cli/parser.hpp"
#include "tcalg/cli/suites.hpp"

namespace tcalg::cli {

inline constexpr const char* kSchemaVersion = "1.0";

/// Every value carries "type" (see type_name) and "text" (format_value) plus
/// type-specific structured fields.
nlohmann::ordered_json value_to_json(const Value& v, const Session& s);
nlohmann::ordered_json session_to_json(const Session& s);

struct Report {
  std::string command;
  std::vector<std::string> arguments;
  Session session;
  nlohmann::ordered_json options = nlohmann::ordered_json::object();
  /// Absent for pure check commands.
  std::optional<nlohmann::ordered_json> result;
  std::vector<CheckSummary> checks;

  bool passed() const { return all_passed(checks); }
};

nlohmann::ordered_json report_to_json(const Report& r);
/// Pretty-printed JSON followed by a newline.
std::string render_json(const Report& r);
/// The result text, or one PASS/FAIL line per identity and a summary line.
std::string render_text(const Report& r);

}  // namespace tcalg::cli
