#include "tcalg/text.hpp"

namespace tcalg::text {

std::string join(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, body] : terms) {
    Rational mag = abs(c);
    bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (body.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += body;
    else
      out += to_string(mag) + "*" + body;
  }
  return out;
}

std::string parenthesize_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && i > 0 && (c == '+' || c == '-') && s[i - 1] == ' ') return "(" + s + ")";
  }
  return s;
}

}  // namespace tcalg::text
