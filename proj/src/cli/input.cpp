#include <cctype>
#include <sstream>

#include "edloci/cli.hpp"
#include "edloci/errors.hpp"
#include "edloci/parse.hpp"

namespace edloci::cli {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

constexpr std::size_t kMaxAmbient = (kMaxVars - 1) / 2;

}  // namespace

ParsedInput parse_input_text(std::string_view text) {
  std::optional<VarSet> vars;
  std::vector<Polynomial> gens;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t p = 0;
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (p == line.size()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t kw_end = p;
    while (kw_end < line.size() && !std::isspace(static_cast<unsigned char>(line[kw_end]))) ++kw_end;
    std::string_view keyword = line.substr(p, kw_end - p);
    if (keyword == "ring") {
      if (vars) throw ParseError("duplicate 'ring' line", line_no, static_cast<int>(p) + 1);
      std::vector<std::string> names;
      std::size_t q = kw_end;
      for (;;) {
        while (q < line.size() && std::isspace(static_cast<unsigned char>(line[q]))) ++q;
        if (q >= line.size()) break;
        std::size_t e = q;
        while (e < line.size() && !std::isspace(static_cast<unsigned char>(line[e]))) ++e;
        std::string_view name = line.substr(q, e - q);
        if (!is_identifier(name)) {
          throw ParseError("invalid variable name '" + std::string(name) + "'", line_no, static_cast<int>(q) + 1);
        }
        for (const auto& n : names) {
          if (n == name) {
            throw ParseError("duplicate variable '" + std::string(name) + "'", line_no, static_cast<int>(q) + 1);
          }
        }
        names.emplace_back(name);
        q = e;
      }
      if (names.empty()) throw ParseError("'ring' needs at least one variable", line_no, static_cast<int>(kw_end) + 1);
      if (names.size() > kMaxAmbient) throw ParseError("at most 15 ambient variables are supported", line_no, 1);
      vars = VarSet(std::move(names));
    } else if (keyword == "poly") {
      if (!vars) throw ParseError("'poly' before the 'ring' declaration", line_no, static_cast<int>(p) + 1);
      std::string_view expr = line.substr(kw_end);
      gens.push_back(parse_polynomial(expr, *vars, MonomialOrder::grevlex(), line_no, static_cast<int>(kw_end) + 1));
    } else {
      throw ParseError("expected 'ring' or 'poly' but found '" + std::string(keyword) + "'", line_no,
                       static_cast<int>(p) + 1);
    }
    if (end == text.size()) break;
  }
  if (!vars) throw ParseError("missing 'ring' line", line_no == 0 ? 1 : line_no, 1);
  if (gens.empty()) throw ParseError("no 'poly' lines", line_no, 1);
  return {*vars, std::move(gens)};
}

ConeInput parse_input(std::string_view text, const Context& ctx) {
  ParsedInput in = parse_input_text(text);
  return ConeInput::make(Ideal(in.vars, in.generators), ctx);
}

std::string print_input(const VarSet& vars, const std::vector<Polynomial>& generators) {
  std::ostringstream out;
  out << "ring";
  for (const auto& n : vars.names()) out << ' ' << n;
  out << '\n';
  for (const auto& g : generators) out << "poly " << g.to_string() << '\n';
  return out.str();
}

}  // namespace edloci::cli
