#include "edloci/parse.hpp"

#include <cctype>
#include <string>

#include "edloci/errors.hpp"

namespace edloci {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarSet& vars, int line, int first_column)
      : text_(text), vars_(vars), line_(line), first_column_(first_column) {}

  std::vector<Polynomial::Term> parse() {
    std::vector<Polynomial::Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      terms.push_back(parse_term(negative));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("expected '+' or '-' but found '") + peek() + "'");
      negative = peek() == '-';
      ++pos_;
    }
    return terms;
  }

 private:
  Polynomial::Term parse_term(bool negative) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Rational coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = parse_coefficient();
      have_coef = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_ident_start(peek())) fail("expected a variable after '*'");
      }
    }
    Monomial m(vars_.size());
    bool have_factor = false;
    while (!at_end() && is_ident_start(peek())) {
      std::size_t start = pos_;
      std::string name = parse_identifier();
      auto idx = vars_.index_of(name);
      if (!idx) fail_at(start, "undeclared variable '" + name + "'");
      long e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        e = parse_exponent();
      }
      long total = static_cast<long>(m[*idx]) + e;
      if (total > 0xFFFF) fail_at(start, "exponent too large");
      m.set(*idx, static_cast<int>(total));
      have_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_ident_start(peek())) fail("expected a variable after '*'");
      } else {
        break;
      }
    }
    if (!have_coef && !have_factor) fail(std::string("unexpected character '") + peek() + "'");
    if (negative) coef = -coef;
    return {coef, m};
  }

  Rational parse_coefficient() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string num(text_.substr(start, pos_ - start));
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) fail("expected a denominator after '/'");
      std::string den(text_.substr(dstart, pos_ - dstart));
      if (Integer(den) == 0) fail_at(dstart, "zero denominator");
      return parse_rational(num + "/" + den);
    }
    return parse_rational(num);
  }

  long parse_exponent() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    if (pos_ - start > 5) fail_at(start, "exponent too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::string parse_identifier() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(msg, line_, first_column_ + static_cast<int>(pos));
  }

  std::string_view text_;
  const VarSet& vars_;
  int line_;
  int first_column_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarSet& vars, MonomialOrder order, int line,
                            int first_column) {
  Parser p(text, vars, line, first_column);
  return Polynomial::from_terms(vars, p.parse(), order);
}

}  // namespace edloci
