#include "edloci/rational.hpp"

#include <cctype>

#include "edloci/errors.hpp"

namespace edloci {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer integer_from(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num)) throw UsageError("bad rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(integer_from(num));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw UsageError("bad rational: '" + std::string(text) + "'");
  }
  Integer d = integer_from(den);
  if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  Rational q(integer_from(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const GaussianRational& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  std::string im = (z.im == 1) ? "i" : (z.im == -1) ? "-i" : to_string(z.im) + "*i";
  if (sgn(z.re) == 0) return im;
  if (im[0] == '-') return to_string(z.re) + " - " + im.substr(1);
  return to_string(z.re) + " + " + im;
}

}  // namespace edloci
