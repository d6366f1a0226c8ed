#include "nnscf/rational.hpp"

#include "nnscf/errors.hpp"

namespace nnscf {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!all_digits(text)) throw parse_error("bad rational literal: '" + text + "'");
    return Rational(Int(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw parse_error("bad rational literal: '" + text + "'");
  Int d(den);
  if (d == 0) throw parse_error("zero denominator in rational literal: '" + text + "'");
  return Rational(Int(num), d);
}

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Int int_pow(const Int& base, std::uint64_t exp) {
  Int result = 1;
  Int b = base;
  while (exp != 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

}  // namespace nnscf
