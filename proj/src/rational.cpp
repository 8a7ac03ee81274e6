#include "eisenres/rational.hpp"

#include <cctype>
#include <sstream>

namespace eisenres {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ConfigError("malformed rational \"" + std::string(whole) + "\"");
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ConfigError("malformed rational \"" + std::string(whole) + "\"");
  Integer value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ConfigError("malformed rational \"" + std::string(whole) + "\"");
    value = value * 10 + (s[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  const Integer num = parse_integer(trim(s.substr(0, slash)), text);
  const std::string_view den_text = trim(s.substr(slash + 1));
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ConfigError("malformed rational \"" + std::string(text) + "\"");
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw ConfigError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator_of(q);
  if (denominator_of(q) != 1) os << '/' << denominator_of(q);
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw MathError("division by zero in rational power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = y;
    y = r;
  }
  return x;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

}  // namespace eisenres
