#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eisenres {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rational>;

/// Base of every error the engine raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad config key, bad rational string, dimension mismatch.
/// The CLI maps this to exit code 2.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what, std::string pointer = {})
      : Error(pointer.empty() ? what : what + " (at " + pointer + ")"),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// A mathematical precondition failed (pole order too high, singular
/// limit, asymmetric weight multiset).  The CLI maps this to exit code 1.
class MathError : public Error {
 public:
  using Error::Error;
};

/// Parses "p/q", "p", "-p/q" (surrounding whitespace allowed).
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

std::string to_string(const RatVec& v);  // "(a, b, ...)"

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

Rational pow(const Rational& base, int exponent);

inline int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace eisenres
