#pragma once

// Truncated Laurent series in one variable whose coefficients are
// polynomials (with integer exponents) in opaque constants attached to xi:
// values and derivatives xi^(k)(q) at regular rational points, and the
// Laurent coefficients a_k of xi at its pole,
//   xi(1 + u) = 1/u + a_0 + a_1 u + a_2 u^2 + ...
// The expansion at 0 follows from xi(u) = xi(1 - u).

#include <map>
#include <string>
#include <vector>

#include "eisenres/cfunc.hpp"

namespace eisenres {

struct XiSymbol {
  enum class Kind { Derivative, PoleCoeff };
  Kind kind = Kind::Derivative;
  Rational point;  // Derivative only; always >= 1/2
  int order = 0;   // derivative order, or k for a_k

  bool is_value() const noexcept { return kind == Kind::Derivative && order == 0; }
  std::string str() const;
  friend bool operator<(const XiSymbol& a, const XiSymbol& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.point != b.point) return a.point < b.point;
    return a.order < b.order;
  }
  friend bool operator==(const XiSymbol& a, const XiSymbol& b) {
    return a.kind == b.kind && a.point == b.point && a.order == b.order;
  }
};

using Monomial = std::map<XiSymbol, int>;

class SymPoly {
 public:
  SymPoly() = default;
  SymPoly(const Rational& c);  // NOLINT: implicit scalar embedding
  static SymPoly symbol(const XiSymbol& s, int exponent = 1);
  /// xi^(k)(q) with q folded to q >= 1/2; zero for odd k at q = 1/2.
  static SymPoly xi_derivative(const Rational& q, int k);
  static SymPoly pole_coeff(int k);

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// True when the only symbols present are values xi(q).
  bool only_values() const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const SymPoly& b) { return a *= b; }
  friend SymPoly operator-(SymPoly a) { return a *= SymPoly(Rational(-1)); }
  /// Inverse of a monomial; MathError otherwise.
  SymPoly inverse_monomial() const;

  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// sum_{k} coeffs[k] z^{valuation + k}, known modulo z^{precision}.
class XiLaurentSeries {
 public:
  XiLaurentSeries() = default;
  static XiLaurentSeries zero(int precision);
  static XiLaurentSeries constant(const SymPoly& c, int relative_precision);
  /// xi(u0 + c z) with relative precision n.
  static XiLaurentSeries xi(const Rational& u0, const Rational& c, int n);
  /// (b + a z)^e with relative precision n.
  static XiLaurentSeries linear_power(const Rational& b, const Rational& a, int e, int n);

  int valuation() const noexcept { return valuation_; }
  int precision() const noexcept { return precision_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of z^n; MathError when n is beyond the known precision.
  SymPoly coefficient(int n) const;
  std::vector<int> singular_orders() const;

  XiLaurentSeries& operator+=(const XiLaurentSeries& o);
  friend XiLaurentSeries operator+(XiLaurentSeries a, const XiLaurentSeries& b) { return a += b; }
  friend XiLaurentSeries operator*(const XiLaurentSeries& a, const XiLaurentSeries& b);
  /// Needs a monomial leading coefficient.
  XiLaurentSeries inverse() const;
  XiLaurentSeries pow(int e) const;

  std::string str() const;

 private:
  void normalize();
  int valuation_ = 0;
  int precision_ = 0;
  std::vector<SymPoly> coeffs_;
};

class SingularLimitError : public MathError {
 public:
  SingularLimitError(const std::string& what, std::vector<int> orders)
      : MathError(what), orders_(std::move(orders)) {}
  const std::vector<int>& orders() const noexcept { return orders_; }

 private:
  std::vector<int> orders_;
};

/// Order of vanishing along base + z * direction at z = 0 (negative for a pole).
int valuation_along_line(const XiProduct& term, const WeightVector& base,
                         const WeightVector& direction);

/// Sum of the Laurent expansions of the terms on base + z * direction, with
/// all coefficients through z^order.
XiLaurentSeries xi_series_along_line(const std::vector<XiProduct>& terms, const WeightVector& base,
                                     const WeightVector& direction, int order = 0);

struct XiLimit {
  XiLaurentSeries series;
  SymPoly constant;
  bool symbols_cancel = false;  // constant involves only values xi(q)
};

/// Constant coefficient of the sum at z = 0; SingularLimitError when
/// negative orders survive.
XiLimit xi_limit_along_line(const std::vector<XiProduct>& terms, const WeightVector& base,
                            const WeightVector& direction);

}  // namespace eisenres
