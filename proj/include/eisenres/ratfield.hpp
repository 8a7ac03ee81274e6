#pragma once

// Rational functions that factor completely into affine-linear forms.  Every
// value is kept as scalar * prod L_i^{e_i} with canonical, pairwise distinct
// forms L_i, so equality is structural and no polynomial gcd is ever needed.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eisenres/rational.hpp"
#include "eisenres/rootsys.hpp"

namespace eisenres {

/// constant + sum coeffs[i] * x_i
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(Rational constant, RatVec coeffs)
      : constant_(std::move(constant)), coeffs_(std::move(coeffs)) {}
  static LinearForm constant_form(std::size_t nvars, Rational c) {
    return LinearForm(std::move(c), RatVec(nvars, Rational(0)));
  }
  static LinearForm variable(std::size_t nvars, std::size_t i) {
    RatVec v(nvars, Rational(0));
    v.at(i) = 1;
    return LinearForm(0, std::move(v));
  }
  /// z - z0 in one variable.
  static LinearForm root_at(const Rational& z0) { return LinearForm(-z0, {Rational(1)}); }

  const Rational& constant() const noexcept { return constant_; }
  const RatVec& coeffs() const noexcept { return coeffs_; }
  std::size_t nvars() const noexcept { return coeffs_.size(); }
  bool is_constant() const;
  bool is_zero() const { return is_constant() && constant_ == 0; }

  Rational evaluate(const RatVec& point) const;
  /// The one-variable form z -> L(base + z * direction).
  LinearForm restrict_to_line(const RatVec& base, const RatVec& direction) const;
  /// The form Lambda -> L(M Lambda).
  LinearForm substitute(const IntMatrix& m) const;
  /// The form x -> L(-x) on the variable part (constant kept).
  LinearForm negate_variables() const;

  /// (canonical representative, factor) with *this == factor * canonical.
  /// The canonical form is integral with content 1 and its first nonzero entry
  /// of (coeffs, constant) positive.  Undefined for the zero form.
  std::pair<LinearForm, Rational> canonical() const;

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Rational& k);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(const Rational& k, LinearForm a) { return a *= k; }
  friend LinearForm operator+(LinearForm a, const Rational& c) {
    a.constant_ += c;
    return a;
  }
  friend LinearForm operator-(LinearForm a, const Rational& c) {
    a.constant_ -= c;
    return a;
  }

  /// Coefficients lexicographically, then the constant.
  friend bool operator<(const LinearForm& a, const LinearForm& b);
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
  }

  /// "2s-3", "s_alpha+3s_beta-1"; names default to s (one variable) or x_i.
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  Rational constant_ = 0;
  RatVec coeffs_;
};

/// <Lambda, c> + shift, as a form in the fundamental-weight coordinates.
LinearForm pairing_form(const CorootVector& c, const Rational& shift = 0);

class FactoredRational {
 public:
  FactoredRational() = default;  // the constant 1
  explicit FactoredRational(Rational scalar);
  static FactoredRational from_form(const LinearForm& form, int exponent = 1);
  /// Canonicalizes a raw factor list.  Throws ConfigError on a zero factor or
  /// a zero scalar.
  static FactoredRational normalize(Rational scalar,
                                    const std::vector<std::pair<LinearForm, int>>& factors);

  const Rational& scalar() const noexcept { return scalar_; }
  const std::map<LinearForm, int>& factors() const noexcept { return factors_; }
  bool is_constant() const noexcept { return factors_.empty(); }
  int exponent_of(const LinearForm& canonical_form) const;

  /// Multiplies by form^exponent (form need not be canonical).
  FactoredRational& mul_form(const LinearForm& form, int exponent);
  FactoredRational& operator*=(const FactoredRational& o);
  FactoredRational& operator/=(const FactoredRational& o);
  FactoredRational& operator*=(const Rational& k);
  friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
  friend FactoredRational operator/(FactoredRational a, const FactoredRational& b) { return a /= b; }
  friend FactoredRational operator*(const Rational& k, FactoredRational a) { return a *= k; }
  FactoredRational inverse() const;
  FactoredRational pow(int e) const;

  /// Exact value; MathError if the point is a pole or an indeterminate point.
  Rational evaluate(const RatVec& point) const;
  /// Value with a flag: nullopt at poles.
  std::optional<Rational> try_evaluate(const RatVec& point) const;

  FactoredRational substitute(const IntMatrix& m) const;
  FactoredRational negate_variables() const;

  friend bool operator==(const FactoredRational& a, const FactoredRational& b) {
    return a.scalar_ == b.scalar_ && a.factors_ == b.factors_;
  }

  /// "(2z+1)(6z+1)z/(3(2z-3)(2z-1)^2)"
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  Rational scalar_ = 1;
  std::map<LinearForm, int> factors_;
};

struct VanishingFactor {
  LinearForm form;  // canonical form in the original variables
  int exponent = 0;
};

struct LineRestriction {
  WeightVector base;
  WeightVector direction;
  FactoredRational restricted;            // one variable z
  std::vector<VanishingFactor> vanishing;  // factors identically zero on the line
};

LineRestriction restrict_to_line(const FactoredRational& f, const WeightVector& base,
                                 const WeightVector& direction);

/// D_B(Lambda) = prod_{delta>0} <Lambda, delta^vee> / (<Lambda, delta^vee> - 1).
FactoredRational build_db(const RootSystem& rs);

/// Res_{S_delta} f = (<Lambda, delta^vee> - 1) f restricted to base + z * direction.
FactoredRational hyperplane_residue(const FactoredRational& f, const CorootVector& delta_coroot,
                                    const WeightVector& base, const WeightVector& direction);

struct LaurentData {
  Rational point;
  int order = 0;  // pole order; negative for a zero
  Rational lead;  // limit of (z - z0)^order f
  Rational res;   // coefficient of (z - z0)^{-1}; 0 when order <= 0
  bool res_known = true;
};

/// Laurent data of a one-variable function.  With require_residue, poles of
/// order > 2 raise MathError; otherwise they are returned with res_known false.
LaurentData laurent_at(const FactoredRational& f, const Rational& z0, bool require_residue = true);

struct Interval {
  Rational lo, hi;
  bool lo_open = true;
  bool hi_open = false;
  bool contains(const Rational& z) const;
  /// The interval swept from a to b (either orientation); excludes a, includes b.
  static Interval swept(const Rational& a, const Rational& b);
};

struct PoleLocation {
  Rational point;
  int order = 0;
};

/// Real poles of a one-variable function in the interval, sorted descending.
std::vector<PoleLocation> real_poles_in_interval(const FactoredRational& f, const Interval& interval);

/// All zeros (negative order) and poles of a one-variable function, ascending.
std::vector<PoleLocation> divisor(const FactoredRational& f);

}  // namespace eisenres
