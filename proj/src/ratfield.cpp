#include "eisenres/ratfield.hpp"

#include <algorithm>
#include <sstream>

namespace eisenres {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  if (n == 1) return {"z"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

bool is_bare_variable(const LinearForm& f) {
  if (f.constant() != 0) return false;
  int nonzero = 0;
  for (const auto& c : f.coeffs()) {
    if (c == 0) continue;
    if (c != 1) return false;
    ++nonzero;
  }
  return nonzero == 1;
}

}  // namespace

bool LinearForm::is_constant() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Rational LinearForm::evaluate(const RatVec& point) const {
  if (point.size() != coeffs_.size())
    throw ConfigError("evaluation point has dimension " + std::to_string(point.size()) +
                      ", form has " + std::to_string(coeffs_.size()) + " variables");
  Rational v = constant_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v += coeffs_[i] * point[i];
  return v;
}

LinearForm LinearForm::restrict_to_line(const RatVec& base, const RatVec& direction) const {
  if (base.size() != nvars() || direction.size() != nvars())
    throw ConfigError("line dimension does not match form");
  Rational slope = 0;
  for (std::size_t i = 0; i < nvars(); ++i) slope += coeffs_[i] * direction[i];
  return LinearForm(evaluate(base), {slope});
}

LinearForm LinearForm::substitute(const IntMatrix& m) const {
  if (m.rows() != nvars()) throw ConfigError("substitution matrix does not match form");
  RatVec c(m.cols(), Rational(0));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < nvars(); ++i)
      if (m(i, j) != 0) c[j] += coeffs_[i] * m(i, j);
  return LinearForm(constant_, std::move(c));
}

LinearForm LinearForm::negate_variables() const {
  RatVec c = coeffs_;
  for (auto& x : c) x = -x;
  return LinearForm(constant_, std::move(c));
}

std::pair<LinearForm, Rational> LinearForm::canonical() const {
  const Rational* first = nullptr;
  for (const auto& c : coeffs_)
    if (c != 0) {
      first = &c;
      break;
    }
  if (!first && constant_ != 0) first = &constant_;
  if (!first) throw ConfigError("zero linear form has no canonical representative");

  Integer den = denominator_of(constant_);
  for (const auto& c : coeffs_) den = lcm(den, denominator_of(c));
  Integer content = 0;
  content = gcd(content, numerator_of(constant_ * den));
  for (const auto& c : coeffs_) content = gcd(content, numerator_of(c * den));
  Rational scale = Rational(den) / Rational(content);
  if (*first < 0) scale = -scale;

  LinearForm out = *this;
  out *= scale;
  return {std::move(out), Rational(1) / scale};
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  if (o.nvars() != nvars()) throw ConfigError("form dimension mismatch");
  constant_ += o.constant_;
  for (std::size_t i = 0; i < nvars(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  if (o.nvars() != nvars()) throw ConfigError("form dimension mismatch");
  constant_ -= o.constant_;
  for (std::size_t i = 0; i < nvars(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& k) {
  constant_ *= k;
  for (auto& c : coeffs_) c *= k;
  return *this;
}

bool operator<(const LinearForm& a, const LinearForm& b) {
  if (a.coeffs_ != b.coeffs_) return a.coeffs_ < b.coeffs_;
  return a.constant_ < b.constant_;
}

std::string LinearForm::str(const std::vector<std::string>& names_in) const {
  const auto names = names_in.empty() ? default_names(nvars()) : names_in;
  std::string out;
  for (std::size_t i = 0; i < nvars(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const Rational a = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (a != 1) out += is_integer(a) ? to_string(a) : "(" + to_string(a) + ")";
    out += names.at(i);
  }
  if (constant_ != 0 || out.empty()) {
    if (constant_ < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    out += to_string(abs(constant_));
  }
  return out;
}

LinearForm pairing_form(const CorootVector& c, const Rational& shift) {
  return LinearForm(shift, c.coords());
}

FactoredRational::FactoredRational(Rational scalar) : scalar_(std::move(scalar)) {
  if (scalar_ == 0) throw MathError("factored rational with zero scalar");
}

FactoredRational FactoredRational::from_form(const LinearForm& form, int exponent) {
  FactoredRational f;
  f.mul_form(form, exponent);
  return f;
}

FactoredRational FactoredRational::normalize(
    Rational scalar, const std::vector<std::pair<LinearForm, int>>& factors) {
  if (scalar == 0) throw ConfigError("zero scalar in factored rational");
  FactoredRational f(std::move(scalar));
  for (const auto& [form, e] : factors) {
    if (form.is_zero()) throw ConfigError("zero factor in factored rational");
    f.mul_form(form, e);
  }
  return f;
}

int FactoredRational::exponent_of(const LinearForm& canonical_form) const {
  const auto it = factors_.find(canonical_form);
  return it == factors_.end() ? 0 : it->second;
}

FactoredRational& FactoredRational::mul_form(const LinearForm& form, int exponent) {
  if (exponent == 0) return *this;
  if (form.is_zero()) throw MathError("zero factor in factored rational");
  if (form.is_constant()) {
    scalar_ *= eisenres::pow(form.constant(), exponent);
    return *this;
  }
  auto [canon, k] = form.canonical();
  scalar_ *= eisenres::pow(k, exponent);
  auto it = factors_.find(canon);
  if (it == factors_.end()) {
    factors_.emplace(std::move(canon), exponent);
  } else if ((it->second += exponent) == 0) {
    factors_.erase(it);
  }
  return *this;
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
  scalar_ *= o.scalar_;
  for (const auto& [form, e] : o.factors_) {
    auto it = factors_.find(form);
    if (it == factors_.end())
      factors_.emplace(form, e);
    else if ((it->second += e) == 0)
      factors_.erase(it);
  }
  return *this;
}

FactoredRational& FactoredRational::operator/=(const FactoredRational& o) {
  return *this *= o.inverse();
}

FactoredRational& FactoredRational::operator*=(const Rational& k) {
  if (k == 0) throw MathError("factored rational multiplied by zero");
  scalar_ *= k;
  return *this;
}

FactoredRational FactoredRational::inverse() const { return pow(-1); }

FactoredRational FactoredRational::pow(int e) const {
  FactoredRational out;
  if (e == 0) return out;
  out.scalar_ = eisenres::pow(scalar_, e);
  for (const auto& [form, x] : factors_) out.factors_.emplace(form, x * e);
  return out;
}

std::optional<Rational> FactoredRational::try_evaluate(const RatVec& point) const {
  Rational value = scalar_;
  int zeros = 0, poles = 0;
  for (const auto& [form, e] : factors_) {
    const Rational v = form.evaluate(point);
    if (v == 0) {
      (e > 0 ? zeros : poles) += 1;
      continue;
    }
    value *= eisenres::pow(v, e);
  }
  if (poles > 0) {
    if (zeros > 0)
      throw MathError("indeterminate value at " + to_string(point) + " (zero and pole factors)");
    return std::nullopt;
  }
  if (zeros > 0) return Rational(0);
  return value;
}

Rational FactoredRational::evaluate(const RatVec& point) const {
  auto v = try_evaluate(point);
  if (!v) throw MathError("evaluation at a pole " + to_string(point));
  return *v;
}

FactoredRational FactoredRational::substitute(const IntMatrix& m) const {
  FactoredRational out(scalar_);
  for (const auto& [form, e] : factors_) out.mul_form(form.substitute(m), e);
  return out;
}

FactoredRational FactoredRational::negate_variables() const {
  FactoredRational out(scalar_);
  for (const auto& [form, e] : factors_) out.mul_form(form.negate_variables(), e);
  return out;
}

std::string FactoredRational::str(const std::vector<std::string>& names) const {
  auto factor_str = [&](const LinearForm& form, int e) {
    std::string s = is_bare_variable(form) ? form.str(names) : "(" + form.str(names) + ")";
    if (e != 1) s += "^" + std::to_string(e);
    return s;
  };
  std::string num, den;
  int den_items = 0;
  for (const auto& [form, e] : factors_) {
    if (e > 0) num += factor_str(form, e);
    if (e < 0) {
      den += factor_str(form, -e);
      ++den_items;
    }
  }
  const Integer p = numerator_of(scalar_), q = denominator_of(scalar_);
  if (num.empty()) {
    num = to_string(Rational(p));
  } else if (p == -1) {
    num = "-" + num;
  } else if (p != 1) {
    num = to_string(Rational(p)) + num;
  }
  if (q != 1) {
    den = to_string(Rational(q)) + den;
    ++den_items;
  }
  if (den.empty()) return num;
  if (den_items > 1 || (q != 1 && den_items == 1 && den.size() > to_string(Rational(q)).size()))
    return num + "/(" + den + ")";
  return num + "/" + den;
}

LineRestriction restrict_to_line(const FactoredRational& f, const WeightVector& base,
                                 const WeightVector& direction) {
  LineRestriction out;
  out.base = base;
  out.direction = direction;
  out.restricted = FactoredRational(f.scalar());
  for (const auto& [form, e] : f.factors()) {
    const LinearForm r = form.restrict_to_line(base.coords(), direction.coords());
    if (r.is_zero())
      out.vanishing.push_back({form, e});
    else
      out.restricted.mul_form(r, e);
  }
  return out;
}

FactoredRational build_db(const RootSystem& rs) {
  FactoredRational f;
  for (const auto& r : rs.positive_roots()) {
    f.mul_form(pairing_form(r.coroot), 1);
    f.mul_form(pairing_form(r.coroot, -1), -1);
  }
  return f;
}

FactoredRational hyperplane_residue(const FactoredRational& f, const CorootVector& delta_coroot,
                                    const WeightVector& base, const WeightVector& direction) {
  if (pairing(direction, delta_coroot) != 0)
    throw ConfigError("direction " + direction.str() + " is not tangent to the hyperplane");
  if (pairing(base, delta_coroot) != 1)
    throw ConfigError("base point " + base.str() + " does not lie on the hyperplane");
  const LinearForm polar = pairing_form(delta_coroot, -1);
  const auto [canon, k] = polar.canonical();
  const int e = f.exponent_of(canon);
  if (e != -1)
    throw MathError("pole order " + std::to_string(-e) + " along the hyperplane " +
                    polar.str() + " = 0 (residue needs order 1)");
  FactoredRational g = f;
  g.mul_form(polar, 1);
  LineRestriction r = restrict_to_line(g, base, direction);
  if (!r.vanishing.empty())
    throw MathError("factor " + r.vanishing.front().form.str() +
                    " vanishes identically on the hyperplane");
  return r.restricted;
}

LaurentData laurent_at(const FactoredRational& f, const Rational& z0, bool require_residue) {
  LaurentData d;
  d.point = z0;
  int vanish_exp = 0;
  Rational lead = f.scalar();
  Rational log_deriv = 0;
  for (const auto& [form, e] : f.factors()) {
    if (form.nvars() != 1) throw ConfigError("laurent_at needs a one-variable function");
    const Rational a = form.coeffs()[0];
    const Rational v = form.evaluate({z0});
    if (v == 0) {
      vanish_exp += e;
      lead *= eisenres::pow(a, e);
    } else {
      lead *= eisenres::pow(v, e);
      log_deriv += e * a / v;
    }
  }
  d.order = -vanish_exp;
  d.lead = lead;
  if (d.order <= 0) {
    d.res = 0;
  } else if (d.order == 1) {
    d.res = lead;
  } else if (d.order == 2) {
    d.res = lead * log_deriv;
  } else {
    if (require_residue)
      throw MathError("pole of order " + std::to_string(d.order) + " at z = " + to_string(z0) +
                      " (residues are supported up to order 2)");
    d.res_known = false;
  }
  return d;
}

bool Interval::contains(const Rational& z) const {
  const bool above = lo_open ? z > lo : z >= lo;
  const bool below = hi_open ? z < hi : z <= hi;
  return above && below;
}

Interval Interval::swept(const Rational& a, const Rational& b) {
  if (a < b) return {a, b, true, false};
  if (a > b) return {b, a, false, true};
  return {a, a, true, true};
}

std::vector<PoleLocation> divisor(const FactoredRational& f) {
  std::map<Rational, int> order;
  for (const auto& [form, e] : f.factors()) {
    if (form.nvars() != 1) throw ConfigError("divisor needs a one-variable function");
    order[-form.constant() / form.coeffs()[0]] -= e;
  }
  std::vector<PoleLocation> out;
  for (const auto& [z, o] : order)
    if (o != 0) out.push_back({z, o});
  return out;
}

std::vector<PoleLocation> real_poles_in_interval(const FactoredRational& f,
                                                 const Interval& interval) {
  std::vector<PoleLocation> out;
  for (const auto& p : divisor(f))
    if (p.order > 0 && interval.contains(p.point)) out.push_back(p);
  std::sort(out.begin(), out.end(),
            [](const PoleLocation& a, const PoleLocation& b) { return a.point > b.point; });
  return out;
}

}  // namespace eisenres
