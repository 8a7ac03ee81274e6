#include "eisenres/xi_series.hpp"

#include <algorithm>

namespace eisenres {

std::string XiSymbol::str() const {
  if (kind == Kind::PoleCoeff) return "a_" + std::to_string(order);
  if (order == 0) return "xi(" + to_string(point) + ")";
  return "xi^(" + std::to_string(order) + ")(" + to_string(point) + ")";
}

SymPoly::SymPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

SymPoly SymPoly::symbol(const XiSymbol& s, int exponent) {
  SymPoly p;
  Monomial m;
  if (exponent != 0) m.emplace(s, exponent);
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

SymPoly SymPoly::xi_derivative(const Rational& q, int k) {
  if (q == 0 || q == 1) throw MathError("xi has a pole at " + to_string(q));
  Rational point = q;
  Rational sign = 1;
  if (q < Rational(1, 2)) {
    point = 1 - q;
    if (k % 2) sign = -1;
  }
  if (point == Rational(1, 2) && k % 2) return SymPoly();
  SymPoly p = symbol({XiSymbol::Kind::Derivative, point, k});
  return p * SymPoly(sign);
}

SymPoly SymPoly::pole_coeff(int k) { return symbol({XiSymbol::Kind::PoleCoeff, 0, k}); }

bool SymPoly::only_values() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [s, e] : m)
      if (!s.is_value()) return false;
  return true;
}

void SymPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end())
    terms_.emplace(m, c);
  else if ((it->second += c) == 0)
    terms_.erase(it);
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const SymPoly& o) {
  SymPoly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      for (const auto& [s, e] : m2) {
        auto it = m.find(s);
        if (it == m.end())
          m.emplace(s, e);
        else if ((it->second += e) == 0)
          m.erase(it);
      }
      out.add_term(m, c1 * c2);
    }
  *this = std::move(out);
  return *this;
}

SymPoly SymPoly::inverse_monomial() const {
  if (!is_monomial()) throw MathError("cannot invert the non-monomial coefficient " + str());
  const auto& [m, c] = *terms_.begin();
  Monomial inv;
  for (const auto& [s, e] : m) inv.emplace(s, -e);
  SymPoly p;
  p.terms_.emplace(std::move(inv), Rational(1) / c);
  return p;
}

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (const auto& [s, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += s.str();
      if (e != 1) mono += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    const Rational a = abs(c);
    std::string t;
    if (mono.empty())
      t = to_string(a);
    else if (a == 1)
      t = mono;
    else
      t = to_string(a) + "*" + mono;
    if (out.empty())
      out = (c < 0 ? "-" : "") + t;
    else
      out += (c < 0 ? " - " : " + ") + t;
  }
  return out;
}

XiLaurentSeries XiLaurentSeries::zero(int precision) {
  XiLaurentSeries s;
  s.valuation_ = precision;
  s.precision_ = precision;
  return s;
}

XiLaurentSeries XiLaurentSeries::constant(const SymPoly& c, int n) {
  XiLaurentSeries s;
  s.valuation_ = 0;
  s.precision_ = n;
  s.coeffs_.assign(static_cast<std::size_t>(std::max(n, 0)), SymPoly());
  if (n > 0) s.coeffs_[0] = c;
  s.normalize();
  return s;
}

XiLaurentSeries XiLaurentSeries::xi(const Rational& u0, const Rational& c, int n) {
  const bool polar = u0 == 0 || u0 == 1;
  if (c == 0) {
    if (polar) throw MathError("xi is identically singular along the line");
    return constant(SymPoly::xi_derivative(u0, 0), n);
  }
  XiLaurentSeries s;
  s.coeffs_.assign(static_cast<std::size_t>(std::max(n, 0)), SymPoly());
  if (polar) {
    const Rational step = u0 == 1 ? c : -c;
    s.valuation_ = -1;
    s.precision_ = n - 1;
    if (n > 0) s.coeffs_[0] = SymPoly(Rational(1) / step);
    Rational ck = 1;
    for (int k = 1; k < n; ++k) {
      s.coeffs_[k] = SymPoly::pole_coeff(k - 1) * SymPoly(ck);
      ck *= step;
    }
  } else {
    s.valuation_ = 0;
    s.precision_ = n;
    Rational ck = 1;
    Integer fact = 1;
    for (int k = 0; k < n; ++k) {
      if (k > 0) {
        ck *= c;
        fact *= k;
      }
      s.coeffs_[k] = SymPoly::xi_derivative(u0, k) * SymPoly(ck / Rational(fact));
    }
  }
  s.normalize();
  return s;
}

XiLaurentSeries XiLaurentSeries::linear_power(const Rational& b, const Rational& a, int e, int n) {
  XiLaurentSeries s;
  s.coeffs_.assign(static_cast<std::size_t>(std::max(n, 0)), SymPoly());
  if (b == 0) {
    if (a == 0) throw MathError("zero linear factor in series expansion");
    s.valuation_ = e;
    s.precision_ = e + n;
    if (n > 0) s.coeffs_[0] = SymPoly(eisenres::pow(a, e));
  } else {
    s.valuation_ = 0;
    s.precision_ = n;
    const Rational r = a / b;
    Rational binom = 1;
    Rational rk = 1;
    const Rational lead = eisenres::pow(b, e);
    for (int k = 0; k < n; ++k) {
      if (k > 0) {
        binom = binom * Rational(e - k + 1) / Rational(k);
        rk *= r;
      }
      s.coeffs_[k] = SymPoly(lead * binom * rk);
    }
  }
  s.normalize();
  return s;
}

void XiLaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    valuation_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) valuation_ = precision_;
}

SymPoly XiLaurentSeries::coefficient(int n) const {
  if (n >= precision_)
    throw MathError("coefficient of z^" + std::to_string(n) + " is beyond the series precision");
  if (n < valuation_) return SymPoly();
  return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

std::vector<int> XiLaurentSeries::singular_orders() const {
  std::vector<int> out;
  for (int n = valuation_; n < std::min(0, precision_); ++n)
    if (!coefficient(n).is_zero()) out.push_back(n);
  return out;
}

XiLaurentSeries& XiLaurentSeries::operator+=(const XiLaurentSeries& o) {
  const int v = std::min(valuation_, o.valuation_);
  const int p = std::min(precision_, o.precision_);
  XiLaurentSeries s;
  s.valuation_ = v;
  s.precision_ = p;
  for (int n = v; n < p; ++n) s.coeffs_.push_back(coefficient(n) + o.coefficient(n));
  s.normalize();
  *this = std::move(s);
  return *this;
}

XiLaurentSeries operator*(const XiLaurentSeries& a, const XiLaurentSeries& b) {
  XiLaurentSeries s;
  s.valuation_ = a.valuation_ + b.valuation_;
  s.precision_ = std::min(a.precision_ + b.valuation_, b.precision_ + a.valuation_);
  if (a.is_zero() || b.is_zero()) return XiLaurentSeries::zero(s.precision_);
  const int n = s.precision_ - s.valuation_;
  for (int k = 0; k < n; ++k) {
    SymPoly c;
    for (int i = 0; i <= k; ++i) {
      if (static_cast<std::size_t>(i) >= a.coeffs_.size() ||
          static_cast<std::size_t>(k - i) >= b.coeffs_.size())
        continue;
      c += a.coeffs_[i] * b.coeffs_[k - i];
    }
    s.coeffs_.push_back(std::move(c));
  }
  s.normalize();
  return s;
}

XiLaurentSeries XiLaurentSeries::inverse() const {
  if (is_zero()) throw MathError("cannot invert a series that vanishes to its precision");
  const int n = precision_ - valuation_;
  const SymPoly inv0 = coeffs_[0].inverse_monomial();
  XiLaurentSeries s;
  s.valuation_ = -valuation_;
  s.precision_ = -valuation_ + n;
  s.coeffs_.push_back(inv0);
  for (int k = 1; k < n; ++k) {
    SymPoly acc;
    for (int i = 1; i <= k; ++i) acc += coeffs_[i] * s.coeffs_[k - i];
    s.coeffs_.push_back(-(inv0 * acc));
  }
  s.normalize();
  return s;
}

XiLaurentSeries XiLaurentSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  XiLaurentSeries out = constant(SymPoly(Rational(1)), precision_ - valuation_);
  for (int k = 0; k < e; ++k) out = out * *this;
  return out;
}

std::string XiLaurentSeries::str() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].str() + ")*z^" + std::to_string(valuation_ + static_cast<int>(k));
  }
  if (!out.empty()) out += " + ";
  return out + "O(z^" + std::to_string(precision_) + ")";
}

namespace {

struct LineFactor {
  bool is_xi;
  Rational u0, c;  // restricted form u0 + c z
  int exponent;
};

std::vector<LineFactor> line_factors(const XiProduct& term, const WeightVector& base,
                                     const WeightVector& direction) {
  std::vector<LineFactor> out;
  for (const auto& [arg, e] : term.xi_factors()) {
    const LinearForm r = arg.restrict_to_line(base.coords(), direction.coords());
    out.push_back({true, r.constant(), r.coeffs()[0], e});
  }
  for (const auto& [form, e] : term.rat().factors()) {
    const LinearForm r = form.restrict_to_line(base.coords(), direction.coords());
    out.push_back({false, r.constant(), r.coeffs()[0], e});
  }
  return out;
}

int factor_valuation(const LineFactor& f) {
  if (f.is_xi) {
    if (f.u0 == 0 || f.u0 == 1) {
      if (f.c == 0) throw MathError("xi factor is identically singular along the line");
      return -f.exponent;
    }
    return 0;
  }
  if (f.u0 == 0) {
    if (f.c == 0) throw MathError("rational factor vanishes identically along the line");
    return f.exponent;
  }
  return 0;
}

}  // namespace

int valuation_along_line(const XiProduct& term, const WeightVector& base,
                         const WeightVector& direction) {
  int v = 0;
  for (const auto& f : line_factors(term, base, direction)) v += factor_valuation(f);
  return v;
}

XiLaurentSeries xi_series_along_line(const std::vector<XiProduct>& terms, const WeightVector& base,
                                     const WeightVector& direction, int order) {
  XiLaurentSeries total = XiLaurentSeries::zero(order + 1);
  for (const auto& term : terms) {
    const auto factors = line_factors(term, base, direction);
    int v = 0;
    for (const auto& f : factors) v += factor_valuation(f);
    const int n = order + 1 - v;
    if (n <= 0) continue;
    XiLaurentSeries s = XiLaurentSeries::constant(SymPoly(term.rat().scalar()), n);
    for (const auto& f : factors) {
      const XiLaurentSeries base_series = f.is_xi ? XiLaurentSeries::xi(f.u0, f.c, n)
                                                  : XiLaurentSeries::linear_power(f.u0, f.c, 1, n);
      s = s * base_series.pow(f.exponent);
    }
    total += s;
  }
  return total;
}

XiLimit xi_limit_along_line(const std::vector<XiProduct>& terms, const WeightVector& base,
                            const WeightVector& direction) {
  XiLimit out;
  out.series = xi_series_along_line(terms, base, direction, 0);
  const auto singular = out.series.singular_orders();
  if (!singular.empty()) {
    std::string orders;
    for (auto o : singular) orders += (orders.empty() ? "" : ", ") + std::to_string(o);
    throw SingularLimitError("singular terms survive at orders z^{" + orders + "}", singular);
  }
  out.constant = out.series.coefficient(0);
  out.symbols_cancel = out.constant.only_values();
  return out;
}

}  // namespace eisenres
