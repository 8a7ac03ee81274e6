#include "eisenres/cfunc.hpp"

#include <algorithm>

namespace eisenres {

std::pair<LinearForm, bool> canonicalize_xi(const LinearForm& arg) {
  const LinearForm flipped = LinearForm::constant_form(arg.nvars(), 1) - arg;
  if (arg.is_constant()) {
    if (arg.constant() >= flipped.constant()) return {arg, false};
    return {flipped, true};
  }
  for (const auto& c : arg.coeffs()) {
    if (c > 0) return {arg, false};
    if (c < 0) return {flipped, true};
  }
  return {arg, false};
}

XiProduct XiProduct::xi(const LinearForm& arg, int exponent) {
  XiProduct x;
  x.mul_xi(arg, exponent);
  return x;
}

XiProduct& XiProduct::mul_xi(const LinearForm& arg, int exponent) {
  if (exponent == 0) return *this;
  auto [canon, flipped] = canonicalize_xi(arg);
  (void)flipped;
  if (canon.is_constant() && (canon.constant() == 1 || canon.constant() == 0))
    throw MathError("xi has a pole at the constant argument " + to_string(arg.constant()));
  auto it = xi_.find(canon);
  if (it == xi_.end())
    xi_.emplace(std::move(canon), exponent);
  else if ((it->second += exponent) == 0)
    xi_.erase(it);
  return *this;
}

XiProduct& XiProduct::operator*=(const XiProduct& o) {
  rat_ *= o.rat_;
  for (const auto& [arg, e] : o.xi_) {
    auto it = xi_.find(arg);
    if (it == xi_.end())
      xi_.emplace(arg, e);
    else if ((it->second += e) == 0)
      xi_.erase(it);
  }
  return *this;
}

XiProduct& XiProduct::operator/=(const XiProduct& o) { return *this *= o.inverse(); }

XiProduct& XiProduct::operator*=(const FactoredRational& f) {
  rat_ *= f;
  return *this;
}

XiProduct XiProduct::inverse() const {
  XiProduct out(rat_.inverse());
  for (const auto& [arg, e] : xi_) out.xi_.emplace(arg, -e);
  return out;
}

XiProduct XiProduct::substitute(const IntMatrix& m) const {
  XiProduct out(rat_.substitute(m));
  for (const auto& [arg, e] : xi_) out.mul_xi(arg.substitute(m), e);
  return out;
}

XiProduct XiProduct::negate_variables() const {
  XiProduct out(rat_.negate_variables());
  for (const auto& [arg, e] : xi_) out.mul_xi(arg.negate_variables(), e);
  return out;
}

std::string XiProduct::str(const std::vector<std::string>& names) const {
  std::vector<std::string> num, den;
  for (const auto& [arg, e] : xi_) {
    std::string s = "xi(" + arg.str(names) + ")";
    if (std::abs(e) != 1) s += "^" + std::to_string(std::abs(e));
    (e > 0 ? num : den).push_back(s);
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "*" : "") + v[i];
    return out;
  };
  std::string rat;
  if (!(rat_.is_constant() && rat_.scalar() == 1)) rat = rat_.str(names);
  if (num.empty() && den.empty()) return rat.empty() ? "1" : rat;
  std::string out = num.empty() ? "1" : join(num);
  if (!den.empty()) out += den.size() > 1 ? "/(" + join(den) + ")" : "/" + den.front();
  if (rat.empty()) return out;
  return "(" + rat + ")*" + out;
}

XiProduct build_c(const RootSystem& rs, const WeylElement& w) {
  XiProduct c;
  for (const auto k : w.inverted) {
    const LinearForm p = pairing_form(rs.root(k).coroot);
    c.mul_xi(p, 1);
    c.mul_xi(p + Rational(1), -1);
  }
  return c;
}

CocycleResult cocycle_check(const RootSystem& rs, std::size_t w, std::size_t w_prime) {
  const auto& a = rs.weyl(w);
  const auto& b = rs.weyl(w_prime);
  const XiProduct lhs = build_c(rs, rs.weyl(rs.multiply(w, w_prime)));
  const XiProduct rhs = build_c(rs, a).substitute(b.matrix) * build_c(rs, b);
  CocycleResult r;
  r.witness = lhs / rhs;
  r.pass = r.witness.is_one();
  return r;
}

namespace {

// a with coeffs == a * coroot, if such a exists.
std::optional<Rational> proportionality(const LinearForm& f, const CorootVector& coroot) {
  std::optional<Rational> a;
  for (std::size_t i = 0; i < coroot.size(); ++i) {
    if (coroot[i] == 0) {
      if (f.coeffs()[i] != 0) return std::nullopt;
      continue;
    }
    const Rational q = f.coeffs()[i] / coroot[i];
    if (a && *a != q) return std::nullopt;
    a = q;
  }
  return a;
}

struct Restricted {
  LinearForm source;
  LinearForm canon;
  int exponent;
};

}  // namespace

ResidueReport residue_c_along(const RootSystem& rs, const WeylElement& w,
                              const CorootVector& delta_coroot, const WeightVector& base,
                              const WeightVector& direction) {
  if (pairing(direction, delta_coroot) != 0)
    throw ConfigError("direction " + direction.str() + " is not tangent to the hyperplane");
  if (pairing(base, delta_coroot) != 1)
    throw ConfigError("base point " + base.str() + " does not lie on the hyperplane");

  const XiProduct c = build_c(rs, w);
  ResidueReport report;
  int order = 0;
  Rational factor = 1;
  std::vector<Restricted> regular;

  for (const auto& [arg, e] : c.xi_factors()) {
    const LinearForm r = arg.restrict_to_line(base.coords(), direction.coords());
    if (r.is_constant() && (r.constant() == 0 || r.constant() == 1)) {
      const auto a = proportionality(arg, delta_coroot);
      if (!a || *a == 0)
        throw MathError("xi(" + arg.str() + ") is singular on the line but not along the hyperplane");
      // xi(1 + a t) ~ 1/(a t) and xi(a t) ~ -1/(a t) with t = <Lambda, delta^vee> - 1.
      const Rational local = (r.constant() == 1 ? Rational(1) : Rational(-1)) / *a;
      factor *= pow(local, e);
      order += e;
      report.polar_sources.push_back(arg);
      continue;
    }
    regular.push_back({arg, canonicalize_xi(r).first, e});
  }

  FactoredRational rat(c.rat().scalar());
  for (const auto& [form, e] : c.rat().factors()) {
    const LinearForm r = form.restrict_to_line(base.coords(), direction.coords());
    if (r.is_zero()) {
      const auto a = proportionality(form, delta_coroot);
      if (!a) throw MathError("factor " + form.str() + " vanishes on the line only");
      factor *= pow(*a, e);
      order -= e;
    } else {
      rat.mul_form(r, e);
    }
  }

  if (order <= 0) {
    report.has_pole = false;
    report.note = order == 0 ? "no pole along the hyperplane; residue is 0"
                             : "c vanishes along the hyperplane; residue is 0";
    return report;
  }
  if (order > 1)
    throw MathError("pole of order " + std::to_string(order) + " along the hyperplane");

  report.has_pole = true;
  XiProduct value(rat);
  value *= FactoredRational(factor);

  std::map<LinearForm, std::pair<std::vector<LinearForm>, std::vector<LinearForm>>> groups;
  for (const auto& item : regular) {
    auto& g = groups[item.canon];
    for (int k = 0; k < std::abs(item.exponent); ++k)
      (item.exponent > 0 ? g.first : g.second).push_back(item.source);
  }
  for (const auto& [canon, g] : groups) {
    const std::size_t paired = std::min(g.first.size(), g.second.size());
    for (std::size_t k = 0; k < paired; ++k)
      report.cancelled.push_back({canon, g.first[k], g.second[k]});
    const int net = static_cast<int>(g.first.size()) - static_cast<int>(g.second.size());
    if (net != 0) value.mul_xi(canon, net);
  }
  report.value = std::move(value);
  report.note = report.cancelled.empty()
                    ? "simple pole along the hyperplane"
                    : "simple pole along the hyperplane; " + std::to_string(report.cancelled.size()) +
                          " xi pair(s) cancelled on restriction";
  return report;
}

std::vector<WeightVector> a2_matrix_tangents() {
  return {WeightVector{0, 1}, WeightVector{-1, 0}, WeightVector{1, -1}};
}

ConstantTermMatrix n_matrix(const RootSystem& rs) { return n_matrix(rs, a2_matrix_tangents()); }

ConstantTermMatrix n_matrix(const RootSystem& rs, const std::vector<WeightVector>& tangents) {
  const std::size_t n = rs.positive_roots().size();
  if (tangents.size() != n)
    throw ConfigError("expected " + std::to_string(n) + " tangent directions, got " +
                      std::to_string(tangents.size()));
  ConstantTermMatrix m;
  m.tangents = tangents;
  m.sigma.assign(n, std::vector<std::size_t>(n, 0));
  m.entries.assign(n, std::vector<XiProduct>(n));
  m.reports.assign(n, std::vector<ResidueReport>(n));
  const XiProduct xi2 = XiProduct::xi(LinearForm::constant_form(1, 2));
  for (std::size_t i = 0; i < n; ++i) {
    m.labels.push_back(i);
    const auto& di = rs.root(i);
    const WeightVector base = Rational(1, 2) * di.weight;
    for (std::size_t j = 0; j < n; ++j) {
      const auto s = rs.element_sending(i, j, -1);
      if (!s)
        throw MathError("no Weyl element sends " + di.label + " to -" + rs.root(j).label);
      m.sigma[i][j] = *s;
      auto rep = residue_c_along(rs, rs.weyl(*s), di.coroot, base, tangents[i]);
      if (!rep.has_pole)
        throw MathError("c(sigma_" + std::to_string(i + 1) + std::to_string(j + 1) +
                        ") has no pole along S_" + std::to_string(i + 1));
      m.entries[i][j] = xi2 * rep.value;
      m.reports[i][j] = std::move(rep);
    }
  }
  return m;
}

RankOneResult rank_one_check(const std::vector<std::vector<XiProduct>>& m) {
  RankOneResult r;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw ConfigError("constant-term matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const std::string ij = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      const XiProduct ratio = (m[i][j] * m[0][0]) / (m[i][0] * m[0][j]);
      if (!ratio.is_one())
        r.witnesses.push_back("rank one fails at " + ij + ": n_ij n_11 / (n_i1 n_1j) = " +
                              ratio.str({"s"}));
      const XiProduct sym = m[i][j].negate_variables() / m[j][i];
      if (!sym.is_one())
        r.witnesses.push_back("symmetry fails at " + ij + ": n_ij(-s) / n_ji(s) = " +
                              sym.str({"s"}));
    }
  }
  r.pass = r.witnesses.empty();
  return r;
}

XiProduct bar_involution(const XiProduct& x) { return x.negate_variables(); }

}  // namespace eisenres
