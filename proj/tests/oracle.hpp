#pragma once

// Test-side reference implementations.  Nothing here calls the engine's
// evaluation, divisor or root-generation code.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eisenres/ratfield.hpp"

namespace oracle {

using eisenres::Integer;
using eisenres::Rational;
using eisenres::RatVec;

// Dense polynomial in one variable, coefficient of z^k at index k.
struct Poly {
  std::vector<Rational> c{Rational(1)};

  static Poly linear(const Rational& a0, const Rational& a1) {
    Poly p;
    p.c = {a0, a1};
    p.trim();
    return p;
  }
  void trim() {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
  }
  int degree() const { return c.size() == 1 && c[0] == 0 ? -1 : static_cast<int>(c.size()) - 1; }
  Poly operator*(const Poly& o) const {
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
  }
  Rational operator()(const Rational& z) const {
    Rational v = 0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * z + c[k];
    return v;
  }
  Poly derivative() const {
    Poly d;
    d.c.assign(c.size() > 1 ? c.size() - 1 : 1, Rational(0));
    for (std::size_t k = 1; k < c.size(); ++k) d.c[k - 1] = c[k] * static_cast<int>(k);
    d.trim();
    return d;
  }
  // Divides by (z - r), assuming r is a root.
  Poly deflate(const Rational& r) const {
    Poly q;
    q.c.assign(c.size() - 1, Rational(0));
    Rational carry = 0;
    for (std::size_t k = c.size(); k-- > 1;) {
      carry = c[k] + carry * r;
      q.c[k - 1] = carry;
    }
    q.trim();
    return q;
  }
};

inline std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

// Rational roots with multiplicity by the rational root theorem.
inline std::map<Rational, int> rational_roots(Poly p) {
  std::map<Rational, int> out;
  while (p.degree() > 0 && p.c[0] == 0) {
    ++out[Rational(0)];
    p.c.erase(p.c.begin());
  }
  bool found = true;
  while (p.degree() > 0 && found) {
    found = false;
    Integer l = 1;
    for (const auto& q : p.c) l = boost::multiprecision::lcm(l, eisenres::denominator_of(q));
    const Integer a0 = eisenres::numerator_of(p.c.front() * l);
    const Integer an = eisenres::numerator_of(p.c.back() * l);
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int sgn : {1, -1}) {
          const Rational r(Integer(sgn) * num, den);
          if (p(r) == 0) {
            ++out[r];
            p = p.deflate(r);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  return out;
}

// Zeros (negative) and poles (positive) of num/den after cancelling common
// roots.
inline std::map<Rational, int> pole_zero_data(const Poly& num, const Poly& den) {
  std::map<Rational, int> out;
  for (const auto& [r, m] : rational_roots(num)) out[r] -= m;
  for (const auto& [r, m] : rational_roots(den)) out[r] += m;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Sparse multivariate polynomial: exponent vector -> coefficient.
struct MPoly {
  std::map<std::vector<int>, Rational> t;

  static MPoly constant(std::size_t n, const Rational& c) {
    MPoly p;
    if (c != 0) p.t[std::vector<int>(n, 0)] = c;
    return p;
  }
  static MPoly from_form(const eisenres::LinearForm& f) {
    const std::size_t n = f.nvars();
    MPoly p = constant(n, f.constant());
    for (std::size_t i = 0; i < n; ++i) {
      if (f.coeffs()[i] == 0) continue;
      std::vector<int> e(n, 0);
      e[i] = 1;
      p.t[e] += f.coeffs()[i];
    }
    return p;
  }
  MPoly operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [ea, ca] : t)
      for (const auto& [eb, cb] : o.t) {
        std::vector<int> e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.t[e] += ca * cb;
      }
    for (auto it = r.t.begin(); it != r.t.end();) it = it->second == 0 ? r.t.erase(it) : std::next(it);
    return r;
  }
  Rational operator()(const RatVec& x) const {
    Rational v = 0;
    for (const auto& [e, c] : t) {
      Rational m = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) m *= x[i];
      v += m;
    }
    return v;
  }
};

struct Expanded {
  MPoly num, den;
};

// Expands scalar * prod form^e into numerator and denominator polynomials.
inline Expanded expand(const eisenres::FactoredRational& f, std::size_t nvars) {
  Expanded out{MPoly::constant(nvars, f.scalar()), MPoly::constant(nvars, 1)};
  for (const auto& [form, e] : f.factors()) {
    const MPoly p = MPoly::from_form(form);
    for (int k = 0; k < std::abs(e); ++k) (e > 0 ? out.num : out.den) = (e > 0 ? out.num : out.den) * p;
  }
  return out;
}

inline Rational random_rational(std::mt19937_64& rng, int range = 40, int max_den = 12) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  return Rational(num(rng), den(rng));
}

// Root data written out by hand.  Roots in the simple-root basis, coroots in
// the simple-coroot basis, Cartan C[i][j] = <alpha_j, alpha_i^vee>.
struct Table {
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<int>> roots;
  std::vector<std::vector<int>> coroots;
  std::vector<int> two_rho_simple;  // 2 rho in the simple-root basis
};

inline Table table(const std::string& label) {
  if (label == "A1") return {{{2}}, {{1}}, {{1}}, {2}};
  if (label == "A2")
    return {{{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}, {1, 1}}, {{1, 0}, {0, 1}, {1, 1}}, {2, 2}};
  if (label == "B2")  // alpha long, beta short
    return {{{2, -1}, {-2, 2}},
            {{1, 0}, {0, 1}, {1, 1}, {1, 2}},
            {{1, 0}, {0, 1}, {2, 1}, {1, 1}},
            {3, 4}};
  if (label == "G2")  // alpha short, beta long; order beta_1..beta_6
    return {{{2, -3}, {-1, 2}},
            {{0, 1}, {1, 1}, {3, 2}, {2, 1}, {3, 1}, {1, 0}},
            {{0, 1}, {1, 3}, {1, 2}, {2, 3}, {1, 1}, {1, 0}},
            {10, 6}};
  return {};
}

// Weight coordinates (fundamental basis) of a root given in simple-root
// coordinates: alpha_j = sum_i C[i][j] varpi_i.
inline RatVec weight_of(const Table& t, const std::vector<int>& simple) {
  RatVec w(t.cartan.size(), Rational(0));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j) w[i] += t.cartan[i][j] * simple[j];
  return w;
}

inline Rational dot(const RatVec& a, const std::vector<int>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// D_B at a point, or nullopt at a pole.
inline std::optional<Rational> db_value(const Table& t, const RatVec& lambda) {
  Rational v = 1;
  for (const auto& c : t.coroots) {
    const Rational p = dot(lambda, c);
    if (p == 1) return std::nullopt;
    v *= p / (p - 1);
  }
  return v;
}

// Res_{S_delta} D_B at a point of S_delta: the factor for delta contributes
// <Lambda, delta^vee> = 1.
inline std::optional<Rational> residue_value(const Table& t, std::size_t delta, const RatVec& lambda) {
  Rational v = 1;
  for (std::size_t k = 0; k < t.coroots.size(); ++k) {
    const Rational p = dot(lambda, t.coroots[k]);
    if (k == delta) {
      if (p != 1) return std::nullopt;
      continue;
    }
    if (p == 1) return std::nullopt;
    v *= p / (p - 1);
  }
  return v;
}

// Res_{S_delta} D_B on delta/2 + z v as a ratio of dense polynomials.
inline std::pair<Poly, Poly> residue_polys(const Table& t, std::size_t delta, const RatVec& v) {
  const RatVec half = [&] {
    RatVec w = weight_of(t, t.roots[delta]);
    for (auto& x : w) x /= 2;
    return w;
  }();
  Poly num, den;
  for (std::size_t k = 0; k < t.coroots.size(); ++k) {
    if (k == delta) continue;
    const Rational a0 = dot(half, t.coroots[k]);
    const Rational a1 = dot(v, t.coroots[k]);
    num = num * Poly::linear(a0, a1);
    den = den * Poly::linear(a0 - 1, a1);
  }
  return {num, den};
}

}  // namespace oracle
