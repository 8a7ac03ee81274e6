#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eisenres/ratfield.hpp"
#include "oracle.hpp"

using namespace eisenres;

namespace {

RootSystem make(const std::string& l) { return RootSystem(CartanSpec::from_label(l)); }

LinearForm random_form(std::mt19937_64& rng, std::size_t n) {
  RatVec c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(oracle::random_rational(rng, 5, 3));
  return LinearForm(oracle::random_rational(rng, 5, 3), c);
}

FactoredRational random_rat(std::mt19937_64& rng, std::size_t n, int nf = 4) {
  FactoredRational f(oracle::random_rational(rng, 9, 4) + Rational(1, 7));
  std::uniform_int_distribution<int> e(-2, 2);
  for (int k = 0; k < nf; ++k) {
    const LinearForm g = random_form(rng, n);
    if (g.is_constant()) continue;
    f.mul_form(g, e(rng));
  }
  return f;
}

oracle::Poly to_poly(const oracle::MPoly& p) {
  oracle::Poly out;
  out.c.assign(1, Rational(0));
  for (const auto& [e, c] : p.t) {
    const auto k = static_cast<std::size_t>(e.at(0));
    if (out.c.size() <= k) out.c.resize(k + 1, Rational(0));
    out.c[k] += c;
  }
  out.trim();
  return out;
}

// nullopt at a pole, including a pole meeting a zero factor.
std::optional<Rational> evaluate_or_indeterminate(const FactoredRational& f, const RatVec& x) {
  try {
    return f.try_evaluate(x);
  } catch (const MathError&) {
    return std::nullopt;
  }
}

RatVec random_point(std::mt19937_64& rng, std::size_t n) {
  RatVec x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(oracle::random_rational(rng));
  return x;
}

}  // namespace

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational(" -3/6 ") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rational("x"), ConfigError);
  CHECK(to_string(Rational(-5, 10)) == "-1/2");
  CHECK(to_string(RatVec{1, Rational(1, 3)}) == "(1, 1/3)");
}

TEST_CASE("linear forms") {
  const LinearForm f(Rational(-1, 2), {2, -4});
  const auto [c, k] = f.canonical();
  CHECK(c == LinearForm(-1, {4, -8}));
  CHECK(k == Rational(1, 2));
  CHECK(LinearForm(k * c.constant(), {k * c.coeffs()[0], k * c.coeffs()[1]}) == f);
  CHECK(LinearForm(Rational(3, 2), {0, Rational(-2, 3)}).canonical().first == LinearForm(-9, {0, 4}));
  CHECK(f.evaluate({1, 1}) == Rational(-5, 2));
  const LinearForm r = f.restrict_to_line({1, 0}, {1, 1});
  CHECK(r.nvars() == 1);
  CHECK(r.evaluate({3}) == f.evaluate({4, 3}));
  CHECK(f.str({"a", "b"}) == "2a-4b-1/2");
}

TEST_CASE("canonical form is unique and multiplicative") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_rat(rng, 2), g = random_rat(rng, 2);
    CHECK(FactoredRational::normalize(f.scalar(), {f.factors().begin(), f.factors().end()}) == f);
    CHECK(f / f == FactoredRational());
    CHECK((f * g) / g == f);
    CHECK(f * g == g * f);
    CHECK(f.inverse().inverse() == f);
    CHECK(f.pow(3) == f * f * f);
  }
  // the same function written two ways
  FactoredRational a(Rational(6));
  a.mul_form(LinearForm(-1, {2, 0}), 1);
  FactoredRational b(Rational(3));
  b.mul_form(LinearForm(Rational(-1, 2), {1, 0}), 1);
  b *= Rational(4);
  CHECK(a == b);
}

TEST_CASE("evaluation agrees with the expanded-polynomial oracle") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 3u}) {
    int done = 0;
    while (done < 100) {
      const auto f = random_rat(rng, n, 5);
      const auto ex = oracle::expand(f, n);
      const RatVec x = random_point(rng, n);
      const Rational den = ex.den(x);
      if (den == 0 || ex.num(x) == 0) continue;
      CHECK(f.evaluate(x) == ex.num(x) / den);
      ++done;
    }
  }
}

TEST_CASE("D_B and its hyperplane residues agree with direct evaluation") {
  std::mt19937_64 rng(3);
  for (const auto& l : std::vector<std::string>{"A2", "B2", "G2"}) {
    CAPTURE(l);
    const auto rs = make(l);
    const auto t = oracle::table(l);
    const auto db = build_db(rs);
    for (int k = 0; k < 30; ++k) {
      const RatVec x = random_point(rng, 2);
      const auto expected = oracle::db_value(t, x);
      if (!expected) {
        // a pole, possibly meeting a zero factor
        CHECK(!evaluate_or_indeterminate(db, x).has_value());
        continue;
      }
      CHECK(db.try_evaluate(x) == expected);
    }
    for (std::size_t d = 0; d < rs.positive_roots().size(); ++d) {
      const auto& r = rs.root(d);
      const WeightVector base = Rational(1, 2) * r.weight;
      const WeightVector v{-r.coroot[1], r.coroot[0]};
      const auto res = hyperplane_residue(db, r.coroot, base, v);
      for (int k = 0; k < 20; ++k) {
        const Rational z = oracle::random_rational(rng);
        const WeightVector p = base + z * v;
        const auto expected = oracle::residue_value(t, d, p.coords());
        if (!expected) continue;
        CHECK(res.try_evaluate({z}) == expected);
      }
    }
  }
}

TEST_CASE("residue of a product with a regular factor") {
  std::mt19937_64 rng(5);
  const auto rs = make("G2");
  const auto db = build_db(rs);
  const auto& r = rs.root(5);
  const WeightVector base = Rational(1, 2) * r.weight;
  const WeightVector v{0, 1};
  int done = 0;
  while (done < 30) {
    const auto g = random_rat(rng, 2, 3);
    const auto restricted = restrict_to_line(g, base, v);
    if (!restricted.vanishing.empty()) continue;
    const auto lhs = hyperplane_residue(db * g, r.coroot, base, v);
    const auto rhs = restricted.restricted * hyperplane_residue(db, r.coroot, base, v);
    CHECK(lhs == rhs);
    ++done;
  }
}

TEST_CASE("residues do not depend on the tangent scale") {
  std::mt19937_64 rng(9);
  for (const auto& l : std::vector<std::string>{"A2", "B2", "G2"}) {
    const auto rs = make(l);
    const auto db = build_db(rs);
    for (const auto& r : rs.positive_roots()) {
      const WeightVector base = Rational(1, 2) * r.weight;
      const WeightVector v{-r.coroot[1], r.coroot[0]};
      const Rational k(-3, 2);
      const auto f = hyperplane_residue(db, r.coroot, base, v);
      const auto g = hyperplane_residue(db, r.coroot, base, k * v);
      // g(z) = f(k z)
      for (int trial = 0; trial < 10; ++trial) {
        const Rational z = oracle::random_rational(rng);
        CHECK(evaluate_or_indeterminate(g, {z}) == evaluate_or_indeterminate(f, {k * z}));
      }
    }
  }
}

TEST_CASE("residue preconditions") {
  const auto rs = make("A2");
  const auto db = build_db(rs);
  const auto& a = rs.root(0);
  CHECK_THROWS_AS(hyperplane_residue(db, a.coroot, Rational(1, 2) * a.weight, WeightVector{1, 0}),
                  ConfigError);
  CHECK_THROWS_AS(hyperplane_residue(db, a.coroot, a.weight, WeightVector{0, 1}), ConfigError);
  FactoredRational sq = db;
  sq.mul_form(LinearForm(-1, {1, 0}), -1);
  CHECK_THROWS_AS(hyperplane_residue(sq, a.coroot, Rational(1, 2) * a.weight, WeightVector{0, 1}),
                  MathError);
}

TEST_CASE("Laurent data against the expansion oracle") {
  // g = (z - z0)^m f is regular at z0; then lead = g(z0) and, for m = 2,
  // res = g'(z0).
  std::mt19937_64 rng(13);
  int orders[3] = {0, 0, 0};
  for (int trial = 0; trial < 400; ++trial) {
    const Rational z0 = oracle::random_rational(rng, 6, 3);
    std::uniform_int_distribution<int> pole(1, 2);
    FactoredRational f = random_rat(rng, 1, 3);
    f.mul_form(LinearForm::root_at(z0), -pole(rng));
    const auto ex = oracle::expand(f, 1);
    oracle::Poly num = to_poly(ex.num), den = to_poly(ex.den);
    int m = 0;
    while (den(z0) == 0) den = den.deflate(z0), ++m;
    while (num(z0) == 0) num = num.deflate(z0), --m;
    const LaurentData d = laurent_at(f, z0, false);
    CHECK(d.order == m);
    if (m < 1 || m > 2) continue;
    ++orders[m];
    const Rational g = num(z0) / den(z0);
    CHECK(d.lead == g);
    if (m == 1) CHECK(d.res == g);
    if (m == 2) CHECK(d.res == (num.derivative()(z0) * den(z0) - num(z0) * den.derivative()(z0)) / (den(z0) * den(z0)));
  }
  CHECK(orders[1] > 20);
  CHECK(orders[2] > 20);
}

TEST_CASE("poles in an interval and the divisor") {
  FactoredRational f;
  f.mul_form(LinearForm::root_at(Rational(1, 2)), -2);
  f.mul_form(LinearForm::root_at(Rational(3, 2)), -1);
  f.mul_form(LinearForm::root_at(0), 1);
  const auto poles = real_poles_in_interval(f, Interval::swept(0, 2));
  REQUIRE(poles.size() == 2);
  CHECK(poles[0].point == Rational(3, 2));
  CHECK(poles[1].point == Rational(1, 2));
  CHECK(poles[1].order == 2);
  CHECK(real_poles_in_interval(f, Interval::swept(Rational(3, 2), 1)).empty());
  CHECK(real_poles_in_interval(f, Interval::swept(1, Rational(3, 2))).size() == 1);
  const auto div = divisor(f);
  REQUIRE(div.size() == 3);
  CHECK(div[0].order == -1);
  CHECK(laurent_at(f, 0).order == -1);
}
