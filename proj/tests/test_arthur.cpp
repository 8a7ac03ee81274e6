#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eisenres/arthur.hpp"
#include "oracle.hpp"

using namespace eisenres;

namespace {

RootSystem make(const std::string& l) { return RootSystem(CartanSpec::from_label(l)); }

int linear_factor_count(const FactoredRational& f, int sign) {
  int n = 0;
  for (const auto& [form, e] : f.factors())
    if (sign * e > 0) n += std::abs(e);
  return n;
}

}  // namespace

TEST_CASE("SL(2) weight multisets round-trip") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> l(1, 9), m(0, 3), parts(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    SL2Multiset rep;
    for (int k = parts(rng); k > 0; --k) {
      const int mult = m(rng);
      if (mult > 0) rep[l(rng)] += mult;
    }
    const auto w = sl2_weights(rep);
    CHECK(sl2_from_weights(w) == rep);
    CHECK(static_cast<int>(w.size()) == sl2_dimension(rep));
  }
  CHECK_THROWS_AS(sl2_from_weights({1, 1, -1}), MathError);
  CHECK_THROWS_AS(sl2_from_weights({2, -2}), MathError);
  CHECK(sl2_str({{2, 1}, {1, 2}}) == "V_2 + 2 V_1");
}

TEST_CASE("Clebsch-Gordan dimensions") {
  for (int a = 1; a <= 20; ++a)
    for (int b = 1; b <= 20; ++b) {
      const auto m = clebsch_gordan(a, b);
      CHECK(sl2_dimension(m) == a * b);
      CHECK(m.begin()->first == std::abs(a - b) + 1);
      CHECK(m.rbegin()->first == a + b - 1);
      // weights of the tensor product
      std::vector<int> w;
      for (int i = -(a - 1); i <= a - 1; i += 2)
        for (int j = -(b - 1); j <= b - 1; j += 2) w.push_back(i + j);
      CHECK(sl2_from_weights(w) == m);
    }
  CHECK_THROWS_AS(clebsch_gordan(0, 2), ConfigError);
}

TEST_CASE("principal markings cancel the hyperplane residue") {
  for (const std::string l : {"A1", "A2", "B2", "G2", "A1xA1"}) {
    const auto rs = make(l);
    for (std::size_t e = 0; e < rs.rank(); ++e) {
      CAPTURE(l);
      CAPTURE(e);
      const auto levi = levi_datum(rs, e);
      const auto q = q_series(rs, levi, principal_marking(levi));
      CHECK(q * parabolic_residue(rs, levi) == FactoredRational());
    }
  }
}

TEST_CASE("level decompositions") {
  const auto g2 = make("G2");
  const auto la = levi_datum(g2, 0);
  const auto da = level_decomposition(g2, la, principal_marking(la));
  CHECK(sl2_str(da.at(1)) == "V_4");
  CHECK(sl2_str(da.at(2)) == "V_1");
  const auto lb = levi_datum(g2, 1);
  const auto db = level_decomposition(g2, lb, principal_marking(lb));
  CHECK(sl2_str(db.at(1)) == "V_2");
  CHECK(sl2_str(db.at(2)) == "V_1");
  CHECK(sl2_str(db.at(3)) == "V_2");
  const auto b2 = make("B2");
  const auto l2 = levi_datum(b2, 1);
  CHECK(sl2_str(level_decomposition(b2, l2, principal_marking(l2)).at(1)) == "V_3");
  const auto a1 = make("A1");
  const auto l1 = levi_datum(a1, 0);
  const auto q = q_series(a1, l1, principal_marking(l1));
  CHECK(q == FactoredRational::normalize(1, {{LinearForm(-1, {1}), 1}, {LinearForm(0, {1}), -1}}));
}

TEST_CASE("user markings") {
  const auto g2 = make("G2");
  const auto l = levi_datum(g2, 0);
  const auto trivial = user_marking(g2, l, WeightVector{0, 0});
  const auto d = level_decomposition(g2, l, trivial);
  CHECK(sl2_str(d.at(1)) == "4 V_1");
  CHECK_THROWS_AS(user_marking(g2, l, WeightVector{0, 3}), ConfigError);
  CHECK_THROWS_AS(user_marking(g2, l, WeightVector{0}), ConfigError);
  // h = varpi_beta is admissible but its level-1 weights 0, 1, 2, 3 are not symmetric
  const auto lopsided = user_marking(g2, l, WeightVector{0, 1});
  CHECK_THROWS_AS(level_decomposition(g2, l, lopsided), MathError);
}

TEST_CASE("GL(n) specialization") {
  const SpehDatum pair{{{1, 1, "t"}, {1, 1, "t"}}};
  CHECK(d_gln(pair) ==
        FactoredRational::normalize(1, {{LinearForm(-1, {1, -1}), 1}, {LinearForm(0, {1, -1}), -1}}));
  const SpehDatum apart{{{1, 1, "t"}, {1, 1, "u"}}};
  CHECK(d_gln(apart) == FactoredRational());
  CHECK_THROWS_AS(d_gln(SpehDatum{{{1, 1, "t"}, {1, 2, "t"}}}), ConfigError);
  const SpehDatum same{{{2, 1, "t"}, {1, 1, "t"}}};
  CHECK(d_gln(same).str() == "(2x1-2x2-3)/(2x1-2x2+1)");
}

TEST_CASE("d_gln degree bookkeeping") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> a(1, 6), k(1, 5), cls(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    SpehDatum s;
    for (int i = k(rng); i > 0; --i) s.blocks.push_back({a(rng), 1, std::string(1, char('p' + cls(rng)))});
    const auto d = d_gln(s);
    int expected = 0;
    for (std::size_t i = 0; i < s.blocks.size(); ++i)
      for (std::size_t j = i + 1; j < s.blocks.size(); ++j)
        if (s.blocks[i].class_id == s.blocks[j].class_id)
          expected += std::min(s.blocks[i].a, s.blocks[j].a);
    const int num = linear_factor_count(d, 1), den = linear_factor_count(d, -1);
    CHECK(num == den);
    CHECK(num == expected);
    int raw = 0;
    for (const auto& p : matched_pairs(s))
      for (const auto& [l, m] : p.decomposition) raw += m;
    CHECK(raw == expected);
  }
}
