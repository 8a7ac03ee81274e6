#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eisenres/cfunc.hpp"
#include "oracle.hpp"

using namespace eisenres;

namespace {

RootSystem make(const std::string& l) { return RootSystem(CartanSpec::from_label(l)); }

XiProduct random_xi(std::mt19937_64& rng, std::size_t n) {
  XiProduct x;
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
  for (int k = 0; k < 4; ++k) {
    RatVec coeffs;
    for (std::size_t i = 0; i < n; ++i) coeffs.emplace_back(c(rng));
    LinearForm f(Rational(c(rng), 2), coeffs);
    if (f.is_constant()) continue;
    x.mul_xi(f, e(rng));
  }
  return x;
}

}  // namespace

TEST_CASE("xi canonicalization") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    RatVec c{oracle::random_rational(rng, 4, 3), oracle::random_rational(rng, 4, 3)};
    if (c[0] == 0 && c[1] == 0) continue;
    const LinearForm f(oracle::random_rational(rng, 4, 3), c);
    const auto [g, flipped] = canonicalize_xi(f);
    const auto [h, again] = canonicalize_xi(g);
    CHECK(h == g);
    CHECK(!again);
    // xi(u) = xi(1 - u)
    LinearForm mirror = LinearForm(1, {0, 0}) - f;
    CHECK(canonicalize_xi(mirror).first == g);
    CHECK(XiProduct::xi(f) == XiProduct::xi(mirror));
  }
  CHECK_THROWS_AS(XiProduct::xi(LinearForm(1, {0})), MathError);
  CHECK(XiProduct::xi(LinearForm(Rational(-1, 2), {1})).str({"s"}) == "xi(s-1/2)");
  CHECK(XiProduct::xi(LinearForm(Rational(3, 2), {-1})).str({"s"}) == "xi(s-1/2)");
}

TEST_CASE("xi products form a group") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_xi(rng, 2), y = random_xi(rng, 2);
    CHECK(x * y == y * x);
    CHECK((x * y) / y == x);
    CHECK((x * x.inverse()).is_one());
  }
}

TEST_CASE("bar is a multiplicative involution") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_xi(rng, 2), y = random_xi(rng, 2);
    CHECK(bar_involution(x * y) == bar_involution(x) * bar_involution(y));
    CHECK(bar_involution(bar_involution(x)) == x);
  }
}

TEST_CASE("c-functions: cocycle identity and unitarity, exhaustively") {
  const std::map<std::string, std::size_t> pairs{{"A1", 4}, {"A2", 36}, {"B2", 64}, {"G2", 144}};
  for (const auto& [l, expected] : pairs) {
    CAPTURE(l);
    const auto rs = make(l);
    const auto n = rs.weyl_elements().size();
    std::size_t passed = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto r = cocycle_check(rs, a, b);
        if (r.pass) {
          ++passed;
          CHECK(r.witness.is_one());
        }
      }
    CHECK(passed == expected);
    for (const auto& w : rs.weyl_elements()) {
      const XiProduct c = build_c(rs, w);
      CHECK((bar_involution(c) * c).is_one());
    }
  }
}

TEST_CASE("c-function of a simple reflection") {
  const auto rs = make("A2");
  const auto& s0 = rs.weyl(1);
  REQUIRE(s0.length() == 1);
  const XiProduct c = build_c(rs, s0);
  const std::size_t k = s0.inverted.front();
  const LinearForm p = pairing_form(rs.root(k).coroot);
  CHECK(c == XiProduct::xi(p) / XiProduct::xi(p + Rational(1)));
  CHECK(build_c(rs, rs.weyl(rs.identity_index())).is_one());
}

TEST_CASE("the A2 constant-term matrix") {
  const auto rs = make("A2");
  const auto m = n_matrix(rs, a2_matrix_tangents());
  REQUIRE(m.entries.size() == 3);
  const auto r = rank_one_check(m.entries);
  CHECK(r.pass);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // sigma_ij sends delta_i to -delta_j
      const auto hit =
          rs.find_root(weyl_action(rs.weyl(m.sigma[i][j]), rs.root(m.labels[i]).weight));
      CHECK(hit->first == m.labels[j]);
      CHECK(hit->second == -1);
      CHECK(m.entries[i][j] == m.entries[j][i].negate_variables());
    }
  }
  CHECK(m.entries[0][0].is_one());
  CHECK(m.entries[1][1].is_one());
  std::size_t cancelled = 0;
  for (const auto& row : m.reports)
    for (const auto& rep : row) cancelled += rep.cancelled.size();
  CHECK(cancelled == 2);
}

TEST_CASE("a rank-one check catches a broken matrix") {
  const auto rs = make("A2");
  auto m = n_matrix(rs, a2_matrix_tangents()).entries;
  m[2][2] = m[2][2] * XiProduct::xi(LinearForm(Rational(1, 3), {1}));
  CHECK(!rank_one_check(m).pass);
}

TEST_CASE("residue of c(w0) along S_alpha") {
  const auto rs = make("A2");
  const auto& a = rs.root(0);
  const auto rep = residue_c_along(rs, rs.weyl(rs.longest_index()), a.coroot, Rational(1, 2) * a.weight,
                                   WeightVector{0, 1});
  CHECK(rep.has_pole);
  CHECK(rep.value.str({"s"}) == "xi(s-1/2)/(xi(2)*xi(s+3/2))");
  REQUIRE(rep.cancelled.size() == 1);
  CHECK(rep.cancelled[0].restricted_arg == LinearForm(Rational(1, 2), {1}));
  CHECK(rep.cancelled[0].numerator_source == LinearForm(0, {1, 1}));
  CHECK(rep.cancelled[0].denominator_source == LinearForm(1, {0, 1}));
  // the identity has no pole on S_alpha
  const auto none = residue_c_along(rs, rs.weyl(0), a.coroot, Rational(1, 2) * a.weight, WeightVector{0, 1});
  CHECK(!none.has_pole);
}
