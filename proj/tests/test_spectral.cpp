#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "eisenres/spectral.hpp"
#include "oracle.hpp"

using namespace eisenres;

namespace {

std::shared_ptr<const RootSystem> make(const std::string& l) {
  return std::make_shared<const RootSystem>(CartanSpec::from_label(l));
}

// The closed cone spanned by the positive roots.
bool in_closed_positive_cone(const RootSystem& rs, const WeightVector& w) {
  for (const auto& c : rs.simple_coords_of(w))
    if (c < 0) return false;
  return true;
}

// Random start points inside the convergence cone; non-generic ones are
// rejected by the engine and skipped.
std::vector<WeightVector> random_sigma0s(std::mt19937_64& rng, const DeformationConfig& base, int n) {
  std::vector<WeightVector> out;
  std::uniform_int_distribution<int> num(11, 60), den(1, 7);
  while (static_cast<int>(out.size()) < n) {
    WeightVector s{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    DeformationConfig cfg = base;
    cfg.sigma0 = s;
    try {
      validate_config(cfg);
      discrete_functional(cfg);
    } catch (const ConfigError&) {
      continue;
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("crossings lie on their hyperplanes") {
  for (const std::string l : {"A1", "A2", "B2", "G2", "A1xA1"}) {
    CAPTURE(l);
    const auto rs = make(l);
    const auto cfg = default_config(rs);
    for (const auto& c : stage1_crossings(cfg)) {
      CHECK(pairing(c.point, rs->root(c.root).coroot) == 1);
      CHECK(c.t > 0);
      CHECK(c.t < 1);
      CHECK(c.point == (1 - c.t) * cfg.sigma0);
      const WeightVector on_line = Rational(1, 2) * rs->root(c.root).weight + c.z * cfg.tangents[c.root];
      if (rs->rank() == 2) CHECK(on_line == c.point);
    }
  }
}

TEST_CASE("Stage-II events lie on S_delta in the closed positive cone") {
  for (const std::string l : {"A1", "A2", "B2", "G2", "A1xA1"}) {
    CAPTURE(l);
    const auto rs = make(l);
    const auto rep = discrete_functional(default_config(rs));
    for (const auto& h : rep.continuous_1d)
      for (const auto& e : h.events) {
        CHECK(pairing(e.location, rs->root(h.root).coroot) == 1);
        CHECK(in_closed_positive_cone(*rs, e.location));
      }
    for (const auto& s : rep.support) CHECK(in_closed_positive_cone(*rs, s));
  }
}

TEST_CASE("G2 default run: six terms") {
  const auto rs = make("G2");
  const auto rep = discrete_functional(default_config(rs));
  REQUIRE(rep.discrete.size() == 6);
  std::map<WeightVector, int> per_point;
  for (const auto& t : rep.discrete) ++per_point[t.location];
  CHECK(per_point[WeightVector{1, 1}] == 1);
  CHECK(per_point[WeightVector{-1, 1}] == 1);
  CHECK(per_point[WeightVector{1, 0}] == 4);
  const auto c = collapse_derivatives(rep, *rs, WeightVector{1, 0});
  CHECK(c.plain == Rational(2, 3));
  CHECK(c.derivative == (WeightVector{-1, Rational(2, 3)}));
  CHECK(c.derivative_root_coords == RatVec{0, Rational(1, 3)});
  CHECK(c.merged_terms == 4);
  const std::vector<Rational> z{Rational(31, 14), Rational(3, 13), Rational(5, 38),
                                Rational(-7, 62), Rational(13, 12), Rational(19, 10)};
  for (std::size_t k = 0; k < 6; ++k) CHECK(rep.continuous_1d[k].crossing.z == z[k]);
  CHECK(rep.continuous_1d[3].orientation == -1);
}

TEST_CASE("the A2 run and its quiet points") {
  const auto rs = make("A2");
  const auto rep = discrete_functional(default_config(rs));
  REQUIRE(rep.discrete.size() == 1);
  CHECK(rep.discrete[0].location == rs->rho());
  CHECK(rep.discrete[0].coefficient == 2);
  std::set<WeightVector> quiet;
  for (const auto& h : rep.continuous_1d)
    for (const auto& q : h.quiet_points) {
      CHECK(q.laurent.order <= 0);
      quiet.insert(q.location);
    }
  CHECK(quiet.count(WeightVector{1, 0}) == 1);
  CHECK(quiet.count(WeightVector{0, 1}) == 1);
  // oracle: the residue on S_gamma is constant 1; here the contour runs backwards
  const auto t = oracle::table("A2");
  const auto& hg = rep.continuous_1d[2];
  CHECK(*oracle::residue_value(t, 2, hg.crossing.point.coords()) == 1);
  CHECK(hg.orientation == -1);
}

TEST_CASE("rank one: a single simple pole at 1") {
  const auto rs = make("A1");
  const auto rep = discrete_functional(default_config(rs));
  REQUIRE(rep.discrete.size() == 1);
  CHECK(rep.discrete[0].location == WeightVector{1});
  CHECK(rep.discrete[0].subtag == "simple");
  CHECK(rep.discrete[0].derivative_directions.empty());
  CHECK(rep.discrete[0].pole_order == 1);
}

TEST_CASE("B2 keeps its boundary pole on the final contour") {
  const auto rs = make("B2");
  const auto rep = discrete_functional(default_config(rs));
  std::size_t boundary = 0;
  for (const auto& h : rep.continuous_1d) boundary += h.boundary_poles.size();
  CHECK(boundary == 1);
  const auto total = total_functional(rep, *rs);
  CHECK(total.at(WeightVector{1, 1}).first == 3);
  CHECK(total.at(WeightVector{0, 1}).first == Rational(-1, 2));
}

TEST_CASE("path independence") {
  std::mt19937_64 rng(17);
  {
    const auto rs = make("G2");
    const auto audit = path_independence_audit(default_config(rs), {WeightVector{Rational(7, 2), Rational(5, 2)}});
    CHECK(audit.pass);
  }
  for (const std::string l : {"A2", "B2", "G2", "A1xA1"}) {
    CAPTURE(l);
    const auto rs = make(l);
    const auto cfg = default_config(rs);
    const auto audit = path_independence_audit(cfg, random_sigma0s(rng, cfg, 3));
    for (const auto& d : audit.diffs) MESSAGE(d);
    CHECK(audit.pass);
  }
}

TEST_CASE("tangent choice does not change the total") {
  for (const std::string l : {"A2", "B2", "G2"}) {
    CAPTURE(l);
    const auto rs = make(l);
    const auto cfg = default_config(rs);
    DeformationConfig scaled = cfg;
    for (auto& v : scaled.tangents) v = Rational(3) * v;
    CHECK(total_functional(discrete_functional(cfg), *rs) ==
          total_functional(discrete_functional(scaled), *rs));
  }
}

TEST_CASE("config validation") {
  const auto rs = make("A2");
  auto cfg = default_config(rs);
  cfg.sigma0 = WeightVector{3, 3};
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);
  const auto s = suggest_sigma0(cfg);
  cfg.sigma0 = s;
  CHECK_NOTHROW(validate_config(cfg));
  cfg = default_config(rs);
  cfg.sigma0 = WeightVector{Rational(1, 2), 3};
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);
  cfg = default_config(rs);
  cfg.tangents[0] = WeightVector{1, 0};
  CHECK_THROWS_AS(validate_config(cfg), ConfigError);
  CHECK_THROWS_AS(default_config(make("A3")), ConfigError);
}

TEST_CASE("determinism") {
  const auto rs = make("G2");
  const auto a = discrete_functional(default_config(rs));
  const auto b = discrete_functional(default_config(rs));
  REQUIRE(a.discrete.size() == b.discrete.size());
  for (std::size_t k = 0; k < a.discrete.size(); ++k) {
    CHECK(a.discrete[k].location == b.discrete[k].location);
    CHECK(a.discrete[k].coefficient == b.discrete[k].coefficient);
  }
}
