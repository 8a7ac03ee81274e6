#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <regex>

#include "eisenres/cli_run.hpp"
#include "eisenres/golden.hpp"
#include "eisenres/svg.hpp"

using namespace eisenres;

namespace {

std::shared_ptr<const RootSystem> make(const std::string& l) {
  return std::make_shared<const RootSystem>(CartanSpec::from_label(l));
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("value round trips") {
  FactoredRational f(Rational(-3, 4));
  f.mul_form(LinearForm(Rational(1, 2), {1, -2}), 2);
  f.mul_form(LinearForm(-1, {0, 1}), -1);
  CHECK(factored_from_json(to_json(f), "") == f);
  XiProduct x = XiProduct::xi(LinearForm(Rational(1, 2), {1, 1}), 2);
  x *= f;
  CHECK(xi_product_from_json(to_json(x), "") == x);
  CHECK(rational_from_json(to_json(Rational(-7, 3)), "") == Rational(-7, 3));
  CHECK_THROWS_AS(rational_from_json(Json(0.5), "/x"), ConfigError);
}

TEST_CASE("spectral reports round-trip") {
  for (const std::string l : {"A1", "A2", "B2", "G2", "A1xA1"}) {
    CAPTURE(l);
    const auto rs = make(l);
    const auto report = discrete_functional(default_config(rs));
    const Json j = report_to_json(report, *rs);
    const SpectralReport back = report_from_json(j);
    CHECK(report_to_json(back, *rs).dump() == j.dump());
    CHECK(back.support == report.support);
    CHECK(back.discrete.size() == report.discrete.size());
  }
}

TEST_CASE("runs are deterministic") {
  const Json cfg{{"command", "deform"}, {"group", "G2"}, {"svg", "x.svg"}};
  const auto a = run_json(cfg), b = run_json(cfg);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.text == b.text);
  CHECK(a.svg == b.svg);
  CHECK(a.report["schema_version"] == kSchemaVersion);
}

TEST_CASE("deform reports") {
  const auto r = run_json(Json::parse(R"({"command": "deform", "group": "G2"})"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["support"].dump() == R"([["-1","1"],["1","0"],["1","1"]])");
  CHECK(r.report["discrete"].size() == 6);
  const auto a1 = run_json(Json::parse(R"({"command": "deform", "group": "A1"})"));
  CHECK(a1.report["support"].dump() == R"([["1"]])");
  const auto audit = run_json(Json::parse(
      R"({"command": "deform", "group": "G2", "sigma0": ["5/2", "7/2"], "audit_sigma0": [["7/2", "5/2"]]})"));
  CHECK(audit.exit_code == 0);
  CHECK(audit.report["audit"]["pass"] == true);
}

TEST_CASE("config errors carry pointers and exit 2") {
  const std::vector<std::pair<std::string, std::string>> bad{
      {R"({"command": "deform"})", "/group"},
      {R"({"command": "deform", "group": "E6"})", "/group"},
      {R"({"command": "deform", "group": "A2", "sigma0": ["1/0", "3"]})", "/sigma0/0"},
      {R"({"command": "deform", "group": "A2", "sigma0": ["3", "3"]})", "/sigma0"},
      {R"({"command": "deform", "group": "A2", "sigma0": ["3"]})", "/sigma0"},
      {R"({"command": "deform", "group": "A2", "colour": 1})", "/colour"},
      {R"({"command": "explode"})", "/command"},
      {R"({"command": "poles-deg", "group": "G2"})", "/parabolic"},
      {R"({"command": "poles-deg", "group": "G2", "parabolic": "gamma"})", "/parabolic"},
      {R"({"command": "poles-deg", "group": "G2", "parabolic": "alpha", "kappa": {"h": ["0", "5"]}})",
       "/kappa/h/1"},
      {R"({"command": "poles-gln", "speh": {"blocks": [{"a": 0, "class": "t"}]}})", "/speh/blocks/0/a"},
      {R"({"command": "poles-gln", "speh": {"blocks": [{"a": 1, "d": 1, "class": "t"}, {"a": 1, "d": 2, "class": "t"}]}})",
       "/speh/blocks/1/d"},
      {R"({"command": "verify-paper", "select": ["nope"]})", "/select/0"},
  };
  for (const auto& [cfg, pointer] : bad) {
    CAPTURE(cfg);
    const auto r = run_json(Json::parse(cfg));
    CHECK(r.exit_code == 2);
    CHECK(r.report["status"] == "config_error");
    CHECK(r.report["error"]["pointer"] == pointer);
    CHECK(r.report["schema_version"] == kSchemaVersion);
  }
}

TEST_CASE("engine errors exit 1") {
  const auto r = run_json(Json::parse(
      R"({"command": "poles-deg", "group": "G2", "parabolic": "alpha", "kappa": {"h": ["0", "1"]}})"));
  CHECK(r.exit_code == 1);
  CHECK(r.report["status"] == "math_error");
}

TEST_CASE("poles-deg and poles-gln") {
  const auto r = run_json(Json::parse(R"({"command": "poles-deg", "group": "G2", "parabolic": "beta"})"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["q_times_residue"]["text"] == "1");
  CHECK(r.report["consistency"]["agree_on_nonnegative_reals"] == true);
  CHECK(r.report["levels"].size() == 3);
  const auto g = run_json(Json::parse(
      R"({"command": "poles-gln", "speh": {"blocks": [{"a": 1, "d": 1, "class": "t"}, {"a": 1, "d": 1, "class": "t"}]}})"));
  REQUIRE(g.exit_code == 0);
  CHECK(g.report["d"]["text"] == "(s1-s2-1)/(s1-s2)");
}

TEST_CASE("cfun-check") {
  for (const std::string l : {"A2", "G2"}) {
    const auto r = run_json(Json{{"command", "cfun-check"}, {"group", l}});
    CHECK(r.exit_code == 0);
    CHECK(r.report["cocycle"]["passed"] == r.report["cocycle"]["pairs"]);
  }
}

TEST_CASE("verify-paper is the conjunction of its cases") {
  const auto all = run_json(Json{{"command", "verify-paper"}});
  CHECK(all.exit_code == 0);
  CHECK(all.report["pass"] == true);
  const auto none = run_json(Json{{"command", "verify-paper"}, {"empty_suite", true}});
  CHECK(none.exit_code == 0);
  CHECK(none.report["cases"].empty());
  std::vector<GoldenCase> cases = reference_cases();
  cases.resize(2);
  CHECK(run_golden(cases).pass);
  cases.push_back({"always-fails", "", "", [] { return GoldenOutcome{false, "1", "0"}; }});
  CHECK(!run_golden(cases).pass);
  cases.push_back({"throws", "", "", []() -> GoldenOutcome { throw MathError("boom"); }});
  const auto s = run_golden(cases);
  CHECK(!s.pass);
  CHECK(s.rows.back().error == "boom");
  CHECK(run_golden({}).pass);
}

TEST_CASE("SVG figures") {
  const auto g2 = make("G2");
  const std::string svg = render_svg(discrete_functional(default_config(g2)), *g2);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "stroke=\"gray\"") == 6);
  CHECK(count(svg, "stroke-dasharray") == 6);
  CHECK(count(svg, "fill=\"crimson\"/>") == 3);
  CHECK(svg.find("(1, 0)") != std::string::npos);

  const auto a2 = make("A2");
  const std::string s2 = render_svg(discrete_functional(default_config(a2)), *a2);
  CHECK(count(s2, "stroke=\"gray\"") == 3);
  CHECK(count(s2, "fill=\"crimson\"/>") == 1);
  CHECK(s2.find("(1, 0) no contribution") != std::string::npos);
  CHECK(s2.find("(0, 1) no contribution") != std::string::npos);

  const auto a1 = make("A1");
  const std::string s1 = render_svg(discrete_functional(default_config(a1)), *a1);
  CHECK(s1.find("pole at 1") != std::string::npos);

  SpectralReport fake;
  CHECK_THROWS_AS(render_svg(fake, *make("A3")), ConfigError);
}
