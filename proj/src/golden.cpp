#include "eisenres/golden.hpp"

#include <algorithm>
#include <iomanip>
#include <memory>
#include <sstream>

#include "eisenres/arthur.hpp"
#include "eisenres/cli_run.hpp"
#include "eisenres/spectral.hpp"
#include "eisenres/xi_series.hpp"

namespace eisenres {

namespace {

using Factors = std::vector<std::pair<LinearForm, int>>;

LinearForm lin(const Rational& c, const Rational& k) { return LinearForm(c, {k}); }

FactoredRational rat1(const Rational& scalar, const Factors& factors) {
  return FactoredRational::normalize(scalar, factors);
}

XiProduct xi_ratio(const Rational& num, const Rational& den, const Rational& k = 1) {
  return XiProduct::xi(lin(num, k)) / XiProduct::xi(lin(den, k));
}

std::shared_ptr<const RootSystem> group(const std::string& label) {
  return std::make_shared<const RootSystem>(CartanSpec::from_label(label));
}

SpectralReport default_report(const std::shared_ptr<const RootSystem>& rs) {
  return discrete_functional(default_config(rs));
}

const HyperplaneData& hyperplane(const SpectralReport& report, std::size_t root) {
  for (const auto& h : report.continuous_1d)
    if (h.root == root) return h;
  throw MathError("no residue contour for root " + std::to_string(root));
}

std::string support_str(const std::vector<WeightVector>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].str();
  return out + "}";
}

GoldenOutcome compare(const FactoredRational& expected, const FactoredRational& computed) {
  return {expected == computed, expected.str(), computed.str()};
}

GoldenOutcome compare(const XiProduct& expected, const XiProduct& computed,
                      const std::vector<std::string>& names = {"s"}) {
  return {expected == computed, expected.str(names), computed.str(names)};
}

GoldenOutcome compare(const Rational& expected, const Rational& computed) {
  return {expected == computed, to_string(expected), to_string(computed)};
}

GoldenOutcome compare_support(const std::vector<WeightVector>& expected,
                              const std::vector<WeightVector>& computed) {
  return {expected == computed, support_str(expected), support_str(computed)};
}

GoldenOutcome residue_case(const std::string& label, std::size_t root,
                           const FactoredRational& expected) {
  const auto rs = group(label);
  return compare(expected, hyperplane(default_report(rs), root).residue);
}

GoldenOutcome cocycle_case(const std::string& label, std::size_t expected_pairs) {
  const RootSystem rs(CartanSpec::from_label(label));
  const std::size_t n = rs.weyl_elements().size();
  std::size_t passed = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) passed += cocycle_check(rs, a, b).pass ? 1 : 0;
  return {passed == expected_pairs && n * n == expected_pairs,
          std::to_string(expected_pairs) + "/" + std::to_string(expected_pairs),
          std::to_string(passed) + "/" + std::to_string(n * n)};
}

GoldenOutcome q_case(const std::string& label, std::size_t excluded, const FactoredRational& expected) {
  const RootSystem rs(CartanSpec::from_label(label));
  const auto levi = levi_datum(rs, excluded);
  const auto q = q_series(rs, levi, principal_marking(levi));
  const auto product = q * parabolic_residue(rs, levi);
  return {q == expected && product == FactoredRational(), expected.str({"s"}) + "; Q*Res = 1",
          q.str({"s"}) + "; Q*Res = " + product.str({"s"})};
}

GoldenOutcome run_support_case(const std::string& label, const std::vector<std::string>& expected) {
  const RunResult r = run_json(Json{{"command", "deform"}, {"group", label}});
  std::vector<std::string> computed;
  if (r.exit_code == 0)
    for (const auto& s : r.report["support"]) {
      std::string p = "(";
      for (std::size_t i = 0; i < s.size(); ++i) p += (i ? ", " : "") + s[i].get<std::string>();
      computed.push_back(p + ")");
    }
  auto join = [](const std::vector<std::string>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    return out + "}";
  };
  return {r.exit_code == 0 && computed == expected, join(expected),
          r.exit_code == 0 ? join(computed) : "exit " + std::to_string(r.exit_code)};
}

std::vector<GoldenCase> g2_cases() {
  std::vector<GoldenCase> out;
  out.push_back({"g2-s6-residue", "Res_{S_6} D_B on alpha/2 + z varpi_beta", "G2, residue along S_6",
                 [] {
                   return residue_case("G2", 5,
                                       rat1(Rational(1, 6), {{lin(Rational(1, 2), 1), 1},
                                                             {lin(0, 2), 1},
                                                             {lin(Rational(1, 2), 3), 1},
                                                             {lin(Rational(-3, 2), 1), -1},
                                                             {lin(Rational(-1, 2), 1), -2}}));
                 }});
  out.push_back({"g2-s5-residue", "Res_{S_5} D_B on beta_5/2 + z (varpi_beta - varpi_alpha)",
                 "G2, residue along S_5", [] {
                   return residue_case("G2", 4,
                                       rat1(1, {{lin(0, 1), 1},
                                                {lin(Rational(3, 2), 1), 1},
                                                {lin(Rational(-1, 2), 1), -2}}));
                 }});
  out.push_back({"g2-s1-residue", "Res_{S_1} D_B on beta/2 + z varpi_alpha", "G2, residue along S_1",
                 [] {
                   return residue_case("G2", 0,
                                       rat1(1, {{lin(Rational(3, 2), 1), 1},
                                                {lin(0, 1), 1},
                                                {lin(Rational(-5, 2), 1), -1},
                                                {lin(Rational(-1, 2), 1), -1}}));
                 }});
  out.push_back({"g2-support", "discrete support {rho, beta_2, beta_4}", "G2, discrete support", [] {
                   const auto rs = group("G2");
                   return compare_support({WeightVector{-1, 1}, WeightVector{1, 0}, WeightVector{1, 1}},
                                          default_report(rs).support);
                 }});
  out.push_back({"g2-no-events-s2-s3-s4", "S_2, S_3, S_4 carry no point poles on their path",
                 "G2, hyperplanes without contribution", [] {
                   const auto rs = group("G2");
                   const auto report = default_report(rs);
                   std::size_t events = 0;
                   for (std::size_t r : {1, 2, 3}) events += hyperplane(report, r).events.size();
                   return GoldenOutcome{events == 0, "0 events", std::to_string(events) + " events"};
                 }});
  out.push_back({"g2-lead-beta4", "leading coefficients at the double poles at beta_4",
                 "G2, double poles at beta_4", [] {
                   const auto rs = group("G2");
                   const auto report = default_report(rs);
                   Rational s5 = 0, s6 = 0;
                   for (const auto& t : report.discrete) {
                     if (t.location != WeightVector{1, 0} || t.subtag != "leading") continue;
                     if (t.source_root == 4) s5 += t.coefficient;
                     if (t.source_root == 5) s6 += t.coefficient;
                   }
                   return GoldenOutcome{s6 == Rational(-1, 3) && s5 == 1, "S_6: -1/3, S_5: 1",
                                        "S_6: " + to_string(s6) + ", S_5: " + to_string(s5)};
                 }});
  out.push_back({"g2-collapse", "derivative terms at beta_4 collapse to (1/3) beta",
                 "G2, collapse of the derivative terms", [] {
                   const auto rs = group("G2");
                   const auto c = collapse_derivatives(default_report(rs), *rs, WeightVector{1, 0});
                   const RatVec expected{0, Rational(1, 3)};
                   return GoldenOutcome{c.derivative_root_coords == expected,
                                        to_string(expected) + " in simple roots",
                                        to_string(c.derivative_root_coords) + " in simple roots"};
                 }});
  out.push_back({"g2-cocycle", "cocycle identity over all pairs of W(G2)", "G2 c-functions",
                 [] { return cocycle_case("G2", 144); }});
  return out;
}

ConstantTermMatrix a2_matrix() {
  const RootSystem rs(CartanSpec::from_label("A2"));
  return n_matrix(rs, a2_matrix_tangents());
}

std::vector<GoldenCase> sl3_cases() {
  std::vector<GoldenCase> out;
  out.push_back({"sl3-res-alpha", "Res_{S_alpha} D_B on alpha/2 + s varpi_beta",
                 "SL(3), residue along S_alpha", [] {
                   return residue_case("A2", 0,
                                       rat1(1, {{lin(Rational(1, 2), 1), 1},
                                                {lin(Rational(-3, 2), 1), -1}}));
                 }});
  out.push_back({"sl3-holomorphic-varpi-alpha", "Res_{S_alpha} D_B is regular at varpi_alpha",
                 "SL(3), parasitic residues unmasked", [] {
                   const auto rs = group("A2");
                   const auto report = default_report(rs);
                   const auto& h = hyperplane(report, 0);
                   const auto it = std::find_if(h.quiet_points.begin(), h.quiet_points.end(),
                                                [](const PointEvent& e) {
                                                  return e.location == WeightVector{1, 0};
                                                });
                   const bool in_support =
                       std::find(report.support.begin(), report.support.end(), WeightVector{1, 0}) !=
                       report.support.end();
                   const bool pass = it != h.quiet_points.end() && it->laurent.order <= 0 && !in_support;
                   return GoldenOutcome{pass, "regular, no contribution",
                                        it == h.quiet_points.end()
                                            ? "not on the path"
                                            : "order " + std::to_string(it->laurent.order) +
                                                  (in_support ? ", in support" : ", no contribution")};
                 }});
  out.push_back({"sl3-res-gamma", "oriented residue along S_gamma", "SL(3), residue along S_gamma", [] {
                   const auto rs = group("A2");
                   const auto& h = hyperplane(default_report(rs), 2);
                   if (!h.residue.is_constant())
                     return GoldenOutcome{false, "-1", h.residue.str()};
                   return compare(Rational(-1), h.orientation * h.residue.scalar());
                 }});
  out.push_back({"sl3-residue-rho", "total coefficient at rho", "SL(3), residue at rho", [] {
                   const auto rs = group("A2");
                   const auto total = total_functional(default_report(rs), *rs);
                   const auto it = total.find(rs->rho());
                   return compare(Rational(2), it == total.end() ? Rational(0) : it->second.first);
                 }});
  out.push_back({"sl3-support", "discrete support {rho}", "SL(3), discrete support", [] {
                   const auto rs = group("A2");
                   return compare_support({rs->rho()}, default_report(rs).support);
                 }});
  out.push_back({"sl3-n-matrix", "constant-term matrix [n_ij(s)]", "SL(3), one-dimensional spectrum",
                 [] {
                   const auto m = a2_matrix();
                   const XiProduct one;
                   const std::vector<std::vector<XiProduct>> expected{
                       {one, xi_ratio(Rational(-1, 2), Rational(3, 2)),
                        xi_ratio(Rational(1, 2), Rational(3, 2))},
                       {xi_ratio(Rational(-1, 2), Rational(3, 2), -1), one,
                        xi_ratio(Rational(1, 2), Rational(3, 2), -1)},
                       {xi_ratio(Rational(1, 2), Rational(3, 2), -1),
                        xi_ratio(Rational(1, 2), Rational(3, 2)),
                        xi_ratio(Rational(1, 2), Rational(3, 2)) *
                            xi_ratio(Rational(1, 2), Rational(3, 2), -1)}};
                   GoldenOutcome out{true, "display", ""};
                   std::size_t bad = 0;
                   for (std::size_t i = 0; i < 3; ++i)
                     for (std::size_t j = 0; j < 3; ++j)
                       if (!(m.entries[i][j] == expected[i][j])) {
                         ++bad;
                         out.computed += "n" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                                         m.entries[i][j].str({"s"}) + "; ";
                       }
                   out.pass = bad == 0;
                   if (out.pass) out.computed = "display";
                   return out;
                 }});
  out.push_back({"sl3-rank-one", "[n_ij] has rank one and n_ij(s) = n_ji(-s)",
                 "SL(3), one-dimensional spectrum", [] {
                   const auto r = rank_one_check(a2_matrix().entries);
                   std::string w;
                   for (const auto& s : r.witnesses) w += s + "; ";
                   return GoldenOutcome{r.pass, "rank one, symmetric", r.pass ? "rank one, symmetric" : w};
                 }});
  out.push_back({"sl3-bar", "bar(n_1j) = c_{alpha,delta_j}^{-1}", "SL(3), collapse of C_1", [] {
                   const auto m = a2_matrix();
                   const std::vector<XiProduct> c{XiProduct(), xi_ratio(Rational(-1, 2), Rational(3, 2)),
                                                  xi_ratio(Rational(-1, 2), Rational(1, 2))};
                   GoldenOutcome out{true, "", ""};
                   for (std::size_t j = 0; j < 3; ++j) {
                     const XiProduct lhs = bar_involution(m.entries[0][j]);
                     const XiProduct rhs = c[j].inverse();
                     out.pass = out.pass && lhs == rhs;
                     out.expected += (j ? "; " : "") + rhs.str({"s"});
                     out.computed += (j ? "; " : "") + lhs.str({"s"});
                   }
                   return out;
                 }});
  out.push_back({"sl3-cancellation", "only xi(1 + <Lambda, beta^vee>) cancels in Res_{S_alpha} c(w0)",
                 "SL(3), cancellation in the residue", [] {
                   const RootSystem rs(CartanSpec::from_label("A2"));
                   const auto& a = rs.root(0);
                   const auto rep = residue_c_along(rs, rs.weyl(rs.longest_index()), a.coroot,
                                                    Rational(1, 2) * a.weight, WeightVector{0, 1});
                   const LinearForm beta_plus_one(1, {0, 1});
                   const bool pass = rep.cancelled.size() == 1 &&
                                     rep.cancelled[0].denominator_source == beta_plus_one;
                   std::string computed = std::to_string(rep.cancelled.size()) + " pair(s)";
                   for (const auto& p : rep.cancelled)
                     computed += "; xi(" + p.numerator_source.str({"a", "b"}) + ") / xi(" +
                                 p.denominator_source.str({"a", "b"}) + ")";
                   return GoldenOutcome{pass, "1 pair; denominator xi(b+1)", computed};
                 }});
  out.push_back({"sl3-limit-rho", "constant term of sum_w c(w)/D_B at rho",
                 "SL(3), 2 C_B E_B*(rho) = 1/(xi(2) xi(3))", [] {
                   const RootSystem rs(CartanSpec::from_label("A2"));
                   const auto db = build_db(rs);
                   std::vector<XiProduct> terms;
                   for (const auto& w : rs.weyl_elements()) {
                     XiProduct t = build_c(rs, w);
                     t *= db.inverse();
                     terms.push_back(std::move(t));
                   }
                   const auto lim = xi_limit_along_line(terms, rs.rho(), WeightVector{1, 2});
                   const SymPoly expected = SymPoly(Rational(1, 2)) *
                                            SymPoly::xi_derivative(2, 0).inverse_monomial() *
                                            SymPoly::xi_derivative(3, 0).inverse_monomial();
                   return GoldenOutcome{lim.constant == expected && lim.symbols_cancel, expected.str(),
                                        lim.constant.str()};
                 }});
  out.push_back({"sl3-cocycle", "cocycle identity over all pairs of W(A2)", "SL(3) c-functions",
                 [] { return cocycle_case("A2", 36); }});
  out.push_back({"b2-cocycle", "cocycle identity over all pairs of W(B2)", "B2 c-functions",
                 [] { return cocycle_case("B2", 64); }});
  return out;
}

std::vector<GoldenCase> rank1_and_arthur_cases() {
  std::vector<GoldenCase> out;
  out.push_back({"rank1-c", "c(s_alpha, s) = xi(s)/xi(1+s)", "SL(2) constant term", [] {
                   const RootSystem rs(CartanSpec::from_label("A1"));
                   return compare(xi_ratio(0, 1), build_c(rs, rs.weyl(1)));
                 }});
  out.push_back({"rank1-limit", "c(s_alpha, s) at s = 0", "SL(2), c(0) = -1", [] {
                   const RootSystem rs(CartanSpec::from_label("A1"));
                   const auto lim = xi_limit_along_line({build_c(rs, rs.weyl(1))}, WeightVector{0},
                                                        WeightVector{1});
                   return GoldenOutcome{lim.constant == SymPoly(Rational(-1)), "-1", lim.constant.str()};
                 }});
  out.push_back({"a1-q", "Q(s) for the SL(2) Borel", "SL(2) pole predictor", [] {
                   return q_case("A1", 0, rat1(1, {{lin(-1, 1), 1}, {lin(0, 1), -1}}));
                 }});
  out.push_back({"sl3-q", "Q(s) for the (2,1) parabolic of SL(3)", "SL(3) pole predictor", [] {
                   return q_case("A2", 1,
                                 rat1(1, {{lin(Rational(-3, 2), 1), 1}, {lin(Rational(1, 2), 1), -1}}));
                 }});
  out.push_back({"cg-v1v1", "V_1 x V_1 = V_1", "Clebsch-Gordan", [] {
                   const auto m = clebsch_gordan(1, 1);
                   return GoldenOutcome{m == SL2Multiset{{1, 1}}, "V_1", sl2_str(m)};
                 }});
  out.push_back({"gln-cuspidal-pair", "matched cuspidal pair gives (x-1)/x", "GL(n) specialization", [] {
                   const SpehDatum speh{{{1, 1, "t"}, {1, 1, "t"}}};
                   return compare(FactoredRational::normalize(
                                      1, {{LinearForm(-1, {1, -1}), 1}, {LinearForm(0, {1, -1}), -1}}),
                                  d_gln(speh));
                 }});
  out.push_back({"gln-unmatched", "distinct cuspidal classes give 1", "GL(n) specialization", [] {
                   const SpehDatum speh{{{1, 1, "t1"}, {1, 1, "t2"}}};
                   return compare(FactoredRational(), d_gln(speh));
                 }});
  return out;
}

std::vector<GoldenCase> run_cases() {
  std::vector<GoldenCase> out;
  out.push_back({"run-deform-g2", "deform on G2 with defaults", "G2, discrete support",
                 [] { return run_support_case("G2", {"(-1, 1)", "(1, 0)", "(1, 1)"}); }});
  out.push_back({"run-deform-a1", "deform on A1 with defaults", "SL(2), residue at rho",
                 [] { return run_support_case("A1", {"(1)"}); }});
  out.push_back({"run-poles-gln", "poles-gln on a matched pair", "GL(n) specialization", [] {
                   const Json speh = Json::parse(
                       R"({"blocks": [{"a": 1, "d": 1, "class": "t"}, {"a": 1, "d": 1, "class": "t"}]})");
                   const RunResult r = run_json(Json{{"command", "poles-gln"}, {"speh", speh}});
                   const std::string text =
                       r.exit_code == 0 ? r.report["d"]["text"].get<std::string>() : "exit " + std::to_string(r.exit_code);
                   return GoldenOutcome{text == "(s1-s2-1)/(s1-s2)", "(s1-s2-1)/(s1-s2)", text};
                 }});
  return out;
}

}  // namespace

std::vector<GoldenCase> reference_cases() {
  std::vector<GoldenCase> out;
  for (auto&& part : {g2_cases(), sl3_cases(), rank1_and_arthur_cases(), run_cases()})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

GoldenSummary run_golden(const std::vector<GoldenCase>& cases) {
  GoldenSummary summary;
  for (const auto& c : cases) {
    GoldenRow row{c.id, c.anchor, "", "", false, ""};
    try {
      const GoldenOutcome o = c.run();
      row.expected = o.expected;
      row.computed = o.computed;
      row.pass = o.pass;
    } catch (const std::exception& e) {
      row.error = e.what();
      row.computed = "error: " + row.error;
    }
    summary.pass = summary.pass && row.pass;
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

std::string golden_table(const GoldenSummary& summary) {
  std::size_t wid = 4, wexp = 8;
  for (const auto& r : summary.rows) {
    wid = std::max(wid, r.id.size());
    wexp = std::max(wexp, std::min<std::size_t>(r.expected.size(), 48));
  }
  std::ostringstream out;
  out << std::left << std::setw(wid + 2) << "case" << std::setw(wexp + 2) << "expected"
      << "computed | status\n";
  std::size_t passed = 0;
  for (const auto& r : summary.rows) {
    out << std::setw(wid + 2) << r.id << std::setw(wexp + 2) << r.expected << r.computed << " | "
        << (r.pass ? "PASS" : "FAIL") << "\n";
    passed += r.pass ? 1 : 0;
  }
  out << passed << "/" << summary.rows.size() << " cases passed\n";
  return out.str();
}

}  // namespace eisenres
