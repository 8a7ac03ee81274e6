#include "eisenres/cli_run.hpp"

#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "eisenres/golden.hpp"
#include "eisenres/svg.hpp"

namespace eisenres {

namespace {

const std::set<std::string> kCommands{"deform", "cfun-check", "poles-deg", "poles-gln",
                                      "verify-paper"};
const std::set<std::string> kKeys{"command",   "group", "sigma0", "tangents",    "audit_sigma0",
                                  "parabolic", "kappa", "speh",   "select",      "empty_suite",
                                  "out_json",  "out_text", "svg"};

std::string string_at(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_string()) throw ConfigError(std::string("\"") + key + "\" must be a string", std::string("/") + key);
  return v.get<std::string>();
}

std::vector<RatVec> ratvec_list(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw ConfigError("expected an array of vectors", pointer);
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(ratvec_from_json(j[i], pointer + "/" + std::to_string(i)));
  return out;
}

std::shared_ptr<const RootSystem> make_group(const std::string& label) {
  try {
    return std::make_shared<const RootSystem>(CartanSpec::from_label(label));
  } catch (const ConfigError& e) {
    throw ConfigError(e.what(), "/group");
  }
}

Json base_report(const RunConfig& cfg) {
  return Json{{"schema_version", kSchemaVersion}, {"command", cfg.command}, {"status", "ok"}};
}

std::vector<std::string> variable_names(std::size_t n, const std::string& stem) {
  if (n == 1) return {stem};
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

Json factored_json(const FactoredRational& f, const std::vector<std::string>& names) {
  Json out = to_json(f);
  out["text"] = f.str(names);
  return out;
}

Json xi_json(const XiProduct& x, const std::vector<std::string>& names) {
  Json out = to_json(x);
  out["text"] = x.str(names);
  return out;
}

std::string root_name(const RootSystem& rs, std::size_t i) {
  const auto& r = rs.root(i);
  return r.alias.empty() ? r.label : r.label + " (" + r.alias + ")";
}

// deform

RunResult run_deform(const RunConfig& cfg) {
  const auto rs = make_group(cfg.group);
  DeformationConfig dc = default_config(rs);
  if (cfg.sigma0) dc.sigma0 = WeightVector(*cfg.sigma0);
  if (cfg.tangents) {
    dc.tangents.clear();
    for (const auto& t : *cfg.tangents) dc.tangents.emplace_back(t);
  }
  validate_config(dc);
  const SpectralReport report = discrete_functional(dc);

  RunResult out;
  out.report = base_report(cfg);
  const Json body = report_to_json(report, *rs);
  for (const auto& [k, v] : body.items()) out.report[k] = v;

  std::ostringstream text;
  text << "group " << report.group << "\n"
       << "sigma0 " << report.sigma0.str() << "\n"
       << "continuous (2d): " << report.continuous_2d << "\n"
       << "measure: " << report.measure_convention << "\n"
       << "continuous (1d):\n";
  for (const auto& h : report.continuous_1d) {
    text << "  S_" << root_name(*rs, h.root) << ": base " << h.base.str() << ", direction "
         << h.direction.str() << ", crossing z = " << to_string(h.crossing.z) << " at "
         << h.crossing.point.str() << ", orientation " << to_string(h.orientation) << "\n"
         << "    Res D_B = " << h.residue.str({"z"}) << "\n";
    for (const auto& e : h.events)
      text << "    pole of order " << e.laurent.order << " at " << e.location.str() << " (z = "
           << to_string(e.laurent.point) << ")\n";
    for (const auto& q : h.quiet_points)
      text << "    regular at " << q.location.str() << ": no contribution\n";
    for (const auto& b : h.boundary_poles)
      text << "    pole of order " << b.order << " at the base point, left on the final contour\n";
  }
  text << "discrete:\n";
  for (const auto& t : report.discrete) {
    text << "  " << to_string(t.coefficient) << " * " << t.estar_tag << " * ";
    if (t.derivative_directions.empty())
      text << "eta^" << t.location.str();
    else
      text << "d_" << t.derivative_directions.front().str() << " eta^" << t.location.str();
    text << "   [" << t.subtag << ", S_" << rs->root(t.source_root).label << "]\n";
  }
  text << "support:";
  for (const auto& s : report.support) text << " " << s.str();
  text << "\n";
  if (rs->rank() == 2) {
    text << "collapsed:\n";
    for (const auto& s : report.support) {
      const auto c = collapse_derivatives(report, *rs, s);
      text << "  " << c.estar_tag << ": plain " << to_string(c.plain) << ", derivative "
           << c.derivative.str() << " = " << to_string(c.derivative_root_coords)
           << " in simple roots\n";
    }
  }

  if (!cfg.audit_sigma0.empty()) {
    std::vector<WeightVector> alts;
    for (const auto& s : cfg.audit_sigma0) alts.emplace_back(s);
    const AuditResult audit = path_independence_audit(dc, alts);
    out.report["audit"] = audit_to_json(audit, *rs);
    text << "path independence over " << audit.sigma0s.size() << " start points: "
         << (audit.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& d : audit.diffs) text << "  " << d << "\n";
    if (!audit.pass) {
      out.report["status"] = "audit_failed";
      out.exit_code = 1;
    }
  }
  if (!cfg.svg.empty()) out.svg = render_svg(report, *rs);
  out.text = text.str();
  return out;
}

// cfun-check

RunResult run_cfun_check(const RunConfig& cfg) {
  const auto rs = make_group(cfg.group);
  if (!rs->weyl_enumerated())
    throw ConfigError("cfun-check needs an enumerated Weyl group (rank <= " +
                          std::to_string(RootSystem::kMaxWeylRank) + ")",
                      "/group");
  const auto& ws = rs->weyl_elements();
  const std::vector<std::string> names = variable_names(rs->rank(), "s");
  RunResult out;
  out.report = base_report(cfg);
  out.report["group"] = rs->label();
  std::ostringstream text;
  bool ok = true;

  Json cs = Json::array();
  std::size_t bar_pass = 0;
  for (const auto& w : ws) {
    const XiProduct c = build_c(*rs, w);
    const bool bar_ok = bar_involution(c) == c.inverse();
    bar_pass += bar_ok ? 1 : 0;
    cs.push_back({{"w", w.word_string()}, {"c", xi_json(c, names)}, {"bar_is_inverse", bar_ok}});
  }
  out.report["c_functions"] = std::move(cs);

  std::size_t pairs = 0, passed = 0;
  Json failures = Json::array();
  for (std::size_t a = 0; a < ws.size(); ++a)
    for (std::size_t b = 0; b < ws.size(); ++b) {
      ++pairs;
      const auto r = cocycle_check(*rs, a, b);
      if (r.pass) {
        ++passed;
      } else if (failures.size() < 8) {
        failures.push_back({{"w", ws[a].word_string()},
                            {"w_prime", ws[b].word_string()},
                            {"witness", xi_json(r.witness, names)}});
      }
    }
  out.report["cocycle"] = {{"pairs", pairs}, {"passed", passed}, {"failures", std::move(failures)}};
  out.report["bar"] = {{"elements", ws.size()}, {"passed", bar_pass}};
  ok = ok && passed == pairs && bar_pass == ws.size();
  text << "group " << rs->label() << ", |W| = " << ws.size() << "\n"
       << "cocycle identity: " << passed << "/" << pairs << " pairs\n"
       << "bar(c(w)) = c(w)^-1 on the imaginary axis: " << bar_pass << "/" << ws.size() << "\n"
       << "c(w0) = " << build_c(*rs, ws.back()).str(names) << "\n";

  if (rs->label() == "A2") {
    std::set<std::string> ids{"sl3-n-matrix", "sl3-rank-one", "sl3-bar", "sl3-cancellation",
                              "sl3-limit-rho"};
    std::vector<GoldenCase> cases;
    for (auto& c : reference_cases())
      if (ids.count(c.id)) cases.push_back(std::move(c));
    const GoldenSummary summary = run_golden(cases);
    const ConstantTermMatrix m = n_matrix(*rs, a2_matrix_tangents());
    Json rows = Json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < 3; ++j) {
        Json e = xi_json(m.entries[i][j], {"s"});
        e["sigma"] = ws[m.sigma[i][j]].word_string();
        e["cancelled"] = m.reports[i][j].cancelled.size();
        row.push_back(std::move(e));
      }
      rows.push_back(std::move(row));
    }
    out.report["n_matrix"] = std::move(rows);
    Json checks = Json::array();
    for (const auto& r : summary.rows)
      checks.push_back({{"id", r.id}, {"expected", r.expected}, {"computed", r.computed}, {"pass", r.pass}});
    out.report["checks"] = std::move(checks);
    ok = ok && summary.pass;
    text << "n-matrix:\n";
    for (std::size_t i = 0; i < 3; ++i) {
      text << " ";
      for (std::size_t j = 0; j < 3; ++j) text << " | " << m.entries[i][j].str({"s"});
      text << "\n";
    }
    text << golden_table(summary);
  }

  if (!ok) {
    out.report["status"] = "check_failed";
    out.exit_code = 1;
  }
  text << (ok ? "all checks passed\n" : "some checks FAILED\n");
  out.text = text.str();
  return out;
}

// poles-deg

std::vector<Rational> nonnegative_support(const FactoredRational& f, int sign) {
  std::vector<Rational> out;
  for (const auto& p : divisor(f))
    if (p.point >= 0 && (sign > 0 ? p.order > 0 : p.order < 0)) out.push_back(p.point);
  return out;
}

Json points_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

RunResult run_poles_deg(const RunConfig& cfg) {
  const auto rs = make_group(cfg.group);
  std::size_t excluded = 0;
  try {
    excluded = rs->simple_index(cfg.parabolic);
  } catch (const ConfigError& e) {
    throw ConfigError(e.what(), "/parabolic");
  }
  const LeviDatum levi = levi_datum(*rs, excluded);
  const KappaMarking kappa = kappa_from_json(cfg.kappa, *rs, levi, "/kappa");
  const auto levels = level_decomposition(*rs, levi, kappa);
  const FactoredRational q = q_from_levels(levels);

  RunResult out;
  out.report = base_report(cfg);
  std::ostringstream text;
  Json levi_simple = Json::array();
  for (const auto i : levi.parabolic_subset) levi_simple.push_back(rs->simple_names()[i]);
  out.report["group"] = rs->label();
  out.report["parabolic"] = {{"excluded_simple", rs->simple_names()[excluded]},
                             {"levi_simple_roots", std::move(levi_simple)},
                             {"varpi_P", to_json(rs->fundamental_weight(excluded))}};
  out.report["kappa"] = {{"principal", kappa.principal}, {"h", to_json(kappa.h)}};
  const auto weights = kappa_weights(*rs, levi, kappa);
  Json lv = Json::array();
  text << "group " << rs->label() << ", parabolic with " << rs->simple_names()[excluded]
       << " excluded from the Levi, kappa " << (kappa.principal ? "principal" : "user")
       << " h = " << kappa.h.str() << "\n";
  for (const auto& [j, m] : levels) {
    Json roots = Json::array();
    for (const auto& n : levi.nilradical_coroots)
      if (n.level == j) roots.push_back(rs->root(n.root).label);
    lv.push_back({{"level", j},
                  {"roots", std::move(roots)},
                  {"weights", weights.at(j)},
                  {"decomposition", to_json(m)},
                  {"text", sl2_str(m)}});
    text << "  level " << j << ": r_" << j << " = " << sl2_str(m) << "\n";
  }
  out.report["levels"] = std::move(lv);
  out.report["q"] = factored_json(q, {"s"});
  text << "Q(s) = " << q.str({"s"}) << "\n";

  if (rs->rank() <= 2) {
    const FactoredRational res = parabolic_residue(*rs, levi);
    const FactoredRational product = q * res;
    const FactoredRational inv = q.inverse();
    const bool poles = nonnegative_support(inv, 1) == nonnegative_support(res, 1);
    const bool zeros = nonnegative_support(inv, -1) == nonnegative_support(res, -1);
    out.report["residue"] = factored_json(res, {"s"});
    out.report["q_times_residue"] = factored_json(product, {"s"});
    out.report["consistency"] = {{"poles_of_inverse_q", points_json(nonnegative_support(inv, 1))},
                                 {"poles_of_residue", points_json(nonnegative_support(res, 1))},
                                 {"zeros_of_inverse_q", points_json(nonnegative_support(inv, -1))},
                                 {"zeros_of_residue", points_json(nonnegative_support(res, -1))},
                                 {"agree_on_nonnegative_reals", poles && zeros}};
    text << "Res D_B = " << res.str({"s"}) << "\n"
         << "Q * Res = " << product.str({"s"}) << "\n"
         << "pole/zero data of 1/Q and Res on Re s >= 0: " << (poles && zeros ? "agree" : "differ")
         << "\n";
  }
  out.text = text.str();
  return out;
}

// poles-gln

RunResult run_poles_gln(const RunConfig& cfg) {
  const SpehDatum speh = speh_from_json(cfg.speh, "/speh");
  if (speh.blocks.empty()) throw ConfigError("speh datum needs at least one block", "/speh/blocks");
  const FactoredRational d = d_gln(speh);
  const auto names = variable_names(speh.blocks.size(), "s");
  RunResult out;
  out.report = base_report(cfg);
  out.report["n"] = speh.n();
  std::ostringstream text;
  text << "GL(" << speh.n() << ") with " << speh.blocks.size() << " blocks\n";
  Json pairs = Json::array();
  for (const auto& p : matched_pairs(speh)) {
    pairs.push_back({{"i", p.i + 1},
                     {"j", p.j + 1},
                     {"class", speh.blocks[p.i].class_id},
                     {"decomposition", to_json(p.decomposition)},
                     {"text", sl2_str(p.decomposition)}});
    text << "  blocks " << p.i + 1 << ", " << p.j + 1 << " (class " << speh.blocks[p.i].class_id
         << "): V_" << speh.blocks[p.i].a << " x V_" << speh.blocks[p.j].a << " = "
         << sl2_str(p.decomposition) << "\n";
  }
  out.report["matched_pairs"] = std::move(pairs);
  out.report["variables"] = names;
  out.report["d"] = factored_json(d, names);
  text << "D = " << d.str(names) << "\n";
  out.text = text.str();
  return out;
}

// verify-paper

RunResult run_verify(const RunConfig& cfg) {
  std::vector<GoldenCase> cases;
  if (!cfg.empty_suite) {
    auto all = reference_cases();
    if (cfg.select.empty()) {
      cases = std::move(all);
    } else {
      for (std::size_t k = 0; k < cfg.select.size(); ++k) {
        bool found = false;
        for (const auto& c : all)
          if (c.id == cfg.select[k]) {
            cases.push_back(c);
            found = true;
          }
        if (!found)
          throw ConfigError("unknown case id \"" + cfg.select[k] + "\"", "/select/" + std::to_string(k));
      }
    }
  }
  const GoldenSummary summary = run_golden(cases);
  RunResult out;
  out.report = base_report(cfg);
  Json rows = Json::array();
  for (const auto& r : summary.rows) {
    Json row{{"id", r.id}, {"anchor", r.anchor}, {"expected", r.expected},
             {"computed", r.computed}, {"pass", r.pass}};
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  out.report["cases"] = std::move(rows);
  out.report["pass"] = summary.pass;
  if (!summary.pass) {
    out.report["status"] = "check_failed";
    out.exit_code = 1;
  }
  out.text = golden_table(summary);
  return out;
}

RunResult failure(const RunConfig& cfg, int code, const char* status, const std::string& message,
                  const std::string& pointer) {
  RunResult out;
  out.exit_code = code;
  out.report = base_report(cfg);
  out.report["status"] = status;
  out.report["error"] = {{"message", message}};
  if (!pointer.empty()) out.report["error"]["pointer"] = pointer;
  out.text = std::string(code == 2 ? "config error: " : "error: ") + message + "\n";
  return out;
}

}  // namespace

RunConfig parse_run_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object", "");
  for (const auto& [k, v] : j.items())
    if (!kKeys.count(k)) throw ConfigError("unknown key \"" + k + "\"", "/" + k);
  RunConfig cfg;
  if (!j.contains("command")) throw ConfigError("missing key \"command\"", "");
  cfg.command = string_at(j, "command");
  if (!kCommands.count(cfg.command))
    throw ConfigError("unknown command \"" + cfg.command + "\"", "/command");
  if (j.contains("group")) cfg.group = string_at(j, "group");
  if (j.contains("sigma0")) cfg.sigma0 = ratvec_from_json(j["sigma0"], "/sigma0");
  if (j.contains("tangents")) cfg.tangents = ratvec_list(j["tangents"], "/tangents");
  if (j.contains("audit_sigma0")) cfg.audit_sigma0 = ratvec_list(j["audit_sigma0"], "/audit_sigma0");
  if (j.contains("parabolic")) cfg.parabolic = string_at(j, "parabolic");
  if (j.contains("kappa")) cfg.kappa = j["kappa"];
  if (j.contains("speh")) cfg.speh = j["speh"];
  if (j.contains("select")) {
    const Json& s = j["select"];
    if (!s.is_array()) throw ConfigError("\"select\" must be an array of case ids", "/select");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s[i].is_string()) throw ConfigError("case id must be a string", "/select/" + std::to_string(i));
      cfg.select.push_back(s[i].get<std::string>());
    }
  }
  if (j.contains("empty_suite")) {
    if (!j["empty_suite"].is_boolean()) throw ConfigError("\"empty_suite\" must be a boolean", "/empty_suite");
    cfg.empty_suite = j["empty_suite"].get<bool>();
  }
  if (j.contains("out_json")) cfg.out_json = string_at(j, "out_json");
  if (j.contains("out_text")) cfg.out_text = string_at(j, "out_text");
  if (j.contains("svg")) cfg.svg = string_at(j, "svg");

  const bool needs_group =
      cfg.command == "deform" || cfg.command == "cfun-check" || cfg.command == "poles-deg";
  if (needs_group && cfg.group.empty())
    throw ConfigError("command \"" + cfg.command + "\" needs \"group\"", "/group");
  if (cfg.command == "poles-deg" && cfg.parabolic.empty())
    throw ConfigError("command \"poles-deg\" needs \"parabolic\"", "/parabolic");
  if (cfg.command == "poles-gln" && cfg.speh.is_null())
    throw ConfigError("command \"poles-gln\" needs \"speh\"", "/speh");
  return cfg;
}

RunResult run(const RunConfig& cfg) {
  try {
    if (cfg.command == "deform") return run_deform(cfg);
    if (cfg.command == "cfun-check") return run_cfun_check(cfg);
    if (cfg.command == "poles-deg") return run_poles_deg(cfg);
    if (cfg.command == "poles-gln") return run_poles_gln(cfg);
    if (cfg.command == "verify-paper") return run_verify(cfg);
    return failure(cfg, 2, "config_error", "unknown command \"" + cfg.command + "\"", "/command");
  } catch (const ConfigError& e) {
    return failure(cfg, 2, "config_error", e.what(), e.pointer());
  } catch (const std::exception& e) {
    return failure(cfg, 1, "math_error", e.what(), "");
  }
}

RunResult run_json(const Json& j) {
  RunConfig cfg;
  try {
    cfg = parse_run_config(j);
  } catch (const ConfigError& e) {
    if (j.is_object() && j.contains("command") && j["command"].is_string())
      cfg.command = j["command"].get<std::string>();
    return failure(cfg, 2, "config_error", e.what(), e.pointer());
  }
  return run(cfg);
}

void write_outputs(const RunConfig& cfg, const RunResult& result) {
  auto write = [](const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path);
    f << content;
  };
  if (!cfg.out_json.empty()) write(cfg.out_json, result.report.dump(2) + "\n");
  if (!cfg.out_text.empty()) write(cfg.out_text, result.text);
  if (!cfg.svg.empty() && !result.svg.empty()) write(cfg.svg, result.svg);
}

}  // namespace eisenres
