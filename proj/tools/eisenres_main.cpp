// eisenres: command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eisenres/cli_run.hpp"

using eisenres::ConfigError;
using eisenres::Json;

namespace {

Json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

struct Common {
  std::string out;
  std::string text;
  std::string svg;
  bool json = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "write the JSON report here");
  cmd->add_option("--text", c.text, "write the text report here");
  cmd->add_flag("--json", c.json, "print the JSON report instead of text");
}

int finish(Json cfg_json, const Common& c) {
  if (!c.out.empty()) cfg_json["out_json"] = c.out;
  if (!c.text.empty()) cfg_json["out_text"] = c.text;
  if (!c.svg.empty()) cfg_json["svg"] = c.svg;
  eisenres::RunConfig cfg;
  eisenres::RunResult result;
  try {
    cfg = eisenres::parse_run_config(cfg_json);
    result = eisenres::run(cfg);
  } catch (const ConfigError&) {
    result = eisenres::run_json(cfg_json);
  }
  try {
    eisenres::write_outputs(cfg, result);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  if (c.json)
    std::cout << result.report.dump(2) << "\n";
  else
    (result.exit_code == 0 ? std::cout : std::cerr) << result.text;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact residue calculus for Eisenstein series of split rank-2 groups"};
  app.require_subcommand(1);
  Common common;

  std::string config_path;
  auto* deform = app.add_subcommand("deform", "two-stage contour deformation");
  deform->add_option("--config", config_path, "JSON config with group, sigma0, tangents, audit_sigma0")
      ->required();
  deform->add_option("--svg", common.svg, "write the deformation figure here");
  add_common(deform, common);

  std::string group;
  auto* cfun = app.add_subcommand("cfun-check", "c-function identities");
  cfun->add_option("--group", group, "A1, A2, B2, G2, A1xA1 or A<n>")->required();
  add_common(cfun, common);

  std::string parabolic, kappa = "principal";
  auto* deg = app.add_subcommand("poles-deg", "pole predictor of a maximal parabolic");
  deg->add_option("--group", group, "root system")->required();
  deg->add_option("--parabolic", parabolic, "simple root excluded from the Levi")->required();
  deg->add_option("--kappa", kappa, "\"principal\" or a JSON file with {\"h\": [...]}");
  add_common(deg, common);

  std::string speh_path;
  auto* gln = app.add_subcommand("poles-gln", "D_P for a GL(n) Speh datum");
  gln->add_option("--speh", speh_path, "JSON file with {\"blocks\": [...]}")->required();
  add_common(gln, common);

  std::vector<std::string> select;
  bool empty = false;
  auto* verify = app.add_subcommand("verify-paper", "check every reference value");
  verify->add_option("--select", select, "run only these case ids");
  verify->add_flag("--empty", empty, "run the empty suite");
  add_common(verify, common);

  auto* run = app.add_subcommand("run", "run a full RunConfig");
  run->add_option("--config", config_path, "JSON RunConfig")->required();
  run->add_option("--svg", common.svg, "write the deformation figure here");
  add_common(run, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Json cfg;
    if (deform->parsed()) {
      cfg = load_json(config_path);
      if (!cfg.is_object()) throw ConfigError("config must be a JSON object");
      if (cfg.contains("command") && cfg["command"] != "deform")
        throw ConfigError("config command is not \"deform\"", "/command");
      cfg["command"] = "deform";
    } else if (cfun->parsed()) {
      cfg = {{"command", "cfun-check"}, {"group", group}};
    } else if (deg->parsed()) {
      cfg = {{"command", "poles-deg"}, {"group", group}, {"parabolic", parabolic}};
      cfg["kappa"] = kappa == "principal" ? Json("principal") : load_json(kappa);
    } else if (gln->parsed()) {
      Json speh = load_json(speh_path);
      if (speh.is_object() && speh.contains("speh")) speh = Json(speh["speh"]);
      cfg = {{"command", "poles-gln"}, {"speh", speh}};
    } else if (verify->parsed()) {
      cfg = {{"command", "verify-paper"}, {"select", select}, {"empty_suite", empty}};
    } else {
      cfg = load_json(config_path);
    }
    return finish(std::move(cfg), common);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}
