"""Exact residue calculus for Eisenstein series.

Every call returns the report as a dict; rationals are strings "p/q".
"""

import json

from ._eisenres import run_json as _run_json, schema_version

__all__ = ["EngineError", "ConfigError", "run", "deform", "cfun_check", "poles_deg",
           "poles_gln", "verify_paper", "schema_version"]


class EngineError(RuntimeError):
    def __init__(self, report):
        super().__init__(report.get("error", {}).get("message", report.get("status")))
        self.report = report


class ConfigError(EngineError, ValueError):
    pass


def run(config, check=True, with_text=False):
    code, report, text, svg = _run_json(json.dumps(config))
    report = json.loads(report)
    if check and code == 2:
        raise ConfigError(report)
    if check and code == 1 and "error" in report:
        raise EngineError(report)
    report["exit_code"] = code
    if with_text:
        report["text"] = text
        if svg:
            report["svg_markup"] = svg
    return report


def deform(group, sigma0=None, tangents=None, audit_sigma0=None, svg=False):
    cfg = {"command": "deform", "group": group}
    if sigma0 is not None:
        cfg["sigma0"] = [str(x) for x in sigma0]
    if tangents is not None:
        cfg["tangents"] = [[str(x) for x in t] for t in tangents]
    if audit_sigma0 is not None:
        cfg["audit_sigma0"] = [[str(x) for x in s] for s in audit_sigma0]
    if svg:
        cfg["svg"] = "-"
    return run(cfg, with_text=svg)


def cfun_check(group):
    return run({"command": "cfun-check", "group": group})


def poles_deg(group, parabolic, kappa="principal"):
    return run({"command": "poles-deg", "group": group, "parabolic": parabolic, "kappa": kappa})


def poles_gln(blocks):
    return run({"command": "poles-gln", "speh": {"blocks": blocks}})


def verify_paper(select=None):
    cfg = {"command": "verify-paper"}
    if select is not None:
        cfg["select"] = list(select)
    return run(cfg)
