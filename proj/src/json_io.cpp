#include "eisenres/json_io.hpp"

namespace eisenres {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json to_json(const WeightVector& v) { return to_json(v.coords()); }
Json to_json(const CorootVector& v) { return to_json(v.coords()); }

Json to_json(const LinearForm& f) {
  Json out = Json::array();
  out.push_back(to_string(f.constant()));
  for (const auto& c : f.coeffs()) out.push_back(to_string(c));
  return out;
}

Json to_json(const FactoredRational& f) {
  Json factors = Json::array();
  for (const auto& [form, e] : f.factors()) factors.push_back({{"form", to_json(form)}, {"exp", e}});
  return {{"scalar", to_string(f.scalar())}, {"factors", std::move(factors)}};
}

Json to_json(const XiProduct& x) {
  Json xi = Json::array();
  for (const auto& [form, e] : x.xi_factors()) xi.push_back({{"form", to_json(form)}, {"exp", e}});
  return {{"rat", to_json(x.rat())}, {"xi", std::move(xi)}};
}

Json to_json(const SymPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json symbols = Json::array();
    for (const auto& [s, e] : m) {
      Json sym;
      if (s.kind == XiSymbol::Kind::PoleCoeff) {
        sym = {{"kind", "pole_coeff"}, {"k", s.order}};
      } else {
        sym = {{"kind", "xi"}, {"point", to_string(s.point)}, {"derivative", s.order}};
      }
      sym["exp"] = e;
      symbols.push_back(std::move(sym));
    }
    terms.push_back({{"coeff", to_string(c)}, {"symbols", std::move(symbols)}});
  }
  return {{"terms", std::move(terms)}, {"text", p.str()}};
}

Json to_json(const LaurentData& d) {
  Json out = {{"z", to_string(d.point)}, {"order", d.order}, {"lead", to_string(d.lead)}};
  if (d.res_known) out["res"] = to_string(d.res);
  return out;
}

Json to_json(const SL2Multiset& m) {
  Json out = Json::object();
  for (const auto& [l, mult] : m) out[std::to_string(l)] = mult;
  return out;
}

Rational rational_from_json(const Json& j, const std::string& pointer) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ConfigError& e) {
      throw ConfigError(e.what(), pointer);
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ConfigError("expected a rational given as a string \"p/q\"", pointer);
}

RatVec ratvec_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw ConfigError("expected an array of rationals", pointer);
  RatVec out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rational_from_json(j[i], pointer + "/" + std::to_string(i)));
  return out;
}

WeightVector weight_from_json(const Json& j, std::size_t rank, const std::string& pointer) {
  RatVec v = ratvec_from_json(j, pointer);
  if (v.size() != rank)
    throw ConfigError("expected " + std::to_string(rank) + " coordinates, got " +
                          std::to_string(v.size()),
                      pointer);
  return WeightVector(std::move(v));
}

LinearForm form_from_json(const Json& j, const std::string& pointer) {
  RatVec v = ratvec_from_json(j, pointer);
  if (v.empty()) throw ConfigError("a linear form needs at least its constant", pointer);
  Rational c = v.front();
  v.erase(v.begin());
  return LinearForm(std::move(c), std::move(v));
}

namespace {

const Json& require(const Json& j, const char* key, const std::string& pointer) {
  if (!j.is_object()) throw ConfigError("expected an object", pointer);
  const auto it = j.find(key);
  if (it == j.end()) throw ConfigError(std::string("missing key \"") + key + "\"", pointer);
  return *it;
}

int int_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) throw ConfigError("expected an integer", pointer);
  return j.get<int>();
}

std::vector<std::pair<LinearForm, int>> factor_list(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw ConfigError("expected an array of factors", pointer);
  std::vector<std::pair<LinearForm, int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = pointer + "/" + std::to_string(i);
    out.emplace_back(form_from_json(require(j[i], "form", p), p + "/form"),
                     int_from_json(require(j[i], "exp", p), p + "/exp"));
  }
  return out;
}

}  // namespace

FactoredRational factored_from_json(const Json& j, const std::string& pointer) {
  return FactoredRational::normalize(
      rational_from_json(require(j, "scalar", pointer), pointer + "/scalar"),
      factor_list(require(j, "factors", pointer), pointer + "/factors"));
}

XiProduct xi_product_from_json(const Json& j, const std::string& pointer) {
  XiProduct x(factored_from_json(require(j, "rat", pointer), pointer + "/rat"));
  for (const auto& [form, e] : factor_list(require(j, "xi", pointer), pointer + "/xi"))
    x.mul_xi(form, e);
  return x;
}

SpehDatum speh_from_json(const Json& j_in, const std::string& pointer) {
  const Json& blocks = require(j_in, "blocks", pointer);
  const std::string bp = pointer + "/blocks";
  if (!blocks.is_array()) throw ConfigError("\"blocks\" must be an array", bp);
  SpehDatum out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string p = bp + "/" + std::to_string(i);
    SpehBlock b;
    b.a = int_from_json(require(blocks[i], "a", p), p + "/a");
    b.d = blocks[i].contains("d") ? int_from_json(blocks[i]["d"], p + "/d") : 1;
    const Json& c = require(blocks[i], "class", p);
    if (!c.is_string()) throw ConfigError("\"class\" must be a string", p + "/class");
    b.class_id = c.get<std::string>();
    if (b.a < 1) throw ConfigError("a must be >= 1", p + "/a");
    if (b.d < 1) throw ConfigError("d must be >= 1", p + "/d");
    out.blocks.push_back(std::move(b));
  }
  return out;
}

KappaMarking kappa_from_json(const Json& j_in, const RootSystem& rs, const LeviDatum& levi,
                             const std::string& pointer) {
  const Json* j = &j_in;
  std::string ptr = pointer;
  if (j->is_object() && j->contains("kappa")) {
    j = &(*j)["kappa"];
    ptr += "/kappa";
  }
  if (j->is_string()) {
    if (j->get<std::string>() == "principal") return principal_marking(levi);
    throw ConfigError("kappa must be \"principal\" or {\"h\": [...]}", ptr);
  }
  return user_marking(rs, levi, weight_from_json(require(*j, "h", ptr), rs.rank(), ptr + "/h"));
}

Json report_to_json(const SpectralReport& report, const RootSystem& rs) {
  Json out;
  out["group"] = report.group;
  out["sigma0"] = to_json(report.sigma0);
  Json tangents = Json::array();
  for (const auto& t : report.tangents) tangents.push_back(to_json(t));
  out["tangents"] = std::move(tangents);
  out["measure_convention"] = report.measure_convention;
  out["continuous_2d"] = {{"description", report.continuous_2d}};

  const std::vector<std::string> names{"z"};
  Json c1 = Json::array();
  for (const auto& h : report.continuous_1d) {
    const auto& r = rs.root(h.root);
    Json events = Json::array();
    for (const auto& e : h.events)
      events.push_back({{"location", to_json(e.location)}, {"laurent", to_json(e.laurent)}});
    Json quiet = Json::array();
    for (const auto& e : h.quiet_points)
      quiet.push_back({{"location", to_json(e.location)}, {"laurent", to_json(e.laurent)}});
    Json boundary = Json::array();
    for (const auto& p : h.boundary_poles)
      boundary.push_back({{"z", to_string(p.point)}, {"order", p.order}});
    c1.push_back({{"root_index", h.root},
                  {"root", r.label},
                  {"alias", r.alias},
                  {"coroot", to_json(r.coroot)},
                  {"base", to_json(h.base)},
                  {"direction", to_json(h.direction)},
                  {"residue", to_json(h.residue)},
                  {"residue_text", h.residue.str(names)},
                  {"crossing",
                   {{"point", to_json(h.crossing.point)},
                    {"t", to_string(h.crossing.t)},
                    {"z", to_string(h.crossing.z)}}},
                  {"orientation", to_string(h.orientation)},
                  {"events", std::move(events)},
                  {"quiet_points", std::move(quiet)},
                  {"boundary_poles", std::move(boundary)}});
  }
  out["continuous_1d"] = std::move(c1);

  Json discrete = Json::array();
  for (const auto& t : report.discrete) {
    Json dirs = Json::array();
    for (const auto& d : t.derivative_directions) dirs.push_back(to_json(d));
    discrete.push_back({{"location", to_json(t.location)},
                        {"derivative_directions", std::move(dirs)},
                        {"coefficient", to_string(t.coefficient)},
                        {"estar_tag", t.estar_tag},
                        {"subtag", t.subtag},
                        {"source_root_index", t.source_root},
                        {"source_root", rs.root(t.source_root).label},
                        {"pole_order", t.pole_order}});
  }
  out["discrete"] = std::move(discrete);

  Json support = Json::array();
  for (const auto& s : report.support) support.push_back(to_json(s));
  out["support"] = std::move(support);

  Json collapsed = Json::array();
  for (const auto& s : report.support) {
    const auto c = collapse_derivatives(report, rs, s);
    collapsed.push_back({{"location", to_json(c.location)},
                         {"estar_tag", c.estar_tag},
                         {"plain", to_string(c.plain)},
                         {"derivative", to_json(c.derivative)},
                         {"derivative_root_coords", to_json(c.derivative_root_coords)},
                         {"merged_terms", c.merged_terms}});
  }
  out["collapsed"] = std::move(collapsed);
  return out;
}

SpectralReport report_from_json(const Json& j) {
  SpectralReport r;
  const Json& g = require(j, "group", "");
  if (!g.is_string()) throw ConfigError("\"group\" must be a string", "/group");
  r.group = g.get<std::string>();
  r.sigma0 = WeightVector(ratvec_from_json(require(j, "sigma0", ""), "/sigma0"));
  const Json& tangents = require(j, "tangents", "");
  for (std::size_t i = 0; i < tangents.size(); ++i)
    r.tangents.emplace_back(ratvec_from_json(tangents[i], "/tangents/" + std::to_string(i)));
  r.measure_convention = require(j, "measure_convention", "").get<std::string>();
  r.continuous_2d = require(require(j, "continuous_2d", ""), "description", "/continuous_2d")
                        .get<std::string>();

  auto laurent = [](const Json& l, const std::string& p) {
    LaurentData d;
    d.point = rational_from_json(require(l, "z", p), p + "/z");
    d.order = int_from_json(require(l, "order", p), p + "/order");
    d.lead = rational_from_json(require(l, "lead", p), p + "/lead");
    d.res_known = l.contains("res");
    d.res = d.res_known ? rational_from_json(l["res"], p + "/res") : Rational(0);
    return d;
  };
  const Json& c1 = require(j, "continuous_1d", "");
  for (std::size_t i = 0; i < c1.size(); ++i) {
    const std::string p = "/continuous_1d/" + std::to_string(i);
    const Json& e = c1[i];
    HyperplaneData h;
    h.root = require(e, "root_index", p).get<std::size_t>();
    h.base = WeightVector(ratvec_from_json(require(e, "base", p), p + "/base"));
    h.direction = WeightVector(ratvec_from_json(require(e, "direction", p), p + "/direction"));
    h.residue = factored_from_json(require(e, "residue", p), p + "/residue");
    const Json& c = require(e, "crossing", p);
    h.crossing.root = h.root;
    h.crossing.point = WeightVector(ratvec_from_json(require(c, "point", p), p + "/crossing/point"));
    h.crossing.t = rational_from_json(require(c, "t", p), p + "/crossing/t");
    h.crossing.z = rational_from_json(require(c, "z", p), p + "/crossing/z");
    h.orientation = rational_from_json(require(e, "orientation", p), p + "/orientation");
    auto points = [&](const char* key) {
      std::vector<PointEvent> out;
      const Json& arr = require(e, key, p);
      for (std::size_t k = 0; k < arr.size(); ++k) {
        const std::string q = p + "/" + key + "/" + std::to_string(k);
        out.push_back({h.root,
                       WeightVector(ratvec_from_json(require(arr[k], "location", q), q + "/location")),
                       laurent(require(arr[k], "laurent", q), q + "/laurent")});
      }
      return out;
    };
    h.events = points("events");
    h.quiet_points = points("quiet_points");
    const Json& b = require(e, "boundary_poles", p);
    for (std::size_t k = 0; k < b.size(); ++k) {
      const std::string q = p + "/boundary_poles/" + std::to_string(k);
      h.boundary_poles.push_back({rational_from_json(require(b[k], "z", q), q + "/z"),
                                  int_from_json(require(b[k], "order", q), q + "/order")});
    }
    r.continuous_1d.push_back(std::move(h));
  }

  const Json& d = require(j, "discrete", "");
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::string p = "/discrete/" + std::to_string(i);
    ContributionTerm t;
    t.location = WeightVector(ratvec_from_json(require(d[i], "location", p), p + "/location"));
    const Json& dirs = require(d[i], "derivative_directions", p);
    for (std::size_t k = 0; k < dirs.size(); ++k)
      t.derivative_directions.emplace_back(
          ratvec_from_json(dirs[k], p + "/derivative_directions/" + std::to_string(k)));
    t.coefficient = rational_from_json(require(d[i], "coefficient", p), p + "/coefficient");
    t.estar_tag = require(d[i], "estar_tag", p).get<std::string>();
    t.subtag = require(d[i], "subtag", p).get<std::string>();
    t.source_root = require(d[i], "source_root_index", p).get<std::size_t>();
    t.pole_order = int_from_json(require(d[i], "pole_order", p), p + "/pole_order");
    r.discrete.push_back(std::move(t));
  }
  const Json& s = require(j, "support", "");
  for (std::size_t i = 0; i < s.size(); ++i)
    r.support.emplace_back(ratvec_from_json(s[i], "/support/" + std::to_string(i)));
  return r;
}

Json audit_to_json(const AuditResult& audit, const RootSystem& rs) {
  (void)rs;
  Json runs = Json::array();
  for (std::size_t k = 0; k < audit.totals.size(); ++k) {
    Json total = Json::array();
    for (const auto& [loc, v] : audit.totals[k])
      total.push_back({{"location", to_json(loc)},
                       {"plain", to_string(v.first)},
                       {"derivative", to_json(v.second)}});
    runs.push_back({{"sigma0", to_json(audit.sigma0s[k])}, {"total", std::move(total)}});
  }
  return {{"pass", audit.pass}, {"runs", std::move(runs)}, {"diffs", audit.diffs}};
}

}  // namespace eisenres
