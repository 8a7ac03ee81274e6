#include "eisenres/spectral.hpp"

#include <algorithm>
#include <set>

namespace eisenres {

namespace {

WeightVector primitive_tangent(const CorootVector& c) {
  RatVec v{c[1], -c[0]};
  Integer den = lcm(denominator_of(v[0]), denominator_of(v[1]));
  Integer g = gcd(numerator_of(v[0] * den), numerator_of(v[1] * den));
  Rational scale = Rational(den) / Rational(g);
  if (v[0] < 0 || (v[0] == 0 && v[1] < 0)) scale = -scale;
  return WeightVector(v) * scale;
}

Rational line_coordinate(const WeightVector& point, const WeightVector& base,
                         const WeightVector& dir) {
  const WeightVector d = point - base;
  for (std::size_t i = 0; i < dir.size(); ++i) {
    if (dir[i] == 0) continue;
    const Rational z = d[i] / dir[i];
    if (!(base + z * dir == point))
      throw MathError("point " + point.str() + " is not on the line through " + base.str());
    return z;
  }
  if (!d.is_zero()) throw MathError("point " + point.str() + " differs from the base point");
  return 0;
}

Rational orientation_factor(const CorootVector& c, const WeightVector& v, const Rational& z) {
  if (v.size() == 1) return 1;
  const WeightVector nu = c[0] != 0 ? WeightVector{Rational(1) / c[0], 0}
                                    : WeightVector{0, Rational(1) / c[1]};
  const Rational det = v[0] * nu[1] - v[1] * nu[0];
  return Rational(sign(z)) * abs(det);
}

std::optional<std::pair<std::size_t, std::size_t>> coincident_pair(const RootSystem& rs,
                                                                   const WeightVector& sigma0) {
  const auto& roots = rs.positive_roots();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (pairing(sigma0, roots[i].coroot) == pairing(sigma0, roots[j].coroot))
        return std::make_pair(i, j);
  return std::nullopt;
}

bool in_cone(const RootSystem& rs, const WeightVector& sigma0) {
  for (const auto& r : rs.positive_roots())
    if (pairing(sigma0, r.coroot) <= 1) return false;
  return true;
}

}  // namespace

WeightVector default_sigma0(const RootSystem& rs) {
  if (rs.rank() == 1) return WeightVector{2};
  if (rs.label() == "A2") return WeightVector{Rational(3, 2), Rational(5, 2)};
  if (rs.rank() == 2) return WeightVector{Rational(5, 2), Rational(7, 2)};
  throw ConfigError("contour deformation supports rank <= 2, got " + rs.label());
}

std::vector<WeightVector> default_tangents(const RootSystem& rs) {
  std::vector<WeightVector> out;
  for (const auto& r : rs.positive_roots())
    out.push_back(rs.rank() == 1 ? WeightVector{0} : primitive_tangent(r.coroot));
  if (rs.label() == "G2") out[4] = WeightVector{-1, 1};
  return out;
}

DeformationConfig default_config(std::shared_ptr<const RootSystem> rs) {
  DeformationConfig cfg;
  cfg.sigma0 = default_sigma0(*rs);
  cfg.tangents = default_tangents(*rs);
  cfg.root_system = std::move(rs);
  return cfg;
}

WeightVector suggest_sigma0(const DeformationConfig& cfg) {
  const auto& rs = *cfg.root_system;
  for (int k = 1; k < 1000; ++k) {
    WeightVector cand = cfg.sigma0;
    for (std::size_t i = 0; i < cand.size(); ++i) cand[i] += Rational(int(i) + 1, 7 * k + 3);
    if (in_cone(rs, cand) && !coincident_pair(rs, cand)) return cand;
  }
  return default_sigma0(rs);
}

void validate_config(const DeformationConfig& cfg) {
  if (!cfg.root_system) throw ConfigError("deformation config has no root system");
  const auto& rs = *cfg.root_system;
  if (rs.rank() > 2) throw ConfigError("contour deformation supports rank <= 2, got " + rs.label());
  if (cfg.sigma0.size() != rs.rank())
    throw ConfigError("sigma0 must have " + std::to_string(rs.rank()) + " coordinates", "/sigma0");
  if (cfg.tangents.size() != rs.positive_roots().size())
    throw ConfigError("expected " + std::to_string(rs.positive_roots().size()) + " tangents",
                      "/tangents");
  for (std::size_t k = 0; k < cfg.tangents.size(); ++k) {
    const auto& v = cfg.tangents[k];
    const std::string ptr = "/tangents/" + std::to_string(k);
    if (v.size() != rs.rank()) throw ConfigError("tangent has the wrong dimension", ptr);
    if (pairing(v, rs.root(k).coroot) != 0)
      throw ConfigError("tangent " + v.str() + " is not tangent to S_" + rs.root(k).label, ptr);
    if (rs.rank() == 2 && v.is_zero()) throw ConfigError("tangent must be nonzero", ptr);
  }
  for (const auto& r : rs.positive_roots())
    if (pairing(cfg.sigma0, r.coroot) <= 1)
      throw ConfigError("sigma0 " + cfg.sigma0.str() + " is outside the convergence cone: <sigma0, (" +
                            r.label + ")^vee> = " + to_string(pairing(cfg.sigma0, r.coroot)) +
                            " <= 1",
                        "/sigma0");
  if (auto pair = coincident_pair(rs, cfg.sigma0))
    throw ConfigError("sigma0 " + cfg.sigma0.str() + " is not generic: the segment to 0 meets S_" +
                          rs.root(pair->first).label + " and S_" + rs.root(pair->second).label +
                          " at the same point; try sigma0 = " + suggest_sigma0(cfg).str(),
                      "/sigma0");
}

std::vector<CrossingEvent> stage1_crossings(const DeformationConfig& cfg) {
  validate_config(cfg);
  const auto& rs = *cfg.root_system;
  std::vector<CrossingEvent> out;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const auto& r = rs.root(k);
    const Rational p = pairing(cfg.sigma0, r.coroot);
    CrossingEvent e;
    e.root = k;
    e.t = 1 - Rational(1) / p;
    e.point = (Rational(1) / p) * cfg.sigma0;
    e.z = line_coordinate(e.point, Rational(1, 2) * r.weight, cfg.tangents[k]);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<PointEvent> stage2_point_events(const DeformationConfig& cfg, std::size_t root,
                                            const CrossingEvent& event) {
  const auto& rs = *cfg.root_system;
  const auto& r = rs.root(root);
  const WeightVector base = Rational(1, 2) * r.weight;
  const WeightVector& v = cfg.tangents.at(root);
  const FactoredRational res = hyperplane_residue(build_db(rs), r.coroot, base, v);
  std::vector<PointEvent> out;
  if (rs.rank() == 1) {
    const Rational value = res.evaluate({Rational(0)});
    out.push_back({root, base, LaurentData{0, 1, value, value, true}});
    return out;
  }
  for (const auto& p : divisor(res)) {
    if (p.order <= 0) continue;
    if (p.point == event.z)
      throw ConfigError("Res_{S_" + r.label + "} D_B has a pole at the crossing point z = " +
                            to_string(p.point) + "; sigma0 is not generic, try sigma0 = " +
                            suggest_sigma0(cfg).str(),
                        "/sigma0");
  }
  for (const auto& p : real_poles_in_interval(res, Interval::swept(0, event.z))) {
    PointEvent e;
    e.root = root;
    e.location = base + p.point * v;
    e.laurent = laurent_at(res, p.point);
    out.push_back(std::move(e));
  }
  return out;
}

std::string estar_tag(const WeightVector& location) { return "E*[" + location.str() + "]"; }

SpectralReport discrete_functional(const DeformationConfig& cfg) {
  const auto crossings = stage1_crossings(cfg);
  const auto& rs = *cfg.root_system;
  SpectralReport rep;
  rep.group = rs.label();
  rep.sigma0 = cfg.sigma0;
  rep.tangents = cfg.tangents;
  rep.continuous_2d =
      "integral over sigma0 + i a^* of eta^(Lambda) D_B(Lambda) E*_B(Lambda) dLambda, shifted to "
      "i a^*";
  rep.measure_convention =
      "Haar measure on i a^* normalized so that the lattice generated by the fundamental weights "
      "has covolume 1; a line integral on S_delta in the coordinate z of delta/2 + z v_delta "
      "carries the factor |det[v_delta, nu_delta]| with <nu_delta, delta^vee> = 1";
  std::set<WeightVector> support;
  for (const auto& c : crossings) {
    const auto& r = rs.root(c.root);
    HyperplaneData h;
    h.root = c.root;
    h.base = Rational(1, 2) * r.weight;
    h.direction = cfg.tangents[c.root];
    h.residue = hyperplane_residue(build_db(rs), r.coroot, h.base, h.direction);
    h.crossing = c;
    h.orientation = orientation_factor(r.coroot, h.direction, rs.rank() == 1 ? Rational(1) : c.z);
    h.events = stage2_point_events(cfg, c.root, c);
    for (const auto& p : divisor(h.residue))
      if (p.order > 0 && p.point == 0) h.boundary_poles.push_back(p);
    if (rs.rank() == 2) {
      std::set<Rational> seen;
      for (const auto& g : rs.positive_roots()) {
        const Rational den = pairing(h.direction, g.coroot);
        if (den == 0) continue;
        const Rational z = (1 - pairing(h.base, g.coroot)) / den;
        if (!Interval::swept(0, c.z).contains(z) || !seen.insert(z).second) continue;
        const LaurentData l = laurent_at(h.residue, z, false);
        if (l.order <= 0) h.quiet_points.push_back({c.root, h.base + z * h.direction, l});
      }
    }
    for (const auto& e : h.events) {
      auto add = [&](std::vector<WeightVector> dirs, const Rational& coeff, const char* subtag) {
        const Rational value = h.orientation * coeff;
        if (value == 0) return;
        rep.discrete.push_back({e.location, std::move(dirs), value, estar_tag(e.location), subtag,
                                c.root, e.laurent.order});
        support.insert(e.location);
      };
      if (e.laurent.order == 1) {
        add({}, e.laurent.res, "simple");
      } else if (e.laurent.order == 2) {
        add({h.direction}, e.laurent.lead, "leading");
        add({}, e.laurent.res, "nonleading");
      }
    }
    rep.continuous_1d.push_back(std::move(h));
  }
  rep.support.assign(support.begin(), support.end());
  return rep;
}

CollapsedTerm collapse_derivatives(const SpectralReport& report, const RootSystem& rs,
                                   const WeightVector& location) {
  CollapsedTerm out;
  out.location = location;
  out.estar_tag = estar_tag(location);
  out.plain = 0;
  out.derivative = WeightVector::zero(rs.rank());
  for (const auto& t : report.discrete) {
    if (!(t.location == location)) continue;
    if (t.estar_tag != out.estar_tag) throw MathError("terms at one point carry different E* tags");
    ++out.merged_terms;
    if (t.derivative_directions.empty())
      out.plain += t.coefficient;
    else if (t.derivative_directions.size() == 1)
      out.derivative += t.coefficient * t.derivative_directions.front();
    else
      throw MathError("higher-order derivative terms cannot be collapsed to a vector");
  }
  out.derivative_root_coords = rs.simple_coords_of(out.derivative);
  return out;
}

TotalFunctional total_functional(const SpectralReport& report, const RootSystem& rs) {
  TotalFunctional out;
  for (const auto& loc : report.support) {
    const auto c = collapse_derivatives(report, rs, loc);
    out.emplace(loc, std::make_pair(c.plain, c.derivative));
  }
  return out;
}

AuditResult path_independence_audit(const DeformationConfig& cfg,
                                    const std::vector<WeightVector>& alternatives) {
  AuditResult out;
  const auto& rs = *cfg.root_system;
  std::vector<WeightVector> all{cfg.sigma0};
  all.insert(all.end(), alternatives.begin(), alternatives.end());
  for (const auto& s : all) {
    DeformationConfig c = cfg;
    c.sigma0 = s;
    out.sigma0s.push_back(s);
    out.totals.push_back(total_functional(discrete_functional(c), rs));
  }
  const auto& ref = out.totals.front();
  for (std::size_t k = 1; k < out.totals.size(); ++k) {
    const auto& cur = out.totals[k];
    std::set<WeightVector> locs;
    for (const auto& [l, v] : ref) locs.insert(l);
    for (const auto& [l, v] : cur) locs.insert(l);
    for (const auto& l : locs) {
      const auto a = ref.find(l), b = cur.find(l);
      auto show = [](const TotalFunctional::const_iterator& it, const TotalFunctional& m) {
        if (it == m.end()) return std::string("absent");
        return "plain " + to_string(it->second.first) + ", derivative " + it->second.second.str();
      };
      if (a == ref.end() || b == cur.end() || a->second != b->second)
        out.diffs.push_back("at " + l.str() + ": sigma0 " + all[0].str() + " gives " +
                            show(a, ref) + "; sigma0 " + all[k].str() + " gives " + show(b, cur));
    }
  }
  out.pass = out.diffs.empty();
  return out;
}

}  // namespace eisenres
