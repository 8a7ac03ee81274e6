#include "eisenres/arthur.hpp"

#include <algorithm>
#include <cstdlib>

namespace eisenres {

SL2Multiset sl2_from_weights(const std::vector<int>& weights) {
  std::map<int, int> count;
  for (int w : weights) ++count[w];
  for (const auto& [w, c] : count) {
    const auto it = count.find(-w);
    const int mirror = it == count.end() ? 0 : it->second;
    if (mirror != c)
      throw MathError("weight multiset is not symmetric: weight " + std::to_string(w) +
                      " occurs " + std::to_string(c) + " times but " + std::to_string(-w) +
                      " occurs " + std::to_string(mirror) + " times");
  }
  auto cnt = [&](int w) {
    const auto it = count.find(w);
    return it == count.end() ? 0 : it->second;
  };
  const int top = count.empty() ? 0 : count.rbegin()->first;
  SL2Multiset out;
  for (int l = 1; l <= top + 1; ++l) {
    const int m = cnt(l - 1) - cnt(l + 1);
    if (m < 0)
      throw MathError("weight multiset is not an SL(2) representation: m(" + std::to_string(l) +
                      ") = " + std::to_string(m));
    if (m > 0) out[l] = m;
  }
  std::vector<int> sorted = weights;
  std::sort(sorted.begin(), sorted.end());
  if (sl2_weights(out) != sorted)
    throw MathError("weight multiset is not an SL(2) representation (weight strings do not close)");
  return out;
}

std::vector<int> sl2_weights(const SL2Multiset& m) {
  std::vector<int> out;
  for (const auto& [l, mult] : m)
    for (int k = 0; k < mult; ++k)
      for (int w = -(l - 1); w <= l - 1; w += 2) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

int sl2_dimension(const SL2Multiset& m) {
  int d = 0;
  for (const auto& [l, mult] : m) d += l * mult;
  return d;
}

std::string sl2_str(const SL2Multiset& m) {
  if (m.empty()) return "0";
  std::string out;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second != 1) out += std::to_string(it->second) + " ";
    out += "V_" + std::to_string(it->first);
  }
  return out;
}

SL2Multiset clebsch_gordan(int a, int b) {
  if (a < 1 || b < 1) throw ConfigError("Clebsch-Gordan needs a, b >= 1");
  SL2Multiset out;
  for (int l = std::abs(a - b) + 1; l <= a + b - 1; l += 2) out[l] = 1;
  return out;
}

KappaMarking principal_marking(const LeviDatum& levi) { return {levi.two_rho_m, true}; }

KappaMarking user_marking(const RootSystem& rs, const LeviDatum& levi, const WeightVector& h) {
  if (h.size() != rs.rank())
    throw ConfigError("kappa marking h must have " + std::to_string(rs.rank()) + " entries",
                      "/kappa/h");
  for (const auto i : levi.parabolic_subset) {
    const Rational v = pairing(h, CorootVector::unit(rs.rank(), i));
    if (v != 0 && v != 1 && v != 2)
      throw ConfigError("kappa marking must pair to 0, 1 or 2 with the Levi simple coroot " +
                            rs.simple_names()[i] + ", got " + to_string(v),
                        "/kappa/h/" + std::to_string(i));
  }
  return {h, false};
}

std::map<int, std::vector<int>> kappa_weights(const RootSystem& rs, const LeviDatum& levi,
                                              const KappaMarking& kappa) {
  std::map<int, std::vector<int>> out;
  for (const auto& n : levi.nilradical_coroots) {
    const Rational w = pairing(kappa.h, n.coroot);
    if (!is_integer(w))
      throw ConfigError("kappa marking gives the non-integral weight " + to_string(w) + " on (" +
                        rs.root(n.root).label + ")^vee");
    out[n.level].push_back(static_cast<int>(numerator_of(w)));
  }
  for (auto& [j, ws] : out) std::sort(ws.begin(), ws.end());
  return out;
}

std::map<int, SL2Multiset> level_decomposition(const RootSystem& rs, const LeviDatum& levi,
                                               const KappaMarking& kappa) {
  std::map<int, SL2Multiset> out;
  for (const auto& [j, ws] : kappa_weights(rs, levi, kappa)) out[j] = sl2_from_weights(ws);
  return out;
}

FactoredRational q_from_levels(const std::map<int, SL2Multiset>& levels) {
  FactoredRational q;
  for (const auto& [j, m] : levels)
    for (const auto& [l, mult] : m) {
      q.mul_form(LinearForm(Rational(-(l + 1), 2), {Rational(j)}), mult);
      q.mul_form(LinearForm(Rational(l - 1, 2), {Rational(j)}), -mult);
    }
  return q;
}

FactoredRational q_series(const RootSystem& rs, const LeviDatum& levi, const KappaMarking& kappa) {
  return q_from_levels(level_decomposition(rs, levi, kappa));
}

FactoredRational parabolic_residue(const RootSystem& rs, const LeviDatum& levi) {
  if (rs.rank() == 1) return build_db(rs);
  if (rs.rank() != 2) throw ConfigError("parabolic residue comparison supports rank <= 2");
  const std::size_t levi_simple = levi.parabolic_subset.front();
  const auto& delta = rs.root(rs.simple_root_index(levi_simple));
  return hyperplane_residue(build_db(rs), delta.coroot, Rational(1, 2) * delta.weight,
                            rs.fundamental_weight(levi.excluded_simple));
}

int SpehDatum::n() const {
  int n = 0;
  for (const auto& b : blocks) n += b.a * b.d;
  return n;
}

std::vector<MatchedPair> matched_pairs(const SpehDatum& speh) {
  std::vector<MatchedPair> out;
  for (std::size_t i = 0; i < speh.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < speh.blocks.size(); ++j) {
      const auto& bi = speh.blocks[i];
      const auto& bj = speh.blocks[j];
      if (bi.class_id != bj.class_id) continue;
      if (bi.d != bj.d)
        throw ConfigError("blocks " + std::to_string(i) + " and " + std::to_string(j) +
                              " share the class \"" + bi.class_id + "\" but have different d",
                          "/speh/blocks/" + std::to_string(j) + "/d");
      out.push_back({i, j, clebsch_gordan(bi.a, bj.a)});
    }
  return out;
}

FactoredRational d_gln(const SpehDatum& speh) {
  const std::size_t k = speh.blocks.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::string ptr = "/speh/blocks/" + std::to_string(i);
    if (speh.blocks[i].a < 1) throw ConfigError("block a must be >= 1", ptr + "/a");
    if (speh.blocks[i].d < 1) throw ConfigError("block d must be >= 1", ptr + "/d");
  }
  FactoredRational out;
  for (const auto& p : matched_pairs(speh)) {
    RatVec x(k, Rational(0));
    x[p.i] = 1;
    x[p.j] = -1;
    for (const auto& [l, mult] : p.decomposition) {
      out.mul_form(LinearForm(Rational(-(l + 1), 2), x), mult);
      out.mul_form(LinearForm(Rational(l - 1, 2), x), -mult);
    }
  }
  return out;
}

}  // namespace eisenres
