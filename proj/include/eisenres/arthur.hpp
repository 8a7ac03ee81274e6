#pragma once

// Pole predictors built from SL(2) data: weights of an SL(2) marking on the
// nilradical coroots, graded by level, decomposed into irreducibles V_l, and
// turned into the rational functions Q(s), Q_P(kappa, s) and D_P(pi, Lambda).

#include <map>
#include <string>
#include <vector>

#include "eisenres/ratfield.hpp"
#include "eisenres/rootsys.hpp"

namespace eisenres {

/// l -> m(l) for a representation sum_l V_l^{m(l)}; only positive m stored.
using SL2Multiset = std::map<int, int>;

SL2Multiset sl2_from_weights(const std::vector<int>& weights);
/// Weights of sum_l V_l^{m(l)}, sorted ascending.
std::vector<int> sl2_weights(const SL2Multiset& m);
int sl2_dimension(const SL2Multiset& m);
std::string sl2_str(const SL2Multiset& m);  // "V_2 + 2 V_1"

SL2Multiset clebsch_gordan(int a, int b);

struct KappaMarking {
  WeightVector h;
  bool principal = true;
};

/// h = 2 rho_M.
KappaMarking principal_marking(const LeviDatum& levi);
/// A user-supplied marking; <h, alpha^vee> must lie in {0, 1, 2} on the
/// Levi's simple coroots.
KappaMarking user_marking(const RootSystem& rs, const LeviDatum& levi, const WeightVector& h);

/// Level j -> weights <h, gamma^vee> of the nilradical coroots at that level.
std::map<int, std::vector<int>> kappa_weights(const RootSystem& rs, const LeviDatum& levi,
                                              const KappaMarking& kappa);

/// Level j -> decomposition of r_j.
std::map<int, SL2Multiset> level_decomposition(const RootSystem& rs, const LeviDatum& levi,
                                               const KappaMarking& kappa);

/// prod_j prod_l ((js - (l+1)/2) / (js + (l-1)/2))^{m_j(l)} in one variable s.
FactoredRational q_from_levels(const std::map<int, SL2Multiset>& levels);
FactoredRational q_series(const RootSystem& rs, const LeviDatum& levi, const KappaMarking& kappa);

/// Res_{S_delta} D_B on the hyperplane of the Levi's simple root, based at
/// delta/2 in the direction varpi_P; for rank one, D_B itself.
FactoredRational parabolic_residue(const RootSystem& rs, const LeviDatum& levi);

struct SpehBlock {
  int a = 1;
  int d = 1;
  std::string class_id;
};

struct SpehDatum {
  std::vector<SpehBlock> blocks;
  int n() const;
};

struct MatchedPair {
  std::size_t i = 0, j = 0;
  SL2Multiset decomposition;
};

/// Pairs i < j with equal class; ConfigError when equal classes have
/// different d.
std::vector<MatchedPair> matched_pairs(const SpehDatum& speh);

/// D_P(pi, Lambda) in the variables s_1..s_k with <Lambda, alpha_ij^vee> = s_i - s_j.
FactoredRational d_gln(const SpehDatum& speh);

}  // namespace eisenres
