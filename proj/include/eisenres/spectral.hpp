#pragma once

// Two-stage contour deformation at the level of D_B.  Stage I pushes the
// two-dimensional contour from sigma0 to the origin along a straight segment
// and collects one residue contour per polar hyperplane; Stage II pushes each
// of those along its hyperplane to delta/2 and collects the point poles.  The
// test transform eta^ stays formal: the result is a linear functional in
// evaluations and directional derivatives of eta^.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eisenres/ratfield.hpp"
#include "eisenres/rootsys.hpp"

namespace eisenres {

struct DeformationConfig {
  std::shared_ptr<const RootSystem> root_system;
  WeightVector sigma0;
  std::vector<WeightVector> tangents;  // one per positive root, tangent to S_delta
};

WeightVector default_sigma0(const RootSystem& rs);
std::vector<WeightVector> default_tangents(const RootSystem& rs);
/// Config with default sigma0 and tangents.
DeformationConfig default_config(std::shared_ptr<const RootSystem> rs);

/// Rejects configs outside the convergence cone, non-tangent directions and
/// non-generic start points.  Throws ConfigError.
void validate_config(const DeformationConfig& cfg);

/// A nearby generic start point.
WeightVector suggest_sigma0(const DeformationConfig& cfg);

struct CrossingEvent {
  std::size_t root = 0;
  WeightVector point;  // iota_delta
  Rational t;          // sigma(t) = (1 - t) sigma0
  Rational z;          // line coordinate in the (delta/2, v_delta) parameterization
};

struct PointEvent {
  std::size_t root = 0;
  WeightVector location;
  LaurentData laurent;
};

struct ContributionTerm {
  WeightVector location;
  std::vector<WeightVector> derivative_directions;  // empty: plain evaluation of eta^
  Rational coefficient;
  std::string estar_tag;  // "E*[(1, 1)]"
  std::string subtag;     // "simple", "leading" or "nonleading"
  std::size_t source_root = 0;
  int pole_order = 0;
};

struct HyperplaneData {
  std::size_t root = 0;
  WeightVector base;
  WeightVector direction;
  FactoredRational residue;  // Res_{S_delta} D_B in the line coordinate z
  CrossingEvent crossing;
  Rational orientation;      // sign(z_delta) * |det[v, nu]|
  std::vector<PointEvent> events;
  std::vector<PoleLocation> boundary_poles;  // poles at delta/2 itself, on the final contour
  /// Points of S_delta n S_gamma on the Stage-II path where the residue is
  /// regular: no contribution.
  std::vector<PointEvent> quiet_points;
};

struct SpectralReport {
  std::string group;
  WeightVector sigma0;
  std::vector<WeightVector> tangents;
  std::string continuous_2d;
  std::string measure_convention;
  std::vector<HyperplaneData> continuous_1d;
  std::vector<ContributionTerm> discrete;
  std::vector<WeightVector> support;  // sorted
};

std::vector<CrossingEvent> stage1_crossings(const DeformationConfig& cfg);

/// Point poles of Res_{S_delta} D_B crossed between z_delta and 0.
std::vector<PointEvent> stage2_point_events(const DeformationConfig& cfg, std::size_t root,
                                            const CrossingEvent& event);

SpectralReport discrete_functional(const DeformationConfig& cfg);

std::string estar_tag(const WeightVector& location);

struct CollapsedTerm {
  WeightVector location;
  std::string estar_tag;
  Rational plain;              // sum of plain coefficients
  WeightVector derivative;     // sum of coefficient * direction in weight coordinates
  RatVec derivative_root_coords;  // the same vector in the simple-root basis
  std::size_t merged_terms = 0;
};

/// Merges all terms at the location, assuming they carry a common E* factor.
CollapsedTerm collapse_derivatives(const SpectralReport& report, const RootSystem& rs,
                                   const WeightVector& location);

/// Location -> (plain coefficient, derivative vector): the total discrete
/// functional with terms at the same point merged.
using TotalFunctional = std::map<WeightVector, std::pair<Rational, WeightVector>>;
TotalFunctional total_functional(const SpectralReport& report, const RootSystem& rs);

struct AuditResult {
  bool pass = false;
  std::vector<WeightVector> sigma0s;
  std::vector<TotalFunctional> totals;
  std::vector<std::string> diffs;
};

AuditResult path_independence_audit(const DeformationConfig& cfg,
                                    const std::vector<WeightVector>& alternatives);

}  // namespace eisenres
