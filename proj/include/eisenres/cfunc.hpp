#pragma once

// Formal products of a factored rational function and powers of the completed
// zeta function xi at affine-linear arguments.  Arguments are stored modulo
// the functional equation xi(u) = xi(1 - u).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eisenres/ratfield.hpp"
#include "eisenres/rootsys.hpp"

namespace eisenres {

/// The representative of {u, 1 - u}: the one whose coefficient vector has a
/// positive first nonzero entry; for constant arguments the larger constant.
/// The flag is true when 1 - u was chosen.
std::pair<LinearForm, bool> canonicalize_xi(const LinearForm& arg);

class XiProduct {
 public:
  XiProduct() = default;  // the constant 1
  explicit XiProduct(FactoredRational rat) : rat_(std::move(rat)) {}
  static XiProduct xi(const LinearForm& arg, int exponent = 1);

  const FactoredRational& rat() const noexcept { return rat_; }
  const std::map<LinearForm, int>& xi_factors() const noexcept { return xi_; }
  bool is_one() const { return xi_.empty() && rat_.is_constant() && rat_.scalar() == 1; }

  /// Multiplies by xi(arg)^exponent.  MathError for the constant arguments
  /// 0 and 1, where xi has its poles.
  XiProduct& mul_xi(const LinearForm& arg, int exponent);
  XiProduct& operator*=(const XiProduct& o);
  XiProduct& operator/=(const XiProduct& o);
  XiProduct& operator*=(const FactoredRational& f);
  friend XiProduct operator*(XiProduct a, const XiProduct& b) { return a *= b; }
  friend XiProduct operator/(XiProduct a, const XiProduct& b) { return a /= b; }
  XiProduct inverse() const;

  /// Lambda -> M Lambda in every argument.
  XiProduct substitute(const IntMatrix& m) const;
  /// Negates every variable coefficient (complex conjugation on the
  /// imaginary axis for real-coefficient products).
  XiProduct negate_variables() const;

  friend bool operator==(const XiProduct& a, const XiProduct& b) {
    return a.rat_ == b.rat_ && a.xi_ == b.xi_;
  }

  /// "xi(s+1/2)/xi(s+3/2)"; forms are printed with monic variable part when
  /// possible.
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  FactoredRational rat_;
  std::map<LinearForm, int> xi_;
};

/// c(w, Lambda) = prod_{delta>0, w delta<0} xi(<Lambda,delta^vee>) / xi(1 + <Lambda,delta^vee>).
XiProduct build_c(const RootSystem& rs, const WeylElement& w);

struct CocycleResult {
  bool pass = false;
  XiProduct witness;  // c(ww', .) / (c(w, w'.) c(w', .)); 1 on success
};

CocycleResult cocycle_check(const RootSystem& rs, std::size_t w, std::size_t w_prime);

struct CancelledPair {
  LinearForm restricted_arg;  // canonical one-variable argument
  LinearForm numerator_source;
  LinearForm denominator_source;
};

struct ResidueReport {
  bool has_pole = false;
  XiProduct value;  // one variable; meaningful when has_pole
  std::string note;
  std::vector<CancelledPair> cancelled;
  std::vector<LinearForm> polar_sources;  // xi arguments hitting 0 or 1 on S_delta
};

/// Res_{S_delta} c(w, .) on the line base + z * direction, using residue +1
/// of xi at 1 and -1 at 0.
ResidueReport residue_c_along(const RootSystem& rs, const WeylElement& w,
                              const CorootVector& delta_coroot, const WeightVector& base,
                              const WeightVector& direction);

struct ConstantTermMatrix {
  std::vector<std::size_t> labels;      // positive-root indices
  std::vector<WeightVector> tangents;   // v_i used on S_i
  std::vector<std::vector<std::size_t>> sigma;  // Weyl indices sigma_ij
  std::vector<std::vector<XiProduct>> entries;
  std::vector<std::vector<ResidueReport>> reports;
};

/// Tangents used for the A2 constant-term matrix: v_alpha = varpi_beta,
/// v_beta = -varpi_alpha, v_gamma = varpi_alpha - varpi_beta.
std::vector<WeightVector> a2_matrix_tangents();

/// n_ij(s) = xi(2) * Res_{S_i} c(sigma_ij, .)(delta_i/2 + s v_i), where
/// sigma_ij sends delta_i to -delta_j.
ConstantTermMatrix n_matrix(const RootSystem& rs, const std::vector<WeightVector>& tangents);
ConstantTermMatrix n_matrix(const RootSystem& rs);

struct RankOneResult {
  bool pass = false;
  std::vector<std::string> witnesses;
};

/// n_ij n_11 = n_i1 n_1j and n_ij(s) = n_ji(-s) for all i, j.
RankOneResult rank_one_check(const std::vector<std::vector<XiProduct>>& m);

XiProduct bar_involution(const XiProduct& x);

}  // namespace eisenres
