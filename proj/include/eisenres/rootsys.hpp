#pragma once

// Root data of split rank-2 groups (and type A in general rank) in the
// coordinates used throughout the engine: weights in the fundamental-weight
// basis, coroots in the simple-coroot basis.  With these choices the pairing
// <Lambda, delta^vee> is a plain dot product.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eisenres/rational.hpp"

namespace eisenres {

template <class Tag>
class Coords {
 public:
  Coords() = default;
  explicit Coords(RatVec coords) : coords_(std::move(coords)) {}
  Coords(std::initializer_list<Rational> coords) : coords_(coords) {}
  static Coords zero(std::size_t n) { return Coords(RatVec(n, Rational(0))); }
  static Coords unit(std::size_t n, std::size_t i) {
    RatVec v(n, Rational(0));
    v.at(i) = 1;
    return Coords(std::move(v));
  }

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const RatVec& coords() const noexcept { return coords_; }
  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  Coords& operator+=(const Coords& o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Coords& operator-=(const Coords& o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Coords& operator*=(const Rational& k) {
    for (auto& c : coords_) c *= k;
    return *this;
  }
  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator-(Coords a) { return a *= Rational(-1); }
  friend Coords operator*(const Rational& k, Coords a) { return a *= k; }
  friend Coords operator*(Coords a, const Rational& k) { return a *= k; }

  friend bool operator==(const Coords& a, const Coords& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Coords& a, const Coords& b) { return a.coords_ < b.coords_; }

  std::string str() const { return to_string(coords_); }

 private:
  void check_same(const Coords& o) const {
    if (o.size() != size()) throw ConfigError("coordinate dimension mismatch");
  }
  RatVec coords_;
};

struct WeightTag {};
struct CorootTag {};
using WeightVector = Coords<WeightTag>;
using CorootVector = Coords<CorootTag>;

/// <Lambda, sum n_j alpha_j^vee> = sum n_j s_j.
Rational pairing(const WeightVector& lambda, const CorootVector& coroot);

/// Small dense integer matrix; Weyl group elements act through these.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t n, std::size_t m) : rows_(n), cols_(m), a_(n * m, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  long long operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  long long& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const std::vector<long long>& data() const noexcept { return a_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  RatVec apply(const RatVec& v) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<long long> a_;
};

/// A Cartan matrix with entries C[i][j] = <alpha_j, alpha_i^vee>.
struct CartanSpec {
  std::string type_label;
  std::vector<std::vector<int>> cartan;

  /// "A1", "A1xA1", "A2", "B2", "G2" or "A<n>".  B2 uses alpha long and
  /// beta short; G2 uses alpha short and beta long.
  static CartanSpec from_label(const std::string& label);
};

struct PositiveRoot {
  std::vector<int> simple_coords;  // root as integer combination of simple roots
  WeightVector weight;
  CorootVector coroot;
  int length_sq = 0;            // short roots have length-squared 2
  std::string label;            // e.g. "alpha+beta", "3alpha+2beta"
  std::string alias;            // "gamma" for A2, "beta_1".."beta_6" for G2
};

struct WeylElement {
  IntMatrix matrix;                   // acts on fundamental-weight coordinates
  std::vector<int> word;              // lexicographically least reduced word
  std::vector<std::size_t> inverted;  // indices of delta > 0 with w(delta) < 0
  std::size_t length() const noexcept { return word.size(); }
  std::string word_string() const;    // "e" or "s0 s1 ..."
};

struct NilradicalCoroot {
  std::size_t root = 0;  // index into positive_roots()
  CorootVector coroot;
  int level = 0;
};

struct LeviDatum {
  std::size_t excluded_simple = 0;
  std::vector<std::size_t> parabolic_subset;  // simple roots of the Levi
  WeightVector two_rho_m;
  std::vector<NilradicalCoroot> nilradical_coroots;
  int max_level() const;
};

class RootSystem {
 public:
  static constexpr std::size_t kMaxTypeARank = 64;
  /// The Weyl group is enumerated only up to this rank.
  static constexpr std::size_t kMaxWeylRank = 5;

  explicit RootSystem(const CartanSpec& spec);

  const CartanSpec& spec() const noexcept { return spec_; }
  const std::string& label() const noexcept { return spec_.type_label; }
  std::size_t rank() const noexcept { return rank_; }

  const std::vector<PositiveRoot>& positive_roots() const noexcept { return roots_; }
  const PositiveRoot& root(std::size_t i) const { return roots_.at(i); }
  /// Index of the root with this label or alias ("alpha", "beta_6", "gamma").
  std::size_t root_index(const std::string& name) const;
  /// Index of the positive root +-weight, with the sign; nullopt if not a root.
  std::optional<std::pair<std::size_t, int>> find_root(const WeightVector& weight) const;
  std::size_t simple_root_index(std::size_t simple) const { return simple_roots_.at(simple); }

  const std::vector<std::string>& simple_names() const noexcept { return simple_names_; }
  std::size_t simple_index(const std::string& name) const;

  WeightVector fundamental_weight(std::size_t i) const { return WeightVector::unit(rank_, i); }
  const WeightVector& rho() const noexcept { return rho_; }
  /// Weight coordinates of an integer combination of simple roots.
  WeightVector weight_of(const std::vector<Rational>& simple_coords) const;
  /// Simple-root coordinates of a weight (inverse Cartan transform).
  RatVec simple_coords_of(const WeightVector& weight) const;
  /// (alpha_i, alpha_j) in the normalization where short roots have length 2.
  Rational simple_inner(std::size_t i, std::size_t j) const { return gram_.at(i).at(j); }

  bool weyl_enumerated() const noexcept { return !weyl_.empty(); }
  const std::vector<WeylElement>& weyl_elements() const;
  const WeylElement& weyl(std::size_t i) const { return weyl_.at(i); }
  std::size_t identity_index() const noexcept { return 0; }
  std::size_t longest_index() const noexcept { return weyl_.size() - 1; }
  std::size_t index_of(const IntMatrix& m) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;  // index of w_a w_b
  std::size_t inverse(std::size_t a) const;
  /// The shortest element sending positive root i to target_sign * (positive
  /// root j), if any.  Unique in type A2.
  std::optional<std::size_t> element_sending(std::size_t i, std::size_t j, int target_sign) const;

 private:
  void build_roots();
  void build_weyl();

  CartanSpec spec_;
  std::size_t rank_ = 0;
  std::vector<std::vector<Rational>> gram_;
  std::vector<Rational> simple_length_sq_;
  std::vector<PositiveRoot> roots_;
  std::vector<std::size_t> simple_roots_;
  std::vector<std::string> simple_names_;
  std::map<RatVec, std::size_t> root_by_weight_;
  WeightVector rho_;
  std::vector<WeylElement> weyl_;
  std::map<std::vector<long long>, std::size_t> weyl_by_matrix_;
};

RootSystem build_root_system(const CartanSpec& spec);

WeightVector weyl_action(const WeylElement& w, const WeightVector& lambda);

LeviDatum levi_datum(const RootSystem& rs, std::size_t excluded_simple);

}  // namespace eisenres
