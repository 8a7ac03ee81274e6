#include "eisenres/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eisenres {

Rational pairing(const WeightVector& lambda, const CorootVector& coroot) {
  if (lambda.size() != coroot.size())
    throw ConfigError("pairing: weight has dimension " + std::to_string(lambda.size()) +
                      " but coroot has dimension " + std::to_string(coroot.size()));
  Rational out = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) out += lambda[i] * coroot[i];
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ConfigError("matrix dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const long long aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatVec IntMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_) throw ConfigError("matrix/vector dimension mismatch");
  RatVec out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::string WeylElement::word_string() const {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += 's' + std::to_string(word[i]);
  }
  return out;
}

int LeviDatum::max_level() const {
  int m = 0;
  for (const auto& n : nilradical_coroots) m = std::max(m, n.level);
  return m;
}

namespace {

std::vector<std::vector<int>> type_a(std::size_t n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

std::vector<std::string> default_simple_names(std::size_t rank) {
  if (rank == 1) return {"alpha"};
  if (rank == 2) return {"alpha", "beta"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back("alpha_" + std::to_string(i + 1));
  return out;
}

std::string root_label(const std::vector<int>& c, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    if (!out.empty()) out += '+';
    if (c[j] != 1) out += std::to_string(c[j]);
    out += names[j];
  }
  return out;
}

void validate_cartan(const std::vector<std::vector<int>>& c) {
  const std::size_t n = c.size();
  if (n == 0) throw ConfigError("empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) throw ConfigError("Cartan matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const std::string where = "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (i == j && c[i][j] != 2)
        throw ConfigError("Cartan entry " + where + " = " + std::to_string(c[i][j]) +
                          " must be 2");
      if (i != j && c[i][j] > 0)
        throw ConfigError("Cartan entry " + where + " = " + std::to_string(c[i][j]) +
                          " must be <= 0");
      if (i != j && (c[i][j] == 0) != (c[j][i] == 0))
        throw ConfigError("Cartan entry " + where + " breaks the zero pattern symmetry");
      if (i != j && c[i][j] * c[j][i] > 3)
        throw ConfigError("Cartan entry " + where + " = " + std::to_string(c[i][j]) +
                          " is not of finite type");
    }
  }
}

}  // namespace

CartanSpec CartanSpec::from_label(const std::string& label) {
  if (label == "A1") return {label, {{2}}};
  if (label == "A1xA1") return {label, {{2, 0}, {0, 2}}};
  if (label == "B2") return {label, {{2, -1}, {-2, 2}}};
  if (label == "G2") return {label, {{2, -3}, {-1, 2}}};
  if (label.size() >= 2 && label[0] == 'A' &&
      std::all_of(label.begin() + 1, label.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    std::size_t n = 0;
    try {
      n = std::stoul(label.substr(1));
    } catch (const std::exception&) {
      throw ConfigError("unsupported group \"" + label + "\"");
    }
    if (n == 0 || n > RootSystem::kMaxTypeARank)
      throw ConfigError("unsupported type-A rank in \"" + label + "\" (1.." +
                        std::to_string(RootSystem::kMaxTypeARank) + ")");
    return {label, type_a(n)};
  }
  throw ConfigError("unsupported group \"" + label +
                    "\" (expected A1, A1xA1, A2, B2, G2 or A<n>)");
}

RootSystem::RootSystem(const CartanSpec& spec) : spec_(spec), rank_(spec.cartan.size()) {
  validate_cartan(spec_.cartan);
  const auto& c = spec_.cartan;

  // |alpha_j|^2 = |alpha_i|^2 C[i][j] / C[j][i]; propagate per connected component.
  simple_length_sq_.assign(rank_, Rational(0));
  for (std::size_t start = 0; start < rank_; ++start) {
    if (simple_length_sq_[start] != 0) continue;
    std::vector<std::size_t> component{start};
    simple_length_sq_[start] = 1;
    for (std::size_t k = 0; k < component.size(); ++k) {
      const std::size_t i = component[k];
      for (std::size_t j = 0; j < rank_; ++j) {
        if (j == i || c[i][j] == 0) continue;
        const Rational d = simple_length_sq_[i] * c[i][j] / c[j][i];
        if (simple_length_sq_[j] == 0) {
          simple_length_sq_[j] = d;
          component.push_back(j);
        } else if (simple_length_sq_[j] != d) {
          throw ConfigError("Cartan matrix is not symmetrizable");
        }
      }
    }
    Rational least = simple_length_sq_[start];
    for (auto i : component) least = std::min(least, simple_length_sq_[i]);
    for (auto i : component) simple_length_sq_[i] *= Rational(2) / least;
  }
  gram_.assign(rank_, std::vector<Rational>(rank_, Rational(0)));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) gram_[i][j] = c[i][j] * simple_length_sq_[i] / 2;

  simple_names_ = default_simple_names(rank_);
  build_roots();
  if (rank_ <= kMaxWeylRank) build_weyl();
}

void RootSystem::build_roots() {
  const auto& c = spec_.cartan;
  std::vector<std::vector<int>> found;
  std::map<std::vector<int>, bool> seen;
  for (std::size_t i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    found.push_back(e);
    seen[e] = true;
  }
  const std::size_t cap = 4 * rank_ * rank_ + 64;
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (std::size_t i = 0; i < rank_; ++i) {
      std::vector<int> g = found[k];
      long long p = 0;
      for (std::size_t j = 0; j < rank_; ++j) p += static_cast<long long>(g[j]) * c[i][j];
      g[i] -= static_cast<int>(p);
      if (std::all_of(g.begin(), g.end(), [](int x) { return x <= 0; })) continue;
      if (!seen.count(g)) {
        seen[g] = true;
        found.push_back(g);
        if (found.size() > cap) throw ConfigError("Cartan matrix is not of finite type");
      }
    }
  }

  if (spec_.type_label == "G2") {
    std::vector<std::vector<int>> ordered{{0, 1}, {1, 1}, {3, 2}, {2, 1}, {3, 1}, {1, 0}};
    auto a = found, b = ordered;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw MathError("unexpected G2 root set");
    found = std::move(ordered);
  } else {
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
      const int ha = std::accumulate(a.begin(), a.end(), 0);
      const int hb = std::accumulate(b.begin(), b.end(), 0);
      if (ha != hb) return ha < hb;
      return a > b;
    });
  }

  roots_.clear();
  for (std::size_t k = 0; k < found.size(); ++k) {
    const auto& g = found[k];
    PositiveRoot r;
    r.simple_coords = g;
    Rational len = 0;
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) len += g[i] * g[j] * gram_[i][j];
    if (!is_integer(len)) throw MathError("non-integral root length");
    r.length_sq = static_cast<int>(numerator_of(len));
    RatVec w(rank_, Rational(0)), cv(rank_, Rational(0));
    for (std::size_t i = 0; i < rank_; ++i) {
      for (std::size_t j = 0; j < rank_; ++j) w[i] += g[j] * spec_.cartan[i][j];
      cv[i] = g[i] * simple_length_sq_[i] / len;
    }
    r.weight = WeightVector(std::move(w));
    r.coroot = CorootVector(std::move(cv));
    r.label = root_label(g, simple_names_);
    if (spec_.type_label == "G2") r.alias = "beta_" + std::to_string(k + 1);
    if (spec_.type_label == "A2" && g == std::vector<int>{1, 1}) r.alias = "gamma";
    root_by_weight_[r.weight.coords()] = k;
    roots_.push_back(std::move(r));
  }
  simple_roots_.assign(rank_, 0);
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    const auto& g = roots_[k].simple_coords;
    if (std::accumulate(g.begin(), g.end(), 0) == 1)
      simple_roots_[std::find(g.begin(), g.end(), 1) - g.begin()] = k;
  }

  WeightVector sum = WeightVector::zero(rank_);
  for (const auto& r : roots_) sum += r.weight;
  rho_ = Rational(1, 2) * sum;
}

void RootSystem::build_weyl() {
  const auto& c = spec_.cartan;
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < rank_; ++i) {
    IntMatrix m = IntMatrix::identity(rank_);
    for (std::size_t k = 0; k < rank_; ++k) m(k, i) = (k == i ? 1 : 0) - c[k][i];
    gens.push_back(std::move(m));
  }
  weyl_.clear();
  weyl_by_matrix_.clear();
  WeylElement e;
  e.matrix = IntMatrix::identity(rank_);
  weyl_.push_back(e);
  weyl_by_matrix_[e.matrix.data()] = 0;
  for (std::size_t k = 0; k < weyl_.size(); ++k) {
    for (std::size_t i = 0; i < rank_; ++i) {
      IntMatrix m = weyl_[k].matrix * gens[i];
      if (weyl_by_matrix_.count(m.data())) continue;
      WeylElement w;
      w.word = weyl_[k].word;
      w.word.push_back(static_cast<int>(i));
      w.matrix = std::move(m);
      weyl_by_matrix_[w.matrix.data()] = weyl_.size();
      weyl_.push_back(std::move(w));
    }
  }
  for (auto& w : weyl_) {
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      const auto hit = find_root(WeightVector(w.matrix.apply(roots_[k].weight.coords())));
      if (!hit) throw MathError("Weyl element does not permute the roots");
      if (hit->second < 0) w.inverted.push_back(k);
    }
  }
}

const std::vector<WeylElement>& RootSystem::weyl_elements() const {
  if (weyl_.empty())
    throw MathError("Weyl group of " + label() + " is not enumerated (rank > " +
                    std::to_string(kMaxWeylRank) + ")");
  return weyl_;
}

std::size_t RootSystem::root_index(const std::string& name) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k].label == name || (!roots_[k].alias.empty() && roots_[k].alias == name)) return k;
  throw ConfigError("unknown root \"" + name + "\" in " + label());
}

std::optional<std::pair<std::size_t, int>> RootSystem::find_root(const WeightVector& weight) const {
  if (auto it = root_by_weight_.find(weight.coords()); it != root_by_weight_.end())
    return std::make_pair(it->second, 1);
  if (auto it = root_by_weight_.find((-weight).coords()); it != root_by_weight_.end())
    return std::make_pair(it->second, -1);
  return std::nullopt;
}

std::size_t RootSystem::simple_index(const std::string& name) const {
  for (std::size_t i = 0; i < simple_names_.size(); ++i)
    if (simple_names_[i] == name) return i;
  throw ConfigError("unknown simple root \"" + name + "\" in " + label());
}

WeightVector RootSystem::weight_of(const std::vector<Rational>& simple_coords) const {
  if (simple_coords.size() != rank_) throw ConfigError("simple-root coordinate dimension mismatch");
  RatVec w(rank_, Rational(0));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) w[i] += simple_coords[j] * spec_.cartan[i][j];
  return WeightVector(std::move(w));
}

RatVec RootSystem::simple_coords_of(const WeightVector& weight) const {
  if (weight.size() != rank_) throw ConfigError("weight dimension mismatch");
  // Solve C x = w by exact Gaussian elimination.
  std::vector<RatVec> a(rank_, RatVec(rank_ + 1));
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) a[i][j] = spec_.cartan[i][j];
    a[i][rank_] = weight[i];
  }
  for (std::size_t col = 0; col < rank_; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < rank_; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k <= rank_; ++k) a[r][k] -= f * a[col][k];
    }
  }
  RatVec x(rank_);
  for (std::size_t i = 0; i < rank_; ++i) x[i] = a[i][rank_] / a[i][i];
  return x;
}

std::size_t RootSystem::index_of(const IntMatrix& m) const {
  const auto it = weyl_by_matrix_.find(m.data());
  if (it == weyl_by_matrix_.end()) throw MathError("matrix is not a Weyl group element");
  return it->second;
}

std::size_t RootSystem::multiply(std::size_t a, std::size_t b) const {
  return index_of(weyl(a).matrix * weyl(b).matrix);
}

std::size_t RootSystem::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < weyl_.size(); ++b)
    if (multiply(a, b) == identity_index()) return b;
  throw MathError("Weyl element has no inverse");
}

std::optional<std::size_t> RootSystem::element_sending(std::size_t i, std::size_t j,
                                                       int target_sign) const {
  const WeightVector target = Rational(target_sign) * root(j).weight;
  for (std::size_t k = 0; k < weyl_elements().size(); ++k)
    if (weyl_action(weyl_[k], root(i).weight) == target) return k;
  return std::nullopt;
}

RootSystem build_root_system(const CartanSpec& spec) { return RootSystem(spec); }

WeightVector weyl_action(const WeylElement& w, const WeightVector& lambda) {
  return WeightVector(w.matrix.apply(lambda.coords()));
}

LeviDatum levi_datum(const RootSystem& rs, std::size_t excluded_simple) {
  if (excluded_simple >= rs.rank())
    throw ConfigError("excluded simple root index " + std::to_string(excluded_simple) +
                      " out of range");
  LeviDatum out;
  out.excluded_simple = excluded_simple;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (i != excluded_simple) out.parabolic_subset.push_back(i);
  out.two_rho_m = WeightVector::zero(rs.rank());
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const auto& r = rs.root(k);
    if (r.simple_coords[excluded_simple] == 0) {
      out.two_rho_m += r.weight;
      continue;
    }
    const Rational lvl = r.coroot[excluded_simple];
    if (!is_integer(lvl) || lvl <= 0) throw MathError("non-integral coroot level");
    out.nilradical_coroots.push_back({k, r.coroot, static_cast<int>(numerator_of(lvl))});
  }
  std::stable_sort(out.nilradical_coroots.begin(), out.nilradical_coroots.end(),
                   [](const auto& a, const auto& b) { return a.level < b.level; });
  return out;
}

}  // namespace eisenres
