#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "berncone/polynomial.hpp"

namespace berncone {

/// Compact domain Omega = { x : c_j(x) >= 0, j = 1..m } together with the
/// supremum of each constraint over Omega (supplied by the caller; computing
/// it exactly is itself polynomial optimisation). Holds both the raw c_j and
/// the normalised c^_j = c_j / sup (or c_j itself when the sup is zero), so
/// 0 <= c^_j <= 1 on Omega.
class SemiAlgebraicDomain {
 public:
  SemiAlgebraicDomain(std::vector<Polynomial> constraints, std::vector<Rational> sups);

  /// { theta : theta_j >= 0, 1 - sum theta >= 0 }; all sups are 1.
  static SemiAlgebraicDomain simplex(int n_vars);

  int n_vars() const { return n_vars_; }
  int constraint_count() const { return static_cast<int>(raw_.size()); }
  const Polynomial& raw_constraint(int j) const { return raw_.at(j); }
  const Polynomial& normalized_constraint(int j) const { return normalized_.at(j); }
  const Rational& sup_value(int j) const { return sups_.at(j); }

  /// True when the constraints are exactly the probability simplex in the
  /// canonical order produced by simplex(); enables the basis fast path.
  bool is_simplex() const;

  /// Largest constraint value seen on the step-1/grid_k unit-box grid
  /// restricted to Omega; a desk-scale sanity estimate for the caller's sup
  /// values (not a bound).
  std::vector<Rational> grid_sup_estimates(int grid_k = 64) const;

  /// Points of the same grid where some normalised constraint leaves [0,1];
  /// empty means the supplied sups passed the sampling check.
  std::vector<std::vector<Rational>> normalization_violations(int grid_k = 16) const;

 private:
  int n_vars_;
  std::vector<Polynomial> raw_;
  std::vector<Polynomial> normalized_;
  std::vector<Rational> sups_;
};

/// Spec-level constructor name; validates sups >= 0 and m >= 1.
SemiAlgebraicDomain normalize_domain(std::vector<Polynomial> constraints,
                                     std::vector<Rational> sups);

/// Index (alpha, beta) of one Krivine-Vasilescu product
/// c^^alpha (1-c^)^beta with |alpha| + |beta| <= d.
struct GeneratorIndex {
  MultiIndex alpha;
  MultiIndex beta;

  MultiIndex concatenated() const {
    MultiIndex joined = alpha;
    joined.insert(joined.end(), beta.begin(), beta.end());
    return joined;
  }
  friend bool operator<(const GeneratorIndex& lhs, const GeneratorIndex& rhs) {
    return lhs.concatenated() < rhs.concatenated();
  }
};

/// All C(2m+d, d) generator products of the degree-d cone, ordered
/// lexicographically by the concatenated (alpha, beta) index.
std::vector<std::pair<GeneratorIndex, Polynomial>> kv_generators(
    const SemiAlgebraicDomain& domain, int degree);

}  // namespace berncone
